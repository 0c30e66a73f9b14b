#include "scc/certificates.hpp"

#include <algorithm>
#include <string>

#include "scc/avoidance.hpp"

namespace scc {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void require(bool condition, const std::string& what) {
  if (!condition) throw MalformedCertificate(what);
}

void require_vertex(int v, int n, const char* what) {
  require(v >= 0 && v < n, std::string(what) + " vertex " + std::to_string(v) + " out of range");
}

void require_odd_count(std::size_t count, std::size_t walks) {
  require(count >= 3 && count % 2 == 1, "member count must be odd and at least 3, got " + std::to_string(count));
  require(walks == count, "walk count does not match member count");
}

}  // namespace

bool verify_weak_edge_asteroid(const Graph& g, const WeakEdgeAsteroid& w) {
  const int n = g.size();
  const int count = static_cast<int>(w.edges.size());
  require_odd_count(w.edges.size(), w.walks.size());
  for (const auto& e : w.edges) {
    require_vertex(e.x, n, "edge");
    require_vertex(e.y, n, "edge");
  }
  const int k = w.k();
  for (int i = 0; i < count; ++i) {
    const Walk& walk = w.walks[i];
    require(walk.size() >= 2, "walk " + std::to_string(i) + " has no edge");
    for (int v : walk) require_vertex(v, n, "walk");
    require(EdgeRef(walk[0], walk[1]) == w.edges[mod(i + k, count)],
            "walk " + std::to_string(i) + " does not begin with edge e_{i+k}");
    require(EdgeRef(walk[walk.size() - 2], walk.back()) == w.edges[mod(i + k + 1, count)],
            "walk " + std::to_string(i) + " does not end with edge e_{i+k+1}");
  }

  for (const auto& e : w.edges)
    if (!g.has_edge(e)) return false;
  for (int i = 0; i < count; ++i) {
    const Walk& walk = w.walks[i];
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
      const EdgeRef step(walk[j], walk[j + 1]);
      if (!g.has_edge(step) || !avoids(g, w.edges[i], step)) return false;
    }
  }
  return true;
}

bool verify_asteroid(const Graph& h, const Asteroid& a) {
  const int n = h.size();
  const int count = static_cast<int>(a.vertices.size());
  require_odd_count(a.vertices.size(), a.walks.size());
  for (int v : a.vertices) require_vertex(v, n, "asteroid");
  const int k = (count - 1) / 2;
  for (int i = 0; i < count; ++i) {
    const Walk& walk = a.walks[i];
    require(!walk.empty(), "walk " + std::to_string(i) + " is empty");
    for (int v : walk) require_vertex(v, n, "walk");
    const int from = a.vertices[mod(i + k, count)], to = a.vertices[mod(i + k + 1, count)];
    require((walk.front() == from && walk.back() == to) || (walk.front() == to && walk.back() == from),
            "walk " + std::to_string(i) + " does not connect x_{i+k} and x_{i+k+1}");
  }

  for (int i = 0; i < count; ++i) {
    const Walk& walk = a.walks[i];
    for (std::size_t j = 0; j + 1 < walk.size(); ++j)
      if (!h.adjacent(walk[j], walk[j + 1])) return false;
    for (int v : walk)
      if (h.adjacent(v, a.vertices[i])) return false;
  }
  return true;
}

WeakEdgeAsteroid extract_weak_edge_asteroid(const Graph& g, const InvertiblePair& ip) {
  const auto& path = ip.path;
  if (path.size() < 2 || path.front() != PairNode{ip.u, ip.v} || path.back() != PairNode{ip.v, ip.u})
    throw std::invalid_argument("extract_weak_edge_asteroid: path does not run from (u,v) to (v,u)");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (path[i] == path[i + 1] || !forces(g, path[i], path[i + 1]))
      throw std::invalid_argument("extract_weak_edge_asteroid: consecutive path nodes do not force");

  const int t = static_cast<int>(path.size()) - 1;
  // (u,v) forcing (v,u) directly would need the missing loop uu
  if (t < 2) throw std::logic_error("extract_weak_edge_asteroid: forcing path of length 1");

  // closed walk u_0 .. u_{2t-1}: u_i = p_i, u_{t+i} = q_i
  std::vector<int> u(2 * t);
  for (int i = 0; i < t; ++i) {
    u[i] = path[i].u;
    u[t + i] = path[i].v;
  }
  const auto at = [&](int i) { return u[mod(i, 2 * t)]; };
  const auto segment = [&](int from, int steps) {
    Walk w;
    for (int j = 0; j <= steps; ++j) w.push_back(at(from + j));
    return w;
  };

  WeakEdgeAsteroid w;
  if (t % 2 == 1) {
    for (int i = 0; i < t; ++i) {
      w.edges.emplace_back(at(2 * i), at(2 * i + 1));
      w.walks.push_back(segment(2 * i + t - 1, 3));
    }
  } else {
    for (int i = 0; i <= 2 * t - 2; ++i) {
      w.edges.emplace_back(at(i), at(i + 1));
      if (i <= t - 2)
        w.walks.push_back(segment(i + t - 1, 2));
      else if (i == t - 1)
        w.walks.push_back(segment(2 * t - 2, 3));
      else
        w.walks.push_back(segment(i - t, 2));
    }
  }
  if (!verify_weak_edge_asteroid(g, w))
    throw std::logic_error("extract_weak_edge_asteroid: extracted certificate fails verification");
  return w;
}

namespace {

bool induces_c4(const Graph& g, const EdgeRef& e, const EdgeRef& f) {
  if (e.is_loop() || f.is_loop() || e.intersects(f)) return false;
  const bool a = g.adjacent(e.x, f.x), b = g.adjacent(e.x, f.y);
  const bool c = g.adjacent(e.y, f.x), d = g.adjacent(e.y, f.y);
  return (a && d && !b && !c) || (b && c && !a && !d);
}

}  // namespace

std::pair<PairNode, PairNode> invertible_pair_from_wea(const Graph& g, const WeakEdgeAsteroid& w) {
  if (!verify_weak_edge_asteroid(g, w))
    throw std::invalid_argument("invertible_pair_from_wea: not a weak edge-asteroid of the graph");
  const int count = static_cast<int>(w.edges.size());
  const int k = w.k();

  // For each i pick u_i in e_i and v_{i+k} in e_{i+k}; when the two edges
  // induce a C4, u_i v_{i+k} must be an edge of that C4.
  std::vector<int> u_end(count), v_end(count);
  for (int i = 0; i < count; ++i) {
    const EdgeRef& e = w.edges[i];
    const EdgeRef& f = w.edges[mod(i + k, count)];
    const bool c4 = induces_c4(g, e, f);
    bool chosen = false;
    for (int a : {e.x, e.y}) {
      for (int b : {f.x, f.y})
        if (!c4 || g.adjacent(a, b)) {
          u_end[i] = a;
          v_end[mod(i + k, count)] = b;
          chosen = true;
          break;
        }
      if (chosen) break;
    }
  }

  const PairNode first{u_end[0], v_end[k]};
  const PairNode second = first.reversed();
  if (!build_pair_graph(g).same_component(first, second))
    throw std::logic_error("invertible_pair_from_wea: chained pairs are not connected in the pair graph");
  return {first, second};
}

Graph avoidance_complement_host(const Graph& g) { return reflexive_complement(build_avoidance_graph(g)); }

Asteroid wea_to_complement_asteroid(const Graph& g, const WeakEdgeAsteroid& w) {
  if (!verify_weak_edge_asteroid(g, w))
    throw std::invalid_argument("wea_to_complement_asteroid: not a weak edge-asteroid of the graph");
  const AvoidanceGraph ag = build_avoidance_graph(g);
  Asteroid a;
  for (const auto& e : w.edges) a.vertices.push_back(ag.index_of(e));
  for (const auto& walk : w.walks) {
    Walk seq;
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) seq.push_back(ag.index_of(EdgeRef(walk[j], walk[j + 1])));
    a.walks.push_back(std::move(seq));
  }
  if (!verify_asteroid(reflexive_complement(ag), a))
    throw std::logic_error("wea_to_complement_asteroid: re-encoded asteroid fails verification");
  return a;
}

namespace {

// Least edge with one end in e and the other in f that avoids `avoider`.
EdgeRef bridging_edge(const Graph& g, const EdgeRef& e, const EdgeRef& f, const EdgeRef& avoider) {
  std::optional<EdgeRef> best;
  for (int a : {e.x, e.y})
    for (int b : {f.x, f.y}) {
      const EdgeRef candidate(a, b);
      if (g.has_edge(candidate) && avoids(g, candidate, avoider) && (!best || candidate < *best)) best = candidate;
    }
  if (!best) throw std::logic_error("complement_asteroid_to_wea: no bridging edge between consecutive walk edges");
  return *best;
}

// Vertex walk traversing the edges of `route` in order, each sharing a vertex
// with the next.
Walk walk_along(const std::vector<EdgeRef>& route) {
  const EdgeRef& head = route.front();
  if (route.size() == 1) return {head.x, head.y};

  // enter the first edge so that its second vertex is shared with the next
  const int shared = route[1].contains(head.y) ? head.y : head.x;
  Walk walk{head.other(shared), shared};
  for (std::size_t j = 1; j < route.size(); ++j) {
    const EdgeRef& e = route[j];
    const int cur = walk.back();
    if (j + 1 == route.size()) {
      walk.push_back(e.other(cur));
      break;
    }
    const EdgeRef& next = route[j + 1];
    if (e.is_loop()) {
      walk.push_back(cur);
    } else if (next.contains(e.other(cur))) {
      walk.push_back(e.other(cur));
    } else {
      walk.push_back(e.other(cur));
      walk.push_back(cur);
    }
  }
  return walk;
}

}  // namespace

WeakEdgeAsteroid complement_asteroid_to_wea(const Graph& g, const Asteroid& a) {
  const AvoidanceGraph ag = build_avoidance_graph(g);
  if (!verify_asteroid(reflexive_complement(ag), a))
    throw std::invalid_argument("complement_asteroid_to_wea: not an asteroid of the avoidance complement");
  const int count = static_cast<int>(a.vertices.size());
  const int k = (count - 1) / 2;

  WeakEdgeAsteroid w;
  for (int x : a.vertices) w.edges.push_back(ag.edges[x]);
  for (int i = 0; i < count; ++i) {
    Walk seq = a.walks[i];
    if (seq.front() != a.vertices[mod(i + k, count)]) std::reverse(seq.begin(), seq.end());
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());

    std::vector<EdgeRef> route{ag.edges[seq.front()]};
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      const EdgeRef& e = ag.edges[seq[j]];
      const EdgeRef& f = ag.edges[seq[j + 1]];
      route.push_back(bridging_edge(g, e, f, w.edges[i]));
      route.push_back(f);
    }
    w.walks.push_back(walk_along(route));
  }
  if (!verify_weak_edge_asteroid(g, w))
    throw std::logic_error("complement_asteroid_to_wea: converted certificate fails verification");
  return w;
}

namespace {

class OrderingSearcher {
 public:
  OrderingSearcher(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.size()), budget_(budget), by_position_(n_, Bitset(n_)), placed_(n_, false) {}

  OrderingSearch run() {
    OrderingSearch result;
    const bool found = extend(0);
    result.nodes = nodes_;
    if (found) {
      result.ordering = VertexOrdering(order_);
      if (!is_slash_free_ordering(g_, *result.ordering))
        throw std::logic_error("search_strong_ordering: produced ordering contains a Slash");
    } else {
      result.exhausted = !out_of_budget_;
    }
    return result;
  }

 private:
  // A Slash in the prefix that was not there before must use the new vertex
  // as its lower row (by symmetry the right-column case is a transposed copy).
  bool creates_slash(int w) const {
    const Bitset& row_w = by_position_[w];
    for (int upper : order_) {
      Bitset zero_one = row_w;
      zero_one.subtract(by_position_[upper]);
      const int k = zero_one.first();
      if (k == zero_one.size()) continue;
      Bitset one_zero = by_position_[upper];
      one_zero.subtract(row_w);
      if (one_zero.last() > k) return true;
    }
    return false;
  }

  bool extend(int position) {
    if (position == n_) return true;
    for (int w = 0; w < n_; ++w) {
      if (placed_[w]) continue;
      if (budget_ != 0 && nodes_ >= budget_) {
        out_of_budget_ = true;
        return false;
      }
      ++nodes_;
      if (creates_slash(w)) continue;
      place(w, position);
      if (extend(position + 1)) return true;
      unplace(w, position);
      if (out_of_budget_) return false;
    }
    return false;
  }

  void place(int w, int position) {
    placed_[w] = true;
    order_.push_back(w);
    g_.closed_neighbourhood(w).for_each([&](int x) { by_position_[x].set(position); });
  }

  void unplace(int w, int position) {
    placed_[w] = false;
    order_.pop_back();
    g_.closed_neighbourhood(w).for_each([&](int x) { by_position_[x].reset(position); });
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<Bitset> by_position_;  // by_position_[x] bit p: x adjacent to the vertex at position p
  std::vector<bool> placed_;
  std::vector<int> order_;
};

}  // namespace

OrderingSearch search_strong_ordering(const Graph& g, std::uint64_t node_budget) {
  return OrderingSearcher(g, node_budget).run();
}

}  // namespace scc

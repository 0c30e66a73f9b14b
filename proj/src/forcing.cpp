#include "scc/forcing.hpp"

#include <algorithm>
#include <deque>

namespace scc {

bool forces(const Graph& g, PairNode p, PairNode q) {
  if (p == q) return true;
  return g.adjacent(p.u, q.u) && g.adjacent(p.v, q.v) && !g.adjacent(p.u, q.v) && !g.adjacent(p.v, q.u);
}

bool PairGraph::adjacent(PairNode p, PairNode q) const {
  const auto nb = neighbours(index(p));
  return std::binary_search(nb.begin(), nb.end(), index(q));
}

void PairGraph::label_components() {
  const int nodes = node_count();
  component_.assign(nodes, -1);
  component_count_ = 0;
  std::vector<int> stack;
  for (int s = 0; s < nodes; ++s) {
    if (component_[s] != -1) continue;
    const int c = component_count_++;
    component_[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : neighbours(x))
        if (component_[y] == -1) {
          component_[y] = c;
          stack.push_back(y);
        }
    }
  }
}

std::vector<PairNode> PairGraph::shortest_path(PairNode p, PairNode q) const {
  const int src = index(p), dst = index(q);
  if (component_[src] != component_[dst]) return {};
  std::vector<int> parent(node_count(), -1);
  parent[src] = src;
  std::deque<int> queue{src};
  while (!queue.empty() && parent[dst] == -1) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : neighbours(x))
      if (parent[y] == -1) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  std::vector<PairNode> path;
  for (int x = dst; x != src; x = parent[x]) path.push_back(node(x));
  path.push_back(p);
  std::reverse(path.begin(), path.end());
  return path;
}

PairGraph build_pair_graph(const Graph& g) {
  PairGraph pg;
  const int n = g.size();
  pg.n_ = n;
  const int nodes = pg.node_count();
  std::vector<long long> degree(nodes + 1, 0);

  auto sides = [&](int u, int v) {
    Bitset a = g.closed_neighbourhood(u);
    a.subtract(g.closed_neighbourhood(v));
    Bitset b = g.closed_neighbourhood(v);
    b.subtract(g.closed_neighbourhood(u));
    return std::pair{std::move(a), std::move(b)};
  };

#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < nodes; ++i) {
    const auto [u, v] = pg.node(i);
    const auto [a, b] = sides(u, v);
    // (u,v) lies in its own product exactly when uv is not an edge
    degree[i + 1] = static_cast<long long>(a.count()) * b.count() - (g.adjacent(u, v) ? 0 : 1);
  }
  for (int i = 0; i < nodes; ++i) degree[i + 1] += degree[i];
  pg.offsets_ = std::move(degree);
  pg.targets_.resize(pg.offsets_[nodes]);

#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < nodes; ++i) {
    const auto [u, v] = pg.node(i);
    const auto [a, b] = sides(u, v);
    long long out = pg.offsets_[i];
    a.for_each([&](int x) {
      b.for_each([&](int y) {
        const int j = pg.index({x, y});
        if (j != i) pg.targets_[out++] = j;
      });
    });
  }

  pg.label_components();
  return pg;
}

PairGraph build_pair_graph_serial(const Graph& g) {
  PairGraph pg;
  pg.n_ = g.size();
  const int nodes = pg.node_count();
  pg.offsets_.assign(nodes + 1, 0);
  for (int i = 0; i < nodes; ++i) {
    const PairNode p = pg.node(i);
    for (int j = 0; j < nodes; ++j)
      if (j != i && forces(g, p, pg.node(j))) pg.targets_.push_back(j);
    pg.offsets_[i + 1] = static_cast<long long>(pg.targets_.size());
  }
  pg.label_components();
  return pg;
}

std::optional<InvertiblePair> find_invertible_pair(const PairGraph& pg) {
  for (int i = 0; i < pg.node_count(); ++i) {
    const PairNode p = pg.node(i);
    if (pg.same_component(p, p.reversed())) return InvertiblePair{p.u, p.v, pg.shortest_path(p, p.reversed())};
  }
  return std::nullopt;
}

std::optional<InvertiblePair> find_invertible_pair(const Graph& g) {
  if (g.size() < 2) return std::nullopt;
  return find_invertible_pair(build_pair_graph(g));
}

}  // namespace scc

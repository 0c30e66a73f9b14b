#include "scc/avoidance.hpp"

#include <algorithm>
#include <string>

#include "scc/comparability.hpp"

namespace scc {

bool avoids(const Graph& g, const EdgeRef& e, const EdgeRef& f) {
  const auto in_range = [&](const EdgeRef& x) { return x.x >= 0 && x.y < g.size(); };
  if (!in_range(e) || !in_range(f) || !g.has_edge(e) || !g.has_edge(f))
    throw std::invalid_argument("avoids: argument is not an edge of the graph");
  if (e.intersects(f)) return false;

  const int u = e.x, u2 = e.y, v = f.x, v2 = f.y;
  if (e.is_loop() && f.is_loop()) return !g.adjacent(u, v);
  if (e.is_loop()) return !g.adjacent(u, v) && !g.adjacent(u, v2);
  if (f.is_loop()) return !g.adjacent(u, v) && !g.adjacent(u2, v);

  // Both edges present: the four vertices induce 2K2 (no cross edge), P4 (one
  // cross edge) or C4 (two cross edges forming a matching).
  const bool uv = g.adjacent(u, v), uv2 = g.adjacent(u, v2);
  const bool u2v = g.adjacent(u2, v), u2v2 = g.adjacent(u2, v2);
  const int cross = uv + uv2 + u2v + u2v2;
  if (cross <= 1) return true;
  if (cross == 2) return (uv && u2v2) || (uv2 && u2v);
  return false;
}

std::vector<EdgeRef> edges_with_loops(const Graph& g) {
  std::vector<EdgeRef> out;
  out.reserve(g.size() + g.edge_count());
  for (int v = 0; v < g.size(); ++v) out.emplace_back(v, v);
  for (const auto& e : g.edges()) out.push_back(e);
  return out;
}

int AvoidanceGraph::index_of(const EdgeRef& e) const {
  if (e.is_loop()) {
    if (e.x >= 0 && e.x < vertex_count) return e.x;
  } else {
    const auto it = std::lower_bound(edges.begin() + vertex_count, edges.end(), e);
    if (it != edges.end() && *it == e) return static_cast<int>(it - edges.begin());
  }
  throw std::invalid_argument("edge " + std::to_string(e.x) + "-" + std::to_string(e.y) +
                              " is not a vertex of the avoidance graph");
}

AvoidanceGraph build_avoidance_graph(const Graph& g) {
  AvoidanceGraph ag;
  ag.vertex_count = g.size();
  ag.edges = edges_with_loops(g);
  const int m = static_cast<int>(ag.edges.size());

  // common[i]: vertices adjacent to both endpoints of edge i
  std::vector<Bitset> common(m);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i)
    common[i] = g.closed_neighbourhood(ag.edges[i].x) & g.closed_neighbourhood(ag.edges[i].y);

  std::vector<Bitset> rows(m, Bitset(m));
#pragma omp parallel for schedule(dynamic, 32)
  for (int i = 0; i < m; ++i) {
    const EdgeRef& e = ag.edges[i];
    const Bitset& ce = common[i];
    for (int j = 0; j < m; ++j) {
      const EdgeRef& f = ag.edges[j];
      if (!ce.test(f.x) && !ce.test(f.y) && !common[j].test(e.x) && !common[j].test(e.y)) rows[i].set(j);
    }
  }
  ag.graph = SimpleGraph::from_rows(std::move(rows));
  return ag;
}

AvoidanceGraph build_avoidance_graph_serial(const Graph& g) {
  AvoidanceGraph ag;
  ag.vertex_count = g.size();
  ag.edges = edges_with_loops(g);
  const int m = static_cast<int>(ag.edges.size());
  std::vector<Bitset> rows(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (avoids(g, ag.edges[i], ag.edges[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  ag.graph = SimpleGraph::from_rows(std::move(rows));
  return ag;
}

Graph reflexive_complement(const AvoidanceGraph& ag) { return reflexive_closure(complement_simple(reflexive_closure(ag.graph))); }

bool recognize_via_avoidance(const Graph& g) {
  return recognize_comparability(build_avoidance_graph(g).graph).has_value();
}

}  // namespace scc

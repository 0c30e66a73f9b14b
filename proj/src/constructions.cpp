#include "scc/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "scc/random.hpp"
#include "scc/recognize.hpp"

namespace scc {

Bigraph bipartite_double(const Graph& g) {
  EdgeList edges;
  for (int u = 0; u < g.size(); ++u) g.closed_neighbourhood(u).for_each([&](int v) { edges.emplace_back(u, v); });
  return Bigraph(g.size(), g.size(), edges);
}

Graph close_both_sides(const Bigraph& h) {
  const int nx = h.nx(), ny = h.ny();
  EdgeList edges;
  for (int a = 0; a < nx; ++a)
    for (int b = a + 1; b < nx; ++b) edges.emplace_back(a, b);
  for (int a = 0; a < ny; ++a)
    for (int b = a + 1; b < ny; ++b) edges.emplace_back(nx + a, nx + b);
  for (auto [x, y] : h.edges()) edges.emplace_back(x, nx + y);
  return Graph(nx + ny, edges);
}

bool recognize_cocomparability_bigraph(const Bigraph& h) {
  return recognize_strong_cocomparability(close_both_sides(h), {.ordering_bound = 0}).strong;
}

BigraphOrdering split_closure_ordering(const Bigraph& h, const VertexOrdering& closure_ordering) {
  if (closure_ordering.size() != h.nx() + h.ny()) throw std::invalid_argument("ordering does not match H++");
  std::vector<int> rows, cols;
  for (int v : closure_ordering.values()) (v < h.nx() ? rows : cols).push_back(v < h.nx() ? v : v - h.nx());
  return {VertexOrdering(std::move(rows)), VertexOrdering(std::move(cols))};
}

namespace {

void require(bool condition, const char* what) {
  if (!condition) throw std::invalid_argument(what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs at least one vertex");
  EdgeList edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  EdgeList edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 0, "negative vertex count");
  EdgeList edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "negative part size");
  EdgeList edges;
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y) edges.emplace_back(x, a + y);
  return Graph(a + b, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "negative vertex count");
  require(p >= 0.0 && p <= 1.0, "edge probability outside [0,1]");
  Rng rng(seed);
  EdgeList edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.bernoulli(p)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_interval(int n, int range, std::uint64_t seed) {
  require(n >= 0, "negative vertex count");
  require(range >= 0, "negative coordinate range");
  Rng rng(seed);
  std::vector<std::pair<int, int>> intervals(n);
  for (auto& [lo, hi] : intervals) {
    lo = rng.uniform_int(0, range);
    hi = rng.uniform_int(0, range);
    if (lo > hi) std::swap(lo, hi);
  }
  EdgeList edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::max(intervals[a].first, intervals[b].first) <= std::min(intervals[a].second, intervals[b].second))
        edges.emplace_back(a, b);
  return Graph(n, edges);
}

Bigraph random_bigraph(int nx, int ny, double p, std::uint64_t seed) {
  require(nx >= 0 && ny >= 0, "negative part size");
  require(p >= 0.0 && p <= 1.0, "edge probability outside [0,1]");
  Rng rng(seed);
  EdgeList edges;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if (rng.bernoulli(p)) edges.emplace_back(x, y);
  return Bigraph(nx, ny, edges);
}

Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete_bipartite") return Family::CompleteBipartite;
  if (name == "random") return Family::Random;
  if (name == "random_interval") return Family::RandomInterval;
  if (name == "random_bigraph") return Family::RandomBigraph;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::variant<Graph, Bigraph> generate(Family family, const GeneratorParams& params) {
  switch (family) {
    case Family::Path: return path_graph(params.n);
    case Family::Cycle: return cycle_graph(params.n);
    case Family::Complete: return complete_graph(params.n);
    case Family::CompleteBipartite: return complete_bipartite(params.n, params.m);
    case Family::Random: return random_graph(params.n, params.p, params.seed);
    case Family::RandomInterval:
      return random_interval(params.n, params.range > 0 ? params.range : 2 * params.n, params.seed);
    case Family::RandomBigraph: return random_bigraph(params.n, params.m, params.p, params.seed);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace scc

#include "scc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace scc {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
}

}  // namespace

Graph::Graph(int n) : n_(n), rows_(n, Bitset(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (int v = 0; v < n; ++v) rows_[v].set(v);
}

Graph::Graph(int n, const EdgeList& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::span<const EdgeRef> edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.x, e.y);
}

Graph Graph::from_upper_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  rows_[u].set(v);
  rows_[v].set(u);
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u + 1); v < n_; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& r : rows_) total += r.count();
  return (total - n_) / 2;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

Graph Graph::relabelled(std::span<const int> perm) const {
  Graph g(n_);
  for (const auto& e : edges()) g.add_edge(perm[e.x], perm[e.y]);
  return g;
}

SimpleGraph::SimpleGraph(int n) : n_(n), rows_(n, Bitset(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

SimpleGraph::SimpleGraph(int n, const EdgeList& edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) + " in simple graph");
    rows_[u].set(v);
    rows_[v].set(u);
  }
}

SimpleGraph SimpleGraph::from_upper_mask(int n, std::uint64_t mask) {
  SimpleGraph h(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) {
        h.rows_[u].set(v);
        h.rows_[v].set(u);
      }
  return h;
}

SimpleGraph SimpleGraph::from_rows(std::vector<Bitset> rows) {
  SimpleGraph h;
  h.n_ = static_cast<int>(rows.size());
  h.rows_ = std::move(rows);
  return h;
}

EdgeList SimpleGraph::edges() const {
  EdgeList out;
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u + 1); v < n_; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

Bigraph::Bigraph(int nx, int ny) : nx_(nx), ny_(ny), rows_(nx, Bitset(ny)) {
  if (nx < 0 || ny < 0) throw std::invalid_argument("negative part size");
}

Bigraph::Bigraph(int nx, int ny, const EdgeList& edges) : Bigraph(nx, ny) {
  for (auto [x, y] : edges) {
    check_vertex(x, nx);
    check_vertex(y, ny);
    rows_[x].set(y);
  }
}

EdgeList Bigraph::edges() const {
  EdgeList out;
  for (int x = 0; x < nx_; ++x) rows_[x].for_each([&](int y) { out.emplace_back(x, y); });
  return out;
}

int Bigraph::edge_count() const {
  int total = 0;
  for (const auto& r : rows_) total += r.count();
  return total;
}

VertexOrdering::VertexOrdering(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<char> seen(perm_.size(), 0);
  for (int v : perm_) {
    if (v < 0 || v >= static_cast<int>(perm_.size()) || seen[v])
      throw std::invalid_argument("vertex ordering is not a permutation");
    seen[v] = 1;
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return VertexOrdering(std::move(perm));
}

bool contains_slash(std::span<const Bitset> rows) {
  // For rows i<j, a Slash exists iff some column where (i,j) read 0/1 lies left
  // of some column where they read 1/0.
  const int m = static_cast<int>(rows.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Bitset zero_one = rows[j];
      zero_one.subtract(rows[i]);
      const int k = zero_one.first();
      if (k == zero_one.size()) continue;
      Bitset one_zero = rows[i];
      one_zero.subtract(rows[j]);
      if (one_zero.last() > k) return true;
    }
  }
  return false;
}

namespace {

std::vector<Bitset> permuted_rows(int rows, int cols, const VertexOrdering& row_ord, const VertexOrdering& col_ord,
                                  auto&& entry) {
  std::vector<Bitset> out(rows, Bitset(cols));
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      if (entry(row_ord[i], col_ord[k])) out[i].set(k);
  return out;
}

}  // namespace

bool is_slash_free_ordering(const Graph& g, const VertexOrdering& ord) {
  if (ord.size() != g.size()) throw std::invalid_argument("ordering size does not match graph");
  const auto rows =
      permuted_rows(g.size(), g.size(), ord, ord, [&](int u, int v) { return g.adjacent(u, v); });
  return !contains_slash(rows);
}

bool is_bigraph_slash_free(const Bigraph& h, const VertexOrdering& row_ord, const VertexOrdering& col_ord) {
  if (row_ord.size() != h.nx() || col_ord.size() != h.ny())
    throw std::invalid_argument("orderings do not match bigraph parts");
  const auto rows =
      permuted_rows(h.nx(), h.ny(), row_ord, col_ord, [&](int x, int y) { return h.adjacent(x, y); });
  return !contains_slash(rows);
}

SimpleGraph complement_simple(const Graph& g) {
  const int n = g.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!g.adjacent(u, v)) rows[u].set(v);
  return SimpleGraph::from_rows(std::move(rows));
}

Graph reflexive_closure(const SimpleGraph& h) { return Graph(h.size(), h.edges()); }

SimpleGraph underlying_simple(const Graph& g) {
  EdgeList edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.x, e.y);
  return SimpleGraph(g.size(), edges);
}

}  // namespace scc

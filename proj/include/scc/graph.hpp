#pragma once

// Graph representations shared by every module: reflexive graphs (loops
// implicit), simple graphs, bigraphs, vertex orderings and the Slash-pattern
// checks on (bi)adjacency matrices.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scc/bitset.hpp"

namespace scc {

using EdgeList = std::vector<std::pair<int, int>>;

/// An edge of a reflexive graph, stored canonically with x <= y. x == y is a loop.
struct EdgeRef {
  int x = 0;
  int y = 0;

  EdgeRef() = default;
  EdgeRef(int a, int b) : x(a < b ? a : b), y(a < b ? b : a) {}

  bool is_loop() const { return x == y; }
  bool contains(int v) const { return x == v || y == v; }
  /// Endpoint opposite to v (v itself for a loop). v must be an endpoint.
  int other(int v) const { return v == x ? y : x; }
  bool intersects(const EdgeRef& o) const { return contains(o.x) || contains(o.y); }

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Finite reflexive graph. Every vertex carries an implicit loop; adjacency rows
/// are closed neighbourhoods.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const EdgeList& edges);
  Graph(int n, std::span<const EdgeRef> edges);

  /// Graph on n vertices whose non-loop edges are given by the bits of `mask`
  /// over the upper triangle, enumerated (0,1), (0,2), ..., (0,n-1), (1,2), ...
  static Graph from_upper_mask(int n, std::uint64_t mask);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  bool has_edge(const EdgeRef& e) const { return adjacent(e.x, e.y); }
  const Bitset& closed_neighbourhood(int v) const { return rows_[v]; }

  /// Non-loop edges in lexicographic order.
  std::vector<EdgeRef> edges() const;
  int edge_count() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Vertex-relabelled copy: vertex v of this graph becomes perm[v].
  Graph relabelled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  void add_edge(int u, int v);

  int n_ = 0;
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
};

/// Irreflexive undirected graph.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, const EdgeList& edges);
  static SimpleGraph from_upper_mask(int n, std::uint64_t mask);
  /// Takes ownership of symmetric, zero-diagonal rows. Not re-validated.
  static SimpleGraph from_rows(std::vector<Bitset> rows);

  int size() const { return n_; }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  const Bitset& neighbourhood(int v) const { return rows_[v]; }
  EdgeList edges() const;
  int edge_count() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  std::vector<Bitset> rows_;
};

/// Bipartite graph with parts X = {0..nx-1} and Y = {0..ny-1}.
class Bigraph {
 public:
  Bigraph() = default;
  Bigraph(int nx, int ny);
  Bigraph(int nx, int ny, const EdgeList& edges);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  bool adjacent(int x, int y) const { return rows_[x].test(y); }
  const Bitset& row(int x) const { return rows_[x]; }
  EdgeList edges() const;
  int edge_count() const;

  friend bool operator==(const Bigraph& a, const Bigraph& b) {
    return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.rows_ == b.rows_;
  }

 private:
  int nx_ = 0;
  int ny_ = 0;
  std::vector<Bitset> rows_;
};

/// A permutation of 0..n-1; position i holds vertex perm[i].
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// Throws std::invalid_argument unless perm is a bijection on 0..n-1.
  explicit VertexOrdering(std::vector<int> perm);
  static VertexOrdering identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int operator[](int position) const { return perm_[position]; }
  const std::vector<int>& values() const { return perm_; }

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

 private:
  std::vector<int> perm_;
};

/// True iff the 0/1 matrix given by `rows` (all of equal width) contains the
/// Slash submatrix: rows i<j and columns k<l with entries 01 over 10.
bool contains_slash(std::span<const Bitset> rows);

/// True iff the symmetric ordering of g's adjacency matrix (1-diagonal) has no
/// Slash submatrix.
bool is_slash_free_ordering(const Graph& g, const VertexOrdering& ord);

bool is_bigraph_slash_free(const Bigraph& h, const VertexOrdering& row_ord, const VertexOrdering& col_ord);

/// Complement of the underlying loopless graph.
SimpleGraph complement_simple(const Graph& g);

/// The reflexive graph with the same non-loop edges as h.
Graph reflexive_closure(const SimpleGraph& h);

/// The loopless graph with the same non-loop edges as g.
SimpleGraph underlying_simple(const Graph& g);

}  // namespace scc

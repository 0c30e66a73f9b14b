#pragma once

// Forcing relation on ordered pairs of distinct vertices and the pair graph
// whose connected components are the classes of the implies relation.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "scc/graph.hpp"

namespace scc {

/// Ordered pair (u, v) of distinct vertices.
struct PairNode {
  int u = 0;
  int v = 0;

  PairNode reversed() const { return {v, u}; }
  friend auto operator<=>(const PairNode&, const PairNode&) = default;
};

/// (u,v) forces (u',v') iff the pairs coincide, or uu' and vv' are edges (loops
/// count) while uv' and vu' are not.
bool forces(const Graph& g, PairNode p, PairNode q);

/// Undirected graph on all n(n-1) ordered pairs; p-q is an edge iff p != q and
/// forces(g, p, q). Node indices follow the lexicographic order of the pairs.
/// Immutable once built.
class PairGraph {
 public:
  int vertex_count() const { return n_; }
  int node_count() const { return n_ * (n_ - 1); }
  long long edge_count() const { return static_cast<long long>(targets_.size()) / 2; }

  int index(PairNode p) const { return p.u * (n_ - 1) + (p.v < p.u ? p.v : p.v - 1); }
  PairNode node(int index) const {
    const int u = index / (n_ - 1);
    const int r = index % (n_ - 1);
    return {u, r < u ? r : r + 1};
  }

  /// Neighbour indices in ascending order.
  std::span<const int> neighbours(int index) const {
    return {targets_.data() + offsets_[index], targets_.data() + offsets_[index + 1]};
  }
  bool adjacent(PairNode p, PairNode q) const;

  int component(int index) const { return component_[index]; }
  int component_count() const { return component_count_; }
  bool same_component(PairNode p, PairNode q) const { return component_[index(p)] == component_[index(q)]; }

  /// Shortest path from p to q (breadth-first, neighbours visited in ascending
  /// index order), or empty if q is unreachable.
  std::vector<PairNode> shortest_path(PairNode p, PairNode q) const;

 private:
  friend PairGraph build_pair_graph(const Graph& g);
  friend PairGraph build_pair_graph_serial(const Graph& g);

  void label_components();

  int n_ = 0;
  std::vector<long long> offsets_;
  std::vector<int> targets_;
  std::vector<int> component_;
  int component_count_ = 0;
};

/// Parallel kernel: the neighbours of (u,v) are exactly
/// (N[u] \ N[v]) x (N[v] \ N[u]) without (u,v) itself.
PairGraph build_pair_graph(const Graph& g);

/// Reference construction by testing forces() on every ordered node pair.
PairGraph build_pair_graph_serial(const Graph& g);

/// Distinct u, v with (u,v) ~ (v,u), witnessed by a forcing path.
struct InvertiblePair {
  int u = 0;
  int v = 0;
  std::vector<PairNode> path;  // (u,v) ... (v,u), consecutive nodes forcing
};

/// The lexicographically least invertible pair with a shortest path, or empty
/// if g is a strong cocomparability graph.
std::optional<InvertiblePair> find_invertible_pair(const Graph& g);
std::optional<InvertiblePair> find_invertible_pair(const PairGraph& pg);

}  // namespace scc

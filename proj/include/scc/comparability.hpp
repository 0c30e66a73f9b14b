#pragma once

// Comparability-graph recognition by implication classes, producing a
// transitive orientation that is always re-verified before it is returned.

#include <optional>
#include <utility>
#include <vector>

#include "scc/graph.hpp"

namespace scc {

/// A direction for each edge of a simple graph.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int n) : out_(n, Bitset(n)) {}

  int size() const { return static_cast<int>(out_.size()); }
  void orient(int from, int to) {
    out_[from].set(to);
    out_[to].reset(from);
  }
  bool has_arc(int from, int to) const { return out_[from].test(to); }
  const Bitset& out(int v) const { return out_[v]; }
  EdgeList arcs() const;

 private:
  std::vector<Bitset> out_;
};

/// Partition of the directed edge instances (a,b), (b,a) of every edge into
/// implication classes: (a,b) forces (a,c) when bc is not an edge, and (c,b)
/// when ac is not an edge.
struct ImplicationPartition {
  EdgeList arcs;               // all 2m directed edges, lexicographic
  std::vector<int> class_of;   // per arc
  int class_count = 0;         // classes numbered by their least arc

  std::vector<EdgeList> classes() const;
};

ImplicationPartition implication_classes(const SimpleGraph& h);

/// A transitive orientation of h, or empty iff h is not a comparability graph.
/// Throws std::logic_error if the constructed orientation fails verification.
std::optional<Orientation> recognize_comparability(const SimpleGraph& h);

/// True iff o orients exactly the edges of h, one direction each, and
/// x->y, y->z always implies x->z.
bool verify_transitive(const SimpleGraph& h, const Orientation& o);

/// Whether the complement of g's underlying loopless graph is a comparability graph.
bool recognize_cocomparability(const Graph& g);

}  // namespace scc

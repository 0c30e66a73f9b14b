#pragma once

// The avoids relation between edges of a reflexive graph (loops included) and
// the avoidance graph on E(G).

#include <vector>

#include "scc/graph.hpp"

namespace scc {

/// Whether edge e avoids edge f. Always false when e and f share an endpoint.
/// Throws std::invalid_argument if e or f is not an edge of g.
bool avoids(const Graph& g, const EdgeRef& e, const EdgeRef& f);

/// All edges of g as avoidance-graph vertices: the n loops by vertex index,
/// then the non-loop edges lexicographically.
std::vector<EdgeRef> edges_with_loops(const Graph& g);

struct AvoidanceGraph {
  SimpleGraph graph;
  std::vector<EdgeRef> edges;  // avoidance-graph vertex -> edge of G
  int vertex_count = 0;        // n; edges[0..n) are the loops

  /// Avoidance-graph vertex of edge e; throws std::invalid_argument if absent.
  int index_of(const EdgeRef& e) const;
};

/// Parallel kernel. Uses the equivalent form: e and f avoid each other iff no
/// endpoint of one is adjacent to both endpoints of the other.
AvoidanceGraph build_avoidance_graph(const Graph& g);

/// Reference construction calling avoids() on every vertex pair.
AvoidanceGraph build_avoidance_graph_serial(const Graph& g);

/// Complement of the avoidance graph with every vertex given a loop.
Graph reflexive_complement(const AvoidanceGraph& ag);

/// g is a strong cocomparability graph iff its avoidance graph is a
/// comparability graph.
bool recognize_via_avoidance(const Graph& g);

}  // namespace scc

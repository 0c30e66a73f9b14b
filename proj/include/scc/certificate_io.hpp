#pragma once

// Line-oriented certificate blocks printed by the CLI.
//
//   ordering                 weak-edge-asteroid <count>     orientation <arcs>
//   <v0 v1 ... vn-1>         <x y>        x count           <a b>  x arcs
//                            <walk>       x count
//   bigraph-ordering
//   <row order>
//   <column order>
//
// Walks are space-separated vertex indices. Output is deterministic.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>

#include "scc/certificates.hpp"
#include "scc/comparability.hpp"

namespace scc {

std::string format_ordering(const VertexOrdering& ord);
std::string format_bigraph_ordering(const VertexOrdering& rows, const VertexOrdering& cols);
std::string format_weak_edge_asteroid(const WeakEdgeAsteroid& w);
std::string format_orientation(const Orientation& o);

struct BigraphOrdering {
  VertexOrdering rows;
  VertexOrdering cols;
};

using Certificate = std::variant<VertexOrdering, BigraphOrdering, WeakEdgeAsteroid, EdgeList>;

/// Parses one block; an orientation is returned as its arc list. Throws
/// MalformedCertificate on bad input.
Certificate parse_certificate(std::istream& in);

}  // namespace scc

#pragma once

// Edge-list text format.
//
//   reflexive / simple:  "n m" then m lines "u v"
//   bigraph:             "nx ny m" then m lines "x y"
//
// Indices are 0-based; blank lines and lines starting with '#' are ignored.
// Encoding is canonical: edges sorted lexicographically, loops omitted.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "scc/graph.hpp"

namespace scc {

enum class GraphKind { Reflexive, Simple, Bigraph };

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyGraph = std::variant<Graph, SimpleGraph, Bigraph>;

/// Throws FormatError on a malformed header, a bad edge line, an out-of-range
/// index, or a loop in a simple graph.
AnyGraph decode_graph(std::istream& in, GraphKind kind);
AnyGraph decode_graph(std::string_view text, GraphKind kind);

Graph read_graph(std::string_view text);
SimpleGraph read_simple_graph(std::string_view text);
Bigraph read_bigraph(std::string_view text);

std::string encode(const Graph& g);
std::string encode(const SimpleGraph& h);
std::string encode(const Bigraph& h);
std::string encode(const AnyGraph& g);

GraphKind parse_kind(std::string_view name);

}  // namespace scc

#pragma once

// Bigraph constructions and test-fixture generators.

#include <cstdint>
#include <string_view>
#include <variant>

#include "scc/certificate_io.hpp"
#include "scc/graph.hpp"

namespace scc {

/// B(G): parts {v'} and {v''}; u'v'' is an edge iff uv is an edge of g
/// (so v'v'' for every v).
Bigraph bipartite_double(const Graph& g);

/// H++: reflexive graph on X then Y (Y vertex y becomes nx + y) with both parts
/// complete and cross edges exactly those of h.
Graph close_both_sides(const Bigraph& h);

/// h is a cocomparability bigraph iff H++ is a strong cocomparability graph.
bool recognize_cocomparability_bigraph(const Bigraph& h);

/// Reads a Slash-free biadjacency ordering off a symmetric Slash-free ordering
/// of close_both_sides(h): X vertices in their order as rows, Y as columns.
BigraphOrdering split_closure_ordering(const Bigraph& h, const VertexOrdering& closure_ordering);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph random_graph(int n, double p, std::uint64_t seed);
/// Intersection graph of n intervals with integer endpoints in [0, range].
Graph random_interval(int n, int range, std::uint64_t seed);
Bigraph random_bigraph(int nx, int ny, double p, std::uint64_t seed);

enum class Family { Path, Cycle, Complete, CompleteBipartite, Random, RandomInterval, RandomBigraph };

struct GeneratorParams {
  int n = 0;       // vertices, or first part size
  int m = 0;       // second part size
  double p = 0.5;  // edge probability
  int range = 0;   // interval coordinate range; 0 means 2n
  std::uint64_t seed = 0;
};

Family parse_family(std::string_view name);

/// Throws std::invalid_argument on invalid parameters.
std::variant<Graph, Bigraph> generate(Family family, const GeneratorParams& params);

}  // namespace scc

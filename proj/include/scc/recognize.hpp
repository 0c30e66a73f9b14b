#pragma once

#include <cstdint>
#include <optional>

#include "scc/certificates.hpp"
#include "scc/forcing.hpp"

namespace scc {

struct RecognizeOptions {
  int ordering_bound = 10;              // search for a YES ordering only up to this many vertices
  std::uint64_t node_budget = 1000000;  // search nodes; 0 = unlimited
};

struct Decision {
  bool strong = false;
  std::optional<VertexOrdering> ordering;      // YES, when found within the bound and budget
  std::optional<InvertiblePair> pair;          // NO
  std::optional<WeakEdgeAsteroid> asteroid;    // NO, verified
};

/// Recognition through invertible pairs. A NO answer always carries a verified
/// weak edge-asteroid.
Decision recognize_strong_cocomparability(const Graph& g, const RecognizeOptions& options = {});

}  // namespace scc

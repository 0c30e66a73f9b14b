#pragma once

// Certificates for both answers and the constructive conversions between them.
//
// NO side: weak edge-asteroids in G, invertible pairs, and asteroids in the
// reflexive complement of the avoidance graph.
// YES side: symmetric Slash-free vertex orderings.
//
// Every certificate produced here is checked by its verifier before it is
// returned; a failing check throws std::logic_error.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scc/forcing.hpp"
#include "scc/graph.hpp"

namespace scc {

/// Vertex sequence w0..ws of a host graph; w_j == w_{j+1} traverses a loop.
using Walk = std::vector<int>;

/// Edges e_0..e_{2k} with walks W_0..W_{2k}; W_i begins with edge e_{i+k},
/// ends with edge e_{i+k+1}, and every edge of W_i is avoided by e_i.
struct WeakEdgeAsteroid {
  std::vector<EdgeRef> edges;
  std::vector<Walk> walks;

  int k() const { return (static_cast<int>(edges.size()) - 1) / 2; }
};

/// Vertices x_0..x_{2k} with walks W_0..W_{2k}; W_i connects x_{i+k} and
/// x_{i+k+1} and contains no closed neighbour of x_i.
struct Asteroid {
  std::vector<int> vertices;
  std::vector<Walk> walks;
};

/// Structural defect in a certificate (wrong count, index out of range, walk
/// with the wrong end edges). Distinct from a certificate that is well formed
/// but simply invalid.
class MalformedCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws MalformedCertificate on structural defects.
bool verify_weak_edge_asteroid(const Graph& g, const WeakEdgeAsteroid& w);

/// Throws MalformedCertificate on structural defects. h is taken as reflexive,
/// so x_i counts as its own neighbour.
bool verify_asteroid(const Graph& h, const Asteroid& a);

/// Unfolds the forcing path of an invertible pair into a closed walk and reads
/// the weak edge-asteroid off it (odd and even path lengths differ).
WeakEdgeAsteroid extract_weak_edge_asteroid(const Graph& g, const InvertiblePair& ip);

/// Chains the implies relation along the walks of w to return an invertible
/// pair ((u,v), (v,u)). Throws std::invalid_argument if w is not valid for g.
std::pair<PairNode, PairNode> invertible_pair_from_wea(const Graph& g, const WeakEdgeAsteroid& w);

/// Host of the asteroid conversions: the reflexive complement of g's
/// avoidance graph, with vertices numbered as in build_avoidance_graph.
Graph avoidance_complement_host(const Graph& g);

/// Re-reads w as an asteroid of avoidance_complement_host(g).
Asteroid wea_to_complement_asteroid(const Graph& g, const WeakEdgeAsteroid& w);

/// Turns an asteroid of avoidance_complement_host(g) back into a weak
/// edge-asteroid of g, bridging consecutive walk edges through g.
WeakEdgeAsteroid complement_asteroid_to_wea(const Graph& g, const Asteroid& a);

struct OrderingSearch {
  std::optional<VertexOrdering> ordering;
  bool exhausted = false;  // the whole space was searched without success
  std::uint64_t nodes = 0;
};

/// Backtracking over prefixes of the ordering, rejecting a prefix as soon as
/// its placed rows and columns contain a Slash. node_budget = 0 means no limit.
OrderingSearch search_strong_ordering(const Graph& g, std::uint64_t node_budget);

}  // namespace scc

#pragma once

// Brute-force ground truth, written independently of the fast recognizers,
// and the exhaustive small-graph cross-check harness.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scc/comparability.hpp"
#include "scc/graph.hpp"

namespace scc {

/// An oracle was asked about an instance above its size guard.
class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kOracleMaxVertices = 10;
constexpr int kOracleMaxEdges = 24;
constexpr int kOracleMaxPart = 6;

/// Symmetric Slash-free ordering by exhausting all orderings (prefix-pruned),
/// or empty if none exists. Guard: n <= 10.
std::optional<VertexOrdering> oracle_strong_cocomp(const Graph& g);

/// Transitive orientation by backtracking over edge directions, or empty if
/// none exists. Guard: m <= 24.
std::optional<Orientation> oracle_comparability(const SimpleGraph& h);

/// Slash-free (row, column) ordering pair by exhausting nx! * ny! pairs.
/// Guard: nx, ny <= 6.
std::optional<std::pair<VertexOrdering, VertexOrdering>> oracle_cocomp_bigraph(const Bigraph& h);

struct CrosscheckOptions {
  int n = 0;
  bool sampled = false;          // false: every labeled graph on n vertices
  std::uint64_t seed = 0;        // sampled mode only
  std::uint64_t samples = 0;     // sampled mode only
  bool use_pair = true;          // invertible-pair route
  bool use_avoidance = true;     // avoidance-graph route
  bool use_oracle = true;        // brute-force orderings
};

struct GraphRecord {
  std::uint64_t mask = 0;  // upper-triangle encoding, see Graph::from_upper_mask
  std::optional<bool> pair;
  std::optional<bool> avoidance;
  std::optional<bool> oracle;
  std::uint64_t certificate_hash = 0;  // FNV-1a of the certificate block, 0 if none

  bool agrees() const;
  /// Verdict of the first recognizer that ran.
  bool strong() const;
};

struct Report {
  CrosscheckOptions options;
  std::vector<GraphRecord> records;

  std::size_t strong_count() const;
  std::size_t disagreement_count() const;
};

/// Exhaustive mode needs n <= 6; sampled mode needs n <= 11 so the mask fits in
/// 64 bits. Records are in enumeration (or sampling) order.
Report crosscheck_enumerate(const CrosscheckOptions& options);

enum class ReportFormat { Text, Structured };

/// Deterministic serialization; the structured form is JSON.
std::string emit_report(const Report& report, ReportFormat format);

std::uint64_t fnv1a(const std::string& text);

}  // namespace scc

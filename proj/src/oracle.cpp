#include "scc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace scc {

namespace {

// Slash with rows i<j and columns k<l among positions <= last where the last
// position is one of the four indices. Plain quadruple loops on purpose.
bool new_slash(int last, auto&& entry) {
  for (int i = 0; i <= last; ++i)
    for (int j = i + 1; j <= last; ++j)
      for (int k = 0; k <= last; ++k)
        for (int l = k + 1; l <= last; ++l) {
          if (j != last && l != last) continue;
          if (!entry(i, k) && entry(i, l) && entry(j, k) && !entry(j, l)) return true;
        }
  return false;
}

bool place_next(const Graph& g, std::vector<int>& perm, std::vector<bool>& used) {
  const int p = static_cast<int>(perm.size());
  if (p == g.size()) return true;
  for (int v = 0; v < g.size(); ++v) {
    if (used[v]) continue;
    perm.push_back(v);
    used[v] = true;
    const auto entry = [&](int a, int b) { return g.adjacent(perm[a], perm[b]); };
    if (!new_slash(p, entry) && place_next(g, perm, used)) return true;
    used[v] = false;
    perm.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexOrdering> oracle_strong_cocomp(const Graph& g) {
  if (g.size() > kOracleMaxVertices)
    throw GuardViolation("oracle_strong_cocomp: " + std::to_string(g.size()) + " vertices exceeds guard of " +
                         std::to_string(kOracleMaxVertices));
  std::vector<int> perm;
  std::vector<bool> used(g.size(), false);
  if (!place_next(g, perm, used)) return std::nullopt;
  VertexOrdering ord(std::move(perm));
  if (!is_slash_free_ordering(g, ord)) throw std::logic_error("oracle_strong_cocomp: ordering fails Slash check");
  return ord;
}

namespace {

class OrientationSearch {
 public:
  explicit OrientationSearch(const SimpleGraph& h) : h_(h), edges_(h.edges()), arc_(h.size(), std::vector<char>(h.size(), 0)) {}

  std::optional<Orientation> run() {
    if (!assign(0)) return std::nullopt;
    Orientation o(h_.size());
    for (int a = 0; a < h_.size(); ++a)
      for (int b = 0; b < h_.size(); ++b)
        if (arc_[a][b]) o.orient(a, b);
    return o;
  }

 private:
  // Any violation of transitivity involving the arc a->b among assigned arcs.
  bool consistent(int a, int b) const {
    for (int c = 0; c < h_.size(); ++c) {
      if (arc_[c][a] && (!h_.adjacent(c, b) || arc_[b][c])) return false;
      if (arc_[b][c] && (!h_.adjacent(a, c) || arc_[c][a])) return false;
    }
    return true;
  }

  bool assign(std::size_t index) {
    if (index == edges_.size()) return true;
    const auto [x, y] = edges_[index];
    // the reverse of a transitive orientation is transitive: fix the first edge
    const int options = index == 0 ? 1 : 2;
    for (int option = 0; option < options; ++option) {
      const int a = option == 0 ? x : y, b = option == 0 ? y : x;
      arc_[a][b] = 1;
      if (consistent(a, b) && assign(index + 1)) return true;
      arc_[a][b] = 0;
    }
    return false;
  }

  const SimpleGraph& h_;
  EdgeList edges_;
  std::vector<std::vector<char>> arc_;
};

}  // namespace

std::optional<Orientation> oracle_comparability(const SimpleGraph& h) {
  if (h.edge_count() > kOracleMaxEdges)
    throw GuardViolation("oracle_comparability: " + std::to_string(h.edge_count()) + " edges exceeds guard of " +
                         std::to_string(kOracleMaxEdges));
  auto o = OrientationSearch(h).run();
  if (o && !verify_transitive(h, *o)) throw std::logic_error("oracle_comparability: orientation not transitive");
  return o;
}

std::optional<std::pair<VertexOrdering, VertexOrdering>> oracle_cocomp_bigraph(const Bigraph& h) {
  if (h.nx() > kOracleMaxPart || h.ny() > kOracleMaxPart)
    throw GuardViolation("oracle_cocomp_bigraph: part size exceeds guard of " + std::to_string(kOracleMaxPart));
  std::vector<int> rows(h.nx()), cols(h.ny());
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      const auto entry = [&](int i, int k) { return h.adjacent(rows[i], cols[k]); };
      bool slash = false;
      for (int i = 0; i < h.nx() && !slash; ++i)
        for (int j = i + 1; j < h.nx() && !slash; ++j)
          for (int k = 0; k < h.ny() && !slash; ++k)
            for (int l = k + 1; l < h.ny() && !slash; ++l)
              slash = !entry(i, k) && entry(i, l) && entry(j, k) && !entry(j, l);
      if (!slash) {
        std::pair result{VertexOrdering(rows), VertexOrdering(cols)};
        if (!is_bigraph_slash_free(h, result.first, result.second))
          throw std::logic_error("oracle_cocomp_bigraph: ordering fails Slash check");
        return result;
      }
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return std::nullopt;
}

}  // namespace scc

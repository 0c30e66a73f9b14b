#include "scc/recognize.hpp"

#include <stdexcept>

namespace scc {

Decision recognize_strong_cocomparability(const Graph& g, const RecognizeOptions& options) {
  Decision d;
  if (auto ip = find_invertible_pair(g)) {
    d.asteroid = extract_weak_edge_asteroid(g, *ip);
    d.pair = std::move(ip);
    return d;
  }
  d.strong = true;
  if (g.size() <= options.ordering_bound) {
    auto search = search_strong_ordering(g, options.node_budget);
    if (search.exhausted)
      throw std::logic_error("recognize_strong_cocomparability: no invertible pair but no Slash-free ordering");
    d.ordering = std::move(search.ordering);
  }
  return d;
}

}  // namespace scc

#include "scc/comparability.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace scc {

EdgeList Orientation::arcs() const {
  EdgeList out;
  for (int a = 0; a < size(); ++a) out_[a].for_each([&](int b) { out.emplace_back(a, b); });
  return out;
}

std::vector<EdgeList> ImplicationPartition::classes() const {
  std::vector<EdgeList> out(class_count);
  for (std::size_t i = 0; i < arcs.size(); ++i) out[class_of[i]].push_back(arcs[i]);
  return out;
}

ImplicationPartition implication_classes(const SimpleGraph& h) {
  const int n = h.size();
  ImplicationPartition part;
  std::vector<int> first_arc(n + 1, 0);
  for (int a = 0; a < n; ++a) {
    first_arc[a] = static_cast<int>(part.arcs.size());
    h.neighbourhood(a).for_each([&](int b) { part.arcs.emplace_back(a, b); });
  }
  first_arc[n] = static_cast<int>(part.arcs.size());
  const auto arc_id = [&](int a, int b) {
    const auto begin = part.arcs.begin() + first_arc[a], end = part.arcs.begin() + first_arc[a + 1];
    return static_cast<int>(std::lower_bound(begin, end, std::pair{a, b}) - part.arcs.begin());
  };

  part.class_of.assign(part.arcs.size(), -1);
  std::deque<int> queue;
  for (std::size_t s = 0; s < part.arcs.size(); ++s) {
    if (part.class_of[s] != -1) continue;
    const int c = part.class_count++;
    part.class_of[s] = c;
    queue.push_back(static_cast<int>(s));
    while (!queue.empty()) {
      const auto [a, b] = part.arcs[queue.front()];
      queue.pop_front();
      const auto visit = [&](int x, int y) {
        const int id = arc_id(x, y);
        if (part.class_of[id] == -1) {
          part.class_of[id] = c;
          queue.push_back(id);
        }
      };
      Bitset tails = h.neighbourhood(a);  // (a,c) with bc missing
      tails.subtract(h.neighbourhood(b));
      tails.reset(b);
      tails.for_each([&](int c2) { visit(a, c2); });
      Bitset heads = h.neighbourhood(b);  // (c,b) with ac missing
      heads.subtract(h.neighbourhood(a));
      heads.reset(a);
      heads.for_each([&](int c2) { visit(c2, b); });
    }
  }
  return part;
}

std::optional<Orientation> recognize_comparability(const SimpleGraph& h) {
  const int n = h.size();
  std::vector<Bitset> remaining;
  remaining.reserve(n);
  for (int v = 0; v < n; ++v) remaining.push_back(h.neighbourhood(v));

  Orientation orientation(n);
  Bitset in_class(n * n);
  std::vector<std::pair<int, int>> members;
  std::deque<std::pair<int, int>> queue;

  int a0 = 0;
  while (true) {
    // least remaining edge {a0, b0} with a0 < b0
    int b0 = n;
    for (; a0 < n; ++a0) {
      b0 = remaining[a0].next(a0 + 1);
      if (b0 < n) break;
    }
    if (a0 == n) break;

    // Implication class of (a0,b0) in the graph of remaining edges.
    members.clear();
    bool conflict = false;
    const auto add = [&](int x, int y) {
      if (in_class.test(x * n + y)) return;
      if (in_class.test(y * n + x)) conflict = true;
      in_class.set(x * n + y);
      members.emplace_back(x, y);
      queue.emplace_back(x, y);
    };
    add(a0, b0);
    while (!queue.empty() && !conflict) {
      const auto [x, y] = queue.front();
      queue.pop_front();
      Bitset tails = remaining[x];
      tails.subtract(remaining[y]);
      tails.reset(y);
      tails.for_each([&](int c) { add(x, c); });
      Bitset heads = remaining[y];
      heads.subtract(remaining[x]);
      heads.reset(x);
      heads.for_each([&](int c) { add(c, y); });
    }
    queue.clear();
    for (auto [x, y] : members) in_class.reset(x * n + y);
    if (conflict) return std::nullopt;

    for (auto [x, y] : members) {
      orientation.orient(x, y);
      remaining[x].reset(y);
      remaining[y].reset(x);
    }
  }

  if (!verify_transitive(h, orientation))
    throw std::logic_error("recognize_comparability: constructed orientation is not transitive");
  return orientation;
}

bool verify_transitive(const SimpleGraph& h, const Orientation& o) {
  const int n = h.size();
  if (o.size() != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const bool forward = o.has_arc(a, b), backward = o.has_arc(b, a);
      if (h.adjacent(a, b) ? forward == backward : forward || backward) return false;
    }
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    o.out(x).for_each([&](int y) { ok = ok && o.out(y).subset_of(o.out(x)); });
    if (!ok) return false;
  }
  return true;
}

bool recognize_cocomparability(const Graph& g) { return recognize_comparability(complement_simple(g)).has_value(); }

}  // namespace scc

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "scc/avoidance.hpp"
#include "scc/certificates.hpp"
#include "scc/comparability.hpp"
#include "scc/constructions.hpp"
#include "scc/forcing.hpp"
#include "scc/oracle.hpp"
#include "scc/recognize.hpp"
#include "test_support.hpp"
#include "walk_properties.hpp"

using namespace scc;
using namespace scc::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures for one criterion; the first few are kept as detail.
class Criterion {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) detail_ << (detail_.tellp() > 0 ? "; " : "") << what;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void note(const std::string& text) { notes_ << (notes_.tellp() > 0 ? ", " : "") << text; }

  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = notes_.str();
    if (failures_ > 0) s += (s.empty() ? "" : ", ") + std::to_string(failures_) + " failures: " + detail_.str();
    return s;
  }

 private:
  long failures_ = 0;
  std::ostringstream detail_, notes_;
};

std::string mask_text(int n, std::uint64_t mask) {
  return "n=" + std::to_string(n) + " mask=" + std::to_string(mask);
}

// Runs each graph of the n <= limit enumeration that has an invertible pair.
void for_each_no_instance(int limit, const std::function<void(const Graph&, const WeakEdgeAsteroid&, std::uint64_t)>& f) {
  for (int n = 1; n <= limit; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << upper_pairs(n)); ++m) {
      const Graph g = Graph::from_upper_mask(n, m);
      if (const auto ip = find_invertible_pair(g)) f(g, extract_weak_edge_asteroid(g, *ip), m);
    }
}

void triple_agreement(Criterion& c) {
  const auto start = Clock::now();
  const Report r = crosscheck_enumerate({.n = 6});
  c.check(r.records.size() == 32768, "expected 32768 graphs");
  for (const auto& rec : r.records)
    if (!rec.agrees()) c.fail(mask_text(6, rec.mask));
  const double took = seconds_since(start);
  c.check(took < 600, "took longer than 10 minutes");
  c.note(std::to_string(r.strong_count()) + " strong of " + std::to_string(r.records.size()));
  c.note(std::to_string(took).substr(0, 5) + " s");
}

void certificate_soundness(Criterion& c) {
  long yes = 0, no = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << upper_pairs(6)); ++m) {
    const Graph g = Graph::from_upper_mask(6, m);
    try {
      if (const auto ip = find_invertible_pair(g)) {
        ++no;
        c.check(verify_weak_edge_asteroid(g, extract_weak_edge_asteroid(g, *ip)), mask_text(6, m));
      } else {
        ++yes;
        const auto s = search_strong_ordering(g, 0);
        c.check(s.ordering && is_slash_free_ordering(g, *s.ordering), mask_text(6, m));
      }
    } catch (const std::exception& e) {
      c.fail(mask_text(6, m) + ": " + e.what());
    }
  }
  c.note(std::to_string(yes) + " orderings, " + std::to_string(no) + " weak edge-asteroids");
}

void k33_fixture(Criterion& c) {
  const Graph g = k33();
  const Decision d = recognize_strong_cocomparability(g);
  c.check(!d.strong, "recognized YES");
  if (d.asteroid) {
    const auto count = d.asteroid->edges.size();
    c.check(count >= 3 && count % 2 == 1, "edge count " + std::to_string(count));
    c.check(verify_weak_edge_asteroid(g, *d.asteroid), "certificate fails verification");
  } else {
    c.fail("no certificate");
  }
  c.check(recognize_cocomparability(g), "not cocomparability");
  c.check(recognize_cocomparability_bigraph(bipartite_double(g)), "B(K3,3) not a cocomparability bigraph");
}

void interval_containment(Criterion& c) {
  const auto start = Clock::now();
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.uniform_int(1, 40);
    const std::uint64_t seed = rng.bits();
    const Graph g = random_interval(n, 2 * n, seed);
    c.check(recognize_strong_cocomparability(g, {.ordering_bound = 0}).strong,
            "interval graph " + std::to_string(i) + " n=" + std::to_string(n));
  }
  const double took = seconds_since(start);
  c.check(took < 60, "took longer than 1 minute");
  c.note("200 graphs in " + std::to_string(took).substr(0, 5) + " s");
}

void bipartite_double_of_strong(Criterion& c) {
  long checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << upper_pairs(n)); ++m) {
      const Graph g = Graph::from_upper_mask(n, m);
      if (find_invertible_pair(g)) continue;
      ++checked;
      c.check(recognize_cocomparability_bigraph(bipartite_double(g)), mask_text(n, m));
    }
  c.note(std::to_string(checked) + " strong graphs");
}

void wea_to_invertible_pair(Criterion& c) {
  long checked = 0;
  for_each_no_instance(5, [&](const Graph& g, const WeakEdgeAsteroid& w, std::uint64_t m) {
    ++checked;
    try {
      const auto [p, q] = invertible_pair_from_wea(g, w);
      c.check(q == p.reversed() && build_pair_graph(g).same_component(p, q), mask_text(g.size(), m));
    } catch (const std::exception& e) {
      c.fail(mask_text(g.size(), m) + ": " + e.what());
    }
  });
  c.note(std::to_string(checked) + " NO instances");
}

void wea_asteroid_round_trip(Criterion& c) {
  long checked = 0;
  for_each_no_instance(5, [&](const Graph& g, const WeakEdgeAsteroid& w, std::uint64_t m) {
    ++checked;
    try {
      const Asteroid a = wea_to_complement_asteroid(g, w);
      c.check(verify_asteroid(avoidance_complement_host(g), a), mask_text(g.size(), m) + " asteroid");
      c.check(verify_weak_edge_asteroid(g, complement_asteroid_to_wea(g, a)), mask_text(g.size(), m) + " back");
    } catch (const std::exception& e) {
      c.fail(mask_text(g.size(), m) + ": " + e.what());
    }
  });
  c.note(std::to_string(checked) + " NO instances");
}

void avoided_walks(Criterion& c) {
  Rng rng(1000);
  int applied[5] = {};
  for (int i = 0; i < 1000; ++i) {
    const WalkCheck check = check_avoided_walk(random_avoided_walk(rng));
    ++applied[check.statement];
    if (check.failure) c.fail("triple " + std::to_string(i) + ": " + *check.failure);
  }
  c.note("1000 triples");
  c.note("statement 1: " + std::to_string(applied[1]) + ", 2: " + std::to_string(applied[2]) +
         ", 2 reversed: " + std::to_string(applied[4]) + ", 3: " + std::to_string(applied[3]));
}

void comparability_agreement(Criterion& c) {
  long accepted = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << upper_pairs(6)); ++m) {
    const SimpleGraph h = SimpleGraph::from_upper_mask(6, m);
    const auto o = recognize_comparability(h);
    c.check(o.has_value() == oracle_comparability(h).has_value(), mask_text(6, m));
    if (o) {
      ++accepted;
      c.check(verify_transitive(h, *o), mask_text(6, m) + " orientation");
    }
    if (is_bipartite(h)) c.check(o.has_value(), mask_text(6, m) + " bipartite rejected");
  }
  c.check(!recognize_comparability(underlying_simple(c5())), "C5 accepted");
  c.note(std::to_string(accepted) + " comparability graphs of 32768");
}

void performance_smoke(Criterion& c) {
  const Graph g = random_graph(100, 0.3, 7);
  const auto start = Clock::now();
  const bool pair_route = !find_invertible_pair(g).has_value();
  const double pair_took = seconds_since(start);
  const auto mid = Clock::now();
  const bool avoidance_route = recognize_via_avoidance(g);
  const double avoidance_took = seconds_since(mid);
  c.check(pair_route == avoidance_route, "routes disagree");
  c.check(pair_took + avoidance_took < 30, "took longer than 30 s");
  c.note(std::string(pair_route ? "YES" : "NO") + ", pair " + std::to_string(pair_took).substr(0, 5) +
         " s, avoidance " + std::to_string(avoidance_took).substr(0, 5) + " s");
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Criterion&)> criteria[] = {
      {"triple agreement on all 6-vertex graphs", triple_agreement},
      {"certificate soundness on all 6-vertex graphs", certificate_soundness},
      {"K3,3 fixture", k33_fixture},
      {"interval graphs recognized", interval_containment},
      {"bipartite doubles of strong graphs", bipartite_double_of_strong},
      {"weak edge-asteroid to invertible pair", wea_to_invertible_pair},
      {"weak edge-asteroid and asteroid round trip", wea_asteroid_round_trip},
      {"pair connections along avoided walks", avoided_walks},
      {"comparability agreement on all 6-vertex graphs", comparability_agreement},
      {"performance smoke n=100 p=0.3", performance_smoke},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    failed += !c.passed();
    std::cout << (c.passed() ? "PASS" : "FAIL") << ' ' << ++index << ' ' << name;
    if (const auto s = c.summary(); !s.empty()) std::cout << " (" << s << ')';
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

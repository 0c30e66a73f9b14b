#include <gtest/gtest.h>

#include "scc/constructions.hpp"
#include "scc/oracle.hpp"
#include "scc/recognize.hpp"
#include "test_support.hpp"

using namespace scc;
using namespace scc::testing;

namespace {

Bigraph bigraph_from_mask(int nx, int ny, std::uint64_t mask) {
  EdgeList edges;
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      if ((mask >> (x * ny + y)) & 1U) edges.emplace_back(x, y);
  return Bigraph(nx, ny, edges);
}

bool naive_bigraph_slash_free(const Bigraph& h, const VertexOrdering& rows, const VertexOrdering& cols) {
  return !naive_has_slash(h.nx(), h.ny(), [&](int i, int k) { return h.adjacent(rows[i], cols[k]); });
}

}  // namespace

TEST(BipartiteDouble, Examples) {
  EXPECT_EQ(bipartite_double(Graph(1)), Bigraph(1, 1, {{0, 0}}));
  // B(K2) is a 4-cycle
  EXPECT_EQ(bipartite_double(complete_graph(2)), Bigraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  const Bigraph b = bipartite_double(k33());
  EXPECT_EQ(b.nx(), 6);
  EXPECT_EQ(b.ny(), 6);
  EXPECT_EQ(b.edge_count(), 24);
  EXPECT_TRUE(b.adjacent(0, 3));
  EXPECT_TRUE(b.adjacent(3, 0));
  EXPECT_FALSE(b.adjacent(0, 1));
}

TEST(CloseBothSides, Examples) {
  // 2K2 closes to C4 0-1-3-2-0
  EXPECT_EQ(close_both_sides(Bigraph(2, 2, {{0, 0}, {1, 1}})), Graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
  EXPECT_EQ(close_both_sides(Bigraph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})), complete_graph(4));
  EXPECT_EQ(close_both_sides(Bigraph(1, 1, {{0, 0}})), complete_graph(2));
  EXPECT_EQ(close_both_sides(Bigraph(0, 0)).size(), 0);
}

TEST(CocomparabilityBigraph, Examples) {
  EXPECT_TRUE(recognize_cocomparability_bigraph(bipartite_double(k33())));
  EXPECT_TRUE(recognize_cocomparability_bigraph(Bigraph(2, 2, {{0, 0}, {1, 1}})));
  EXPECT_TRUE(recognize_cocomparability_bigraph(Bigraph(0, 0)));
}

TEST(CocomparabilityBigraph, AgreesWithOracleUpToFourByFour) {
  int rejected = 0;
  for (int nx = 1; nx <= 4; ++nx)
    for (int ny = 1; ny <= 4; ++ny)
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (nx * ny)); ++m) {
        const Bigraph h = bigraph_from_mask(nx, ny, m);
        const auto ords = oracle_cocomp_bigraph(h);
        EXPECT_EQ(recognize_cocomparability_bigraph(h), ords.has_value()) << nx << "x" << ny << " mask " << m;
        if (ords) EXPECT_TRUE(naive_bigraph_slash_free(h, ords->first, ords->second));
        rejected += !ords;
      }
  // none below 4x4; the 4x4 rejections include every 8-cycle
  EXPECT_EQ(rejected, 72);
}

TEST(CocomparabilityBigraph, EightCycleIsRejected) {
  const Bigraph c8 = bigraph_from_mask(4, 4, 13740);
  EXPECT_EQ(c8, Bigraph(4, 4, {{0, 2}, {0, 3}, {1, 1}, {1, 3}, {2, 0}, {2, 2}, {3, 0}, {3, 1}}));
  EXPECT_FALSE(recognize_cocomparability_bigraph(c8));
  EXPECT_FALSE(oracle_cocomp_bigraph(c8).has_value());
}

TEST(CocomparabilityBigraph, AgreesWithOracleOnSampledFourByFour) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Bigraph h = random_bigraph(4, 4, 0.5, seed);
    EXPECT_EQ(recognize_cocomparability_bigraph(h), oracle_cocomp_bigraph(h).has_value()) << "seed " << seed;
  }
}

TEST(CocomparabilityBigraph, DoublesOfStrongGraphsUpToFiveVertices) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n))
      if (recognize_strong_cocomparability(g, {.ordering_bound = 0}).strong)
        EXPECT_TRUE(recognize_cocomparability_bigraph(bipartite_double(g)));
}

TEST(SplitClosureOrdering, ProjectsToSlashFreePair) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Bigraph h = random_bigraph(1 + seed % 4, 1 + (seed / 4) % 4, 0.5, seed);
    const auto search = search_strong_ordering(close_both_sides(h), 0);
    if (!search.ordering) continue;
    const BigraphOrdering split = split_closure_ordering(h, *search.ordering);
    EXPECT_TRUE(is_bigraph_slash_free(h, split.rows, split.cols));
    EXPECT_TRUE(naive_bigraph_slash_free(h, split.rows, split.cols));
  }
  EXPECT_THROW(split_closure_ordering(Bigraph(2, 2), VertexOrdering::identity(3)), std::invalid_argument);
}

TEST(Generators, Shapes) {
  EXPECT_EQ(path_graph(1).edge_count(), 0);
  EXPECT_EQ(path_graph(5).edge_count(), 4);
  EXPECT_EQ(cycle_graph(5), c5());
  EXPECT_EQ(complete_graph(5).edge_count(), 10);
  EXPECT_EQ(complete_bipartite(3, 3), k33());
  EXPECT_EQ(random_graph(6, 0.0, 1).edge_count(), 0);
  EXPECT_EQ(random_graph(6, 1.0, 1), complete_graph(6));
  EXPECT_EQ(random_graph(9, 0.5, 42), random_graph(9, 0.5, 42));
  EXPECT_EQ(random_interval(5, 0, 3), complete_graph(5));
  EXPECT_EQ(random_bigraph(2, 3, 1.0, 0).edge_count(), 6);
}

TEST(Generators, Errors) {
  EXPECT_THROW(path_graph(0), std::invalid_argument);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_THROW(complete_graph(-1), std::invalid_argument);
  EXPECT_THROW(random_graph(4, 1.5, 0), std::invalid_argument);
  EXPECT_THROW(random_interval(4, -1, 0), std::invalid_argument);
  EXPECT_THROW(random_bigraph(-1, 2, 0.5, 0), std::invalid_argument);
  EXPECT_THROW(parse_family("hypercube"), std::invalid_argument);
}

TEST(Generators, FamiliesByName) {
  const auto g = generate(parse_family("cycle"), {.n = 5});
  EXPECT_EQ(std::get<Graph>(g), c5());
  const auto b = generate(parse_family("random_bigraph"), {.n = 2, .m = 3, .p = 1.0});
  EXPECT_EQ(std::get<Bigraph>(b).edge_count(), 6);
  const auto iv = generate(parse_family("random_interval"), {.n = 10, .seed = 4});
  EXPECT_EQ(std::get<Graph>(iv), random_interval(10, 20, 4));
}

TEST(Generators, IntervalGraphsAreStrong) {
  EXPECT_TRUE(recognize_strong_cocomparability(random_interval(10, 20, 1)).strong);
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    EXPECT_TRUE(recognize_strong_cocomparability(random_interval(25, 30, seed), {.ordering_bound = 0}).strong);
}

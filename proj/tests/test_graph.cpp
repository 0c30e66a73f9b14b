#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "scc/constructions.hpp"
#include "scc/graph_io.hpp"
#include "scc/random.hpp"
#include "test_support.hpp"

using namespace scc;
using namespace scc::testing;

TEST(GraphIo, DecodesReflexivePath) {
  const Graph g = read_graph("4 3\n0 1\n1 2\n2 3");
  EXPECT_EQ(g, p4());
  for (int v = 0; v < 4; ++v) EXPECT_TRUE(g.adjacent(v, v));
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(GraphIo, DecodesSingleVertex) {
  const Graph g = read_graph("1 0");
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.adjacent(0, 0));
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(GraphIo, LoopsAndDuplicatesInReflexiveInput) {
  const Graph g = read_graph("# comment\n3 4\n0 0\n0 1\n1 0\n\n2 1\n");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(GraphIo, RejectsMalformedInput) {
  EXPECT_THROW(decode_graph("3 1\n0 0", GraphKind::Simple), FormatError);
  EXPECT_THROW(read_graph(""), FormatError);
  EXPECT_THROW(read_graph("3"), FormatError);
  EXPECT_THROW(read_graph("3 1\n0 3"), FormatError);
  EXPECT_THROW(read_graph("3 2\n0 1"), FormatError);
  EXPECT_THROW(read_graph("3 1\n0 1\n1 2"), FormatError);
  EXPECT_THROW(read_graph("3 1\n0 x"), FormatError);
  EXPECT_THROW(read_graph("3 1\n0 1 2"), FormatError);
  EXPECT_THROW(read_graph("-1 0"), FormatError);
  EXPECT_THROW(read_bigraph("2 2 1\n0 2"), FormatError);
  EXPECT_THROW(read_bigraph("2 2\n"), FormatError);
}

TEST(GraphIo, CanonicalEncoding) {
  EXPECT_EQ(encode(read_graph("4 3\n2 3\n1 0\n2 1\n")), "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(encode(read_bigraph("2 3 2\n1 2\n0 0\n")), "2 3 2\n0 0\n1 2\n");
}

TEST(GraphIo, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(1 + seed % 12, 0.4, seed);
    EXPECT_EQ(read_graph(encode(g)), g);
    const SimpleGraph h = complement_simple(g);
    EXPECT_EQ(read_simple_graph(encode(h)), h);
    const Bigraph b = random_bigraph(1 + seed % 5, 1 + seed % 7, 0.5, seed);
    EXPECT_EQ(read_bigraph(encode(b)), b);
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement_simple(complete_graph(3)).edge_count(), 0);
  // complement of a-b-c-d has edges ac, ad, bd
  EXPECT_EQ(complement_simple(p4()).edges(), (EdgeList{{0, 2}, {0, 3}, {1, 3}}));
  const SimpleGraph c = complement_simple(c5());
  // C5 is self-complementary: 0-2-4-1-3-0
  EXPECT_EQ(c, SimpleGraph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
}

TEST(VertexOrdering, RejectsNonPermutations) {
  EXPECT_THROW(VertexOrdering({0, 0}), std::invalid_argument);
  EXPECT_THROW(VertexOrdering({1, 2}), std::invalid_argument);
  EXPECT_NO_THROW(VertexOrdering({1, 0}));
  EXPECT_THROW(is_slash_free_ordering(p4(), VertexOrdering::identity(3)), std::invalid_argument);
}

TEST(Slash, PathAndCycleExamples) {
  EXPECT_TRUE(naive_slash_free(p4(), {0, 1, 2, 3}));
  EXPECT_TRUE(is_slash_free_ordering(p4(), VertexOrdering({0, 1, 2, 3})));
  EXPECT_TRUE(naive_slash_free(c4(), {0, 1, 3, 2}));
  EXPECT_TRUE(is_slash_free_ordering(c4(), VertexOrdering({0, 1, 3, 2})));
  EXPECT_FALSE(naive_slash_free(c4(), {0, 1, 2, 3}));
  EXPECT_FALSE(is_slash_free_ordering(c4(), VertexOrdering({0, 1, 2, 3})));
}

TEST(Slash, EveryOrderingOfK33Fails) {
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  int orderings = 0;
  do {
    ++orderings;
    EXPECT_FALSE(is_slash_free_ordering(k33(), VertexOrdering(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(orderings, 720);
}

TEST(Slash, AgreesWithQuadrupleScan) {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(2 + trial % 8, 0.5, trial);
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    EXPECT_EQ(is_slash_free_ordering(g, VertexOrdering(perm)), naive_slash_free(g, perm)) << "trial " << trial;
  }
}

TEST(Slash, RelabellingEquivariance) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(3 + trial % 6, 0.5, 100 + trial);
    const int n = g.size();
    std::vector<int> order(n), relabel(n);
    std::iota(order.begin(), order.end(), 0);
    std::iota(relabel.begin(), relabel.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::swap(order[i], order[rng.uniform_int(0, i)]);
      std::swap(relabel[i], relabel[rng.uniform_int(0, i)]);
    }
    std::vector<int> moved(n);
    for (int i = 0; i < n; ++i) moved[i] = relabel[order[i]];
    EXPECT_EQ(is_slash_free_ordering(g, VertexOrdering(order)),
              is_slash_free_ordering(g.relabelled(relabel), VertexOrdering(moved)));
  }
}

TEST(Slash, CompleteGraphsAreSlashFreeInAnyOrder) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      EXPECT_TRUE(is_slash_free_ordering(complete_graph(n), VertexOrdering(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(BigraphSlash, Examples) {
  EXPECT_TRUE(is_bigraph_slash_free(Bigraph(1, 1, {{0, 0}}), VertexOrdering::identity(1), VertexOrdering::identity(1)));
  const Bigraph two_k2(2, 2, {{0, 0}, {1, 1}});
  EXPECT_TRUE(is_bigraph_slash_free(two_k2, VertexOrdering({0, 1}), VertexOrdering({0, 1})));
  EXPECT_FALSE(is_bigraph_slash_free(two_k2, VertexOrdering({0, 1}), VertexOrdering({1, 0})));
  EXPECT_THROW(is_bigraph_slash_free(two_k2, VertexOrdering({0}), VertexOrdering({0, 1})), std::invalid_argument);
}

TEST(Bitset, NextAndLast) {
  Bitset b(130);
  EXPECT_EQ(b.first(), 130);
  EXPECT_EQ(b.last(), -1);
  b.set(3);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.first(), 3);
  EXPECT_EQ(b.next(4), 64);
  EXPECT_EQ(b.next(65), 129);
  EXPECT_EQ(b.last(), 129);
  EXPECT_EQ(b.count(), 3);
}

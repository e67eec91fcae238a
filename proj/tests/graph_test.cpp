#include "gjohnson/graph.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gjohnson/errors.hpp"
#include "gtest/gtest.h"

namespace gjohnson {
namespace {

TEST(Vertex, ValidatesElements) {
  EXPECT_NO_THROW(Vertex(5, {1, 2}));
  EXPECT_THROW(Vertex(5, {2, 1}), ParameterError);
  EXPECT_THROW(Vertex(5, {1, 1}), ParameterError);
  EXPECT_THROW(Vertex(5, {0, 3}), ParameterError);
  EXPECT_THROW(Vertex(5, {3, 6}), ParameterError);
  EXPECT_EQ(Vertex(7, {1, 3, 7}).to_string(), "{1,3,7}");
  EXPECT_EQ(*Vertex(7, {1, 3, 7}).mask(), 0b1000101u);
  EXPECT_FALSE(Vertex(70, {1, 69}).mask().has_value());
}

TEST(Vertex, IntersectionSize) {
  EXPECT_EQ(intersection_size(Vertex(5, {1, 2}), Vertex(5, {1, 2})), 2);
  EXPECT_EQ(intersection_size(Vertex(5, {1, 2}), Vertex(5, {3, 4})), 0);
  EXPECT_EQ(intersection_size(Vertex(5, {1, 2, 3}), Vertex(5, {3, 4, 5})), 1);
  // Element-sequence path (no masks).
  EXPECT_EQ(intersection_size(Vertex(80, {1, 50, 79}), Vertex(80, {2, 50, 79})), 2);
  EXPECT_THROW(intersection_size(Vertex(5, {1, 2}), Vertex(6, {1, 2})), ParameterError);
  EXPECT_THROW(intersection_size(Vertex(5, {1, 2}), Vertex(5, {1, 2, 3})), ParameterError);
}

TEST(JohnsonGraph, Adjacency) {
  const JohnsonGraph petersen(GraphParams(5, 2, 0));
  EXPECT_TRUE(petersen.adjacent(petersen.vertex({1, 2}), petersen.vertex({3, 4})));
  EXPECT_FALSE(petersen.adjacent(petersen.vertex({1, 2}), petersen.vertex({2, 3})));
  const JohnsonGraph johnson(GraphParams(4, 2, 1));
  EXPECT_TRUE(johnson.adjacent(johnson.vertex({1, 2}), johnson.vertex({2, 3})));
}

TEST(JohnsonGraph, ColexRank) {
  const JohnsonGraph g(GraphParams(5, 2, 0));
  // Colex order of 2-subsets: 12 13 23 14 24 34 15 25 35 45.
  const std::vector<std::vector<int>> order = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4},
                                               {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  for (Rank k = 0; k < order.size(); ++k) {
    EXPECT_EQ(g.rank(g.vertex(order[k])), k);
    EXPECT_EQ(g.unrank(k), g.vertex(order[k]));
  }
  EXPECT_THROW(g.unrank(10), ParameterError);
  EXPECT_THROW(g.rank(Vertex(6, {1, 2})), ParameterError);
}

TEST(JohnsonGraph, RankRoundTripProperty) {
  std::mt19937_64 gen(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 60)(gen);
    const int r = std::uniform_int_distribution<int>(1, std::min(n - 1, 6))(gen);
    const JohnsonGraph g(GraphParams(n, r, r - 1));
    std::vector<int> pool(n);
    for (int k = 0; k < n; ++k) pool[k] = k + 1;
    std::shuffle(pool.begin(), pool.end(), gen);
    std::vector<int> elements(pool.begin(), pool.begin() + r);
    const Vertex v = g.vertex(elements);
    const Rank k = g.rank(v);
    ASSERT_LT(k, g.vertex_count());
    EXPECT_EQ(g.unrank(k), v);
    const Rank any = std::uniform_int_distribution<Rank>(0, g.vertex_count() - 1)(gen);
    EXPECT_EQ(g.rank(g.unrank(any)), any);
  }
}

TEST(JohnsonGraph, RankIsABijection) {
  const JohnsonGraph g(GraphParams(9, 4, 2));
  std::set<std::vector<int>> seen;
  for (Rank k = 0; k < g.vertex_count(); ++k) {
    const Vertex v = g.unrank(k);
    seen.insert({v.elements().begin(), v.elements().end()});
  }
  EXPECT_EQ(seen.size(), g.vertex_count());
}

TEST(JohnsonGraph, Neighbors) {
  const JohnsonGraph g(GraphParams(5, 2, 0));
  const auto nbrs = g.neighbors(g.vertex({1, 2}));
  ASSERT_EQ(nbrs.size(), 3u);
  EXPECT_EQ(nbrs[0], g.vertex({3, 4}));
  EXPECT_EQ(nbrs[1], g.vertex({3, 5}));
  EXPECT_EQ(nbrs[2], g.vertex({4, 5}));

  const JohnsonGraph complete(GraphParams(6, 1, 0));
  const auto all = complete.neighbors(complete.vertex({4}));
  ASSERT_EQ(all.size(), 5u);
  for (const Vertex& v : all) EXPECT_NE(v.elements()[0], 4);
}

TEST(JohnsonGraph, RegularAndSymmetric) {
  for (const auto& params : {GraphParams(7, 3, 1), GraphParams(8, 3, 0), GraphParams(9, 4, 2),
                             GraphParams(12, 4, 1)}) {
    const JohnsonGraph g(params);
    const auto adj = g.adjacency_lists();
    for (Rank v = 0; v < g.vertex_count(); ++v) {
      ASSERT_EQ(adj[v].size(), g.degree());
      EXPECT_TRUE(std::is_sorted(adj[v].begin(), adj[v].end()));
      EXPECT_EQ(std::adjacent_find(adj[v].begin(), adj[v].end()), adj[v].end());
      for (std::uint32_t w : adj[v]) {
        EXPECT_TRUE(std::binary_search(adj[w].begin(), adj[w].end(), v));
      }
    }
  }
}

TEST(JohnsonGraph, PartitionClasses) {
  const JohnsonGraph g(GraphParams(5, 2, 0));
  const Vertex y = g.vertex({1, 2});
  const auto self = g.partition_class(y, 2);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0], y);
  EXPECT_EQ(g.partition_class(y, 0).size(), 3u);
  EXPECT_EQ(g.partition_class(y, 1).size(), 6u);
  EXPECT_THROW(g.partition_class(y, 3), ParameterError);
  EXPECT_THROW(g.partition_class(y, -1), ParameterError);

  const JohnsonGraph big(GraphParams(10, 4, 1));
  for (Rank k : {Rank{0}, Rank{77}, big.vertex_count() - 1}) {
    const Vertex center = big.unrank(k);
    std::set<Rank> all;
    std::uint64_t total = 0;
    for (int j = 0; j <= 4; ++j) {
      for (const Vertex& x : big.partition_class(center, j)) {
        EXPECT_EQ(intersection_size(x, center), j);
        all.insert(big.rank(x));
        ++total;
      }
    }
    EXPECT_EQ(total, big.vertex_count());
    EXPECT_EQ(all.size(), big.vertex_count());
  }
}

TEST(JohnsonGraph, EdgeStream) {
  EXPECT_EQ(JohnsonGraph(GraphParams(5, 2, 0)).edges().size(), 15u);
  EXPECT_EQ(JohnsonGraph(GraphParams(4, 2, 1)).edges().size(), 12u);
  for (int n = 2; n <= 12; ++n) {
    EXPECT_EQ(JohnsonGraph(GraphParams(n, 1, 0)).edges().size(),
              static_cast<std::size_t>(n * (n - 1) / 2));
  }
  const JohnsonGraph g(GraphParams(7, 3, 1));
  const auto edges = g.edges();
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  std::vector<RankEdge> expected;
  for (Rank a = 0; a < g.vertex_count(); ++a) {
    for (Rank b = a + 1; b < g.vertex_count(); ++b) {
      if (g.adjacent(g.unrank(a), g.unrank(b))) expected.push_back({a, b});
    }
  }
  EXPECT_EQ(edges, expected);
}

}  // namespace
}  // namespace gjohnson

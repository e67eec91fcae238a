#include "gjohnson/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gjohnson {
namespace {

const GraphParams kPetersen(5, 2, 0);

TEST(CountPaths, Petersen) {
  WorkBudget budget;
  EXPECT_EQ(count_paths(kPetersen, 2, PathEndpoints::canonical(), budget).p_t, 1);
  EXPECT_EQ(count_paths(kPetersen, 3, PathEndpoints::canonical(), budget).p_t, 0);
  EXPECT_EQ(count_paths(kPetersen, 5, PathEndpoints::canonical(), budget).p_t, 4);
  const PathCount all = count_paths(kPetersen, 5, PathEndpoints::all_edges(), budget);
  EXPECT_EQ(all.p_t, 4);
  EXPECT_EQ(all.edges_checked, 15u);
}

TEST(CountPaths, ErrorsAndExplicitEdges) {
  WorkBudget budget;
  EXPECT_THROW(count_paths(kPetersen, 1, PathEndpoints::canonical(), budget), ParameterError);
  // Ranks 0 = {1,2} and 5 = {3,4} are adjacent; 0 and 1 = {1,3} are not.
  EXPECT_EQ(count_paths(kPetersen, 5, PathEndpoints::explicit_edge({0, 5}), budget).p_t, 4);
  EXPECT_THROW(count_paths(kPetersen, 5, PathEndpoints::explicit_edge({0, 1}), budget),
               ParameterError);
  EXPECT_THROW(count_paths(kPetersen, 5, PathEndpoints::explicit_edge({0, 99}), budget),
               ParameterError);
}

TEST(CountPaths, MatchesOracleAndIsEdgeIndependent) {
  for (const auto& params : {GraphParams(6, 2, 1), GraphParams(7, 3, 1), GraphParams(6, 2, 0),
                             GraphParams(7, 1, 0)}) {
    const auto g = oracle::build(params.n(), params.r(), params.s());
    const auto [x, y] = g.edges.front();
    for (int t = 2; t <= 6; ++t) {
      WorkBudget budget;
      const PathCount all = count_paths(params, t, PathEndpoints::all_edges(), budget);
      EXPECT_EQ(all.p_t, oracle::paths(g, x, y, t)) << params.to_string() << " t=" << t;
    }
  }
}

TEST(CountPaths, BudgetExceededReportsProgress) {
  WorkBudget budget(1000);
  try {
    count_paths(GraphParams(9, 3, 1), 7, PathEndpoints::canonical(), budget);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.nodes_expanded(), 1000u);
    EXPECT_FALSE(e.progress().empty());
  }
}

TEST(CycleCensus, LemmaIdentityExamples) {
  WorkBudget budget;
  const CycleCensus c5 = count_cycles_lemma(kPetersen, 5, budget);
  EXPECT_EQ(c5.c_t, 12);
  EXPECT_EQ(*c5.p_t, 4);
  EXPECT_EQ(c5.method, CensusMethod::kLemmaIdentity);
  EXPECT_EQ(count_cycles_lemma(kPetersen, 3, budget).c_t, 0);
  EXPECT_EQ(count_cycles_lemma(GraphParams(5, 1, 0), 3, budget).c_t, 10);
  EXPECT_THROW(count_cycles_lemma(kPetersen, 2, budget), ParameterError);
}

TEST(CycleCensus, DirectEnumerationExamples) {
  WorkBudget budget;
  EXPECT_EQ(count_cycles_direct(kPetersen, 6, budget).c_t, 10);
  EXPECT_EQ(count_cycles_direct(kPetersen, 10, budget).c_t, 0);
  // J(4,2) is the octahedron K_{2,2,2}.
  EXPECT_EQ(count_cycles_direct(GraphParams(4, 2, 1), 3, budget).c_t, 8);
  EXPECT_EQ(count_cycles_direct(GraphParams(4, 2, 1), 4, budget).c_t, 15);
  EXPECT_FALSE(count_cycles_direct(kPetersen, 6, budget).p_t.has_value());
}

TEST(CycleCensus, BothRoutesMatchTheWalkOracle) {
  for (const auto& params : {GraphParams(5, 2, 0), GraphParams(5, 2, 1), GraphParams(6, 2, 0),
                             GraphParams(6, 3, 2), GraphParams(6, 1, 0)}) {
    const auto g = oracle::build(params.n(), params.r(), params.s());
    for (int t = 3; t <= 7; ++t) {
      WorkBudget budget;
      const std::uint64_t expected = oracle::cycles(g.adj, t);
      EXPECT_EQ(count_cycles_direct(params, t, budget).c_t, expected)
          << params.to_string() << " t=" << t;
      EXPECT_EQ(count_cycles_lemma(params, t, budget).c_t, expected)
          << params.to_string() << " t=" << t;
    }
  }
}

TEST(CycleCensus, CompleteGraphTriangles) {
  for (int n = 3; n <= 10; ++n) {
    WorkBudget budget;
    EXPECT_EQ(count_cycles_direct(GraphParams(n, 1, 0), 3, budget).c_t, binom(n, 3));
    EXPECT_EQ(count_cycles_lemma(GraphParams(n, 1, 0), 3, budget).c_t, binom(n, 3));
  }
}

TEST(CycleCensus, RootPartitionsSumToTheWhole) {
  const GraphParams params(7, 3, 1);
  const int t = 4;
  WorkBudget budget;
  const BigInt whole = count_cycles_direct(params, t, budget).c_t;
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rank> cuts = {0, 35};
    for (int k = 0; k < 4; ++k) cuts.push_back(std::uniform_int_distribution<Rank>(0, 35)(gen));
    std::sort(cuts.begin(), cuts.end());
    BigInt sum = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      sum += count_cycles_direct_roots(params, t, cuts[k], cuts[k + 1], budget);
    }
    EXPECT_EQ(sum, whole);
  }
}

TEST(CycleCensus, DirectBudget) {
  WorkBudget budget(50);
  EXPECT_THROW(count_cycles_direct(GraphParams(8, 3, 1), 6, budget), BudgetExceeded);
}

TEST(CanonicalCycle, RotationAndReflectionInvariance) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int t = std::uniform_int_distribution<int>(3, 12)(gen);
    std::vector<Rank> cycle(t);
    std::iota(cycle.begin(), cycle.end(), Rank{0});
    std::shuffle(cycle.begin(), cycle.end(), gen);
    const CanonicalCycle canon(cycle);
    EXPECT_EQ(CanonicalCycle(canon.vertices()), canon);
    const auto& v = canon.vertices();
    EXPECT_EQ(v.front(), *std::min_element(v.begin(), v.end()));
    EXPECT_LT(v[1], v.back());
    std::vector<Rank> moved = cycle;
    std::rotate(moved.begin(), moved.begin() + trial % t, moved.end());
    if (trial % 2) std::reverse(moved.begin(), moved.end());
    EXPECT_EQ(CanonicalCycle(moved), canon);
  }
  EXPECT_THROW(CanonicalCycle({1, 2}), ParameterError);
}

TEST(EnumerateCycles, Petersen) {
  WorkBudget budget;
  const auto five = enumerate_cycles(kPetersen, 5, 1000, budget);
  EXPECT_EQ(five.size(), 12u);
  EXPECT_EQ(std::set<CanonicalCycle>(five.begin(), five.end()).size(), 12u);
  for (const auto& c : five) EXPECT_EQ(CanonicalCycle(c.vertices()), c);
  EXPECT_TRUE(enumerate_cycles(kPetersen, 4, 1000, budget).empty());
  EXPECT_THROW(enumerate_cycles(kPetersen, 5, 11, budget), CapExceeded);
  EXPECT_EQ(enumerate_cycles(kPetersen, 6, 1000, budget).size(), 10u);
}

TEST(Overlap, Examples) {
  const CanonicalCycle abc({0, 1, 2});
  const CanonicalCycle abd({0, 1, 3});
  const CanonicalCycle cde({2, 3, 4});
  const OverlapStats self = overlap(abc, abc);
  EXPECT_EQ(self.shared_edges, 3);
  EXPECT_EQ(self.maximal_paths, 1);
  const OverlapStats one = overlap(abc, abd);
  EXPECT_EQ(one.shared_edges, 1);
  EXPECT_EQ(one.maximal_paths, 1);
  const OverlapStats none = overlap(abc, cde);
  EXPECT_EQ(none.shared_edges, 0);
  EXPECT_EQ(none.maximal_paths, 0);
  // Two hexagons sharing the opposite edges {0,1} and {3,4}.
  const CanonicalCycle h1({0, 1, 2, 3, 4, 5});
  const CanonicalCycle h2({0, 1, 7, 3, 4, 8});
  const OverlapStats two = overlap(h1, h2);
  EXPECT_EQ(two.shared_edges, 2);
  EXPECT_EQ(two.maximal_paths, 2);
  EXPECT_THROW(overlap(abc, h1), ParameterError);
}

TEST(Overlap, InequalitiesOnEnumeratedCycles) {
  for (const auto& [params, t] : {std::pair{GraphParams(5, 2, 0), 8}, std::pair{GraphParams(6, 1, 0), 5},
                                  std::pair{GraphParams(5, 2, 1), 5}}) {
    WorkBudget budget;
    const auto cycles = enumerate_cycles(params, t, 5000, budget);
    for (std::size_t a = 0; a < cycles.size(); ++a) {
      for (std::size_t b = 0; b < cycles.size(); ++b) {
        if (a == b) continue;
        const OverlapStats o = overlap(cycles[a], cycles[b]);
        if (o.shared_edges == 0) continue;
        EXPECT_GE(o.maximal_paths, 1);
        EXPECT_LE(o.maximal_paths, o.shared_edges);
        EXPECT_LE(o.shared_edges, t - o.maximal_paths);
        EXPECT_LE(o.maximal_paths, t / 2);
      }
    }
  }
}

TEST(ExactMoments, CompleteGraphK5) {
  WorkBudget budget;
  const ExactMoments m = exact_moments(GraphParams(5, 1, 0), 3, 0.5, budget);
  EXPECT_DOUBLE_EQ(m.expectation, 1.25);
  EXPECT_DOUBLE_EQ(m.variance, 130.0 / 64.0);
  EXPECT_NEAR(m.log_expectation, std::log(1.25), 1e-12);

  const OverlapProfile profile =
      overlap_profile(enumerate_cycles(GraphParams(5, 1, 0), 3, 100, budget));
  EXPECT_EQ(profile.cycles, 10u);
  ASSERT_EQ(profile.pairs_by_shared_edges.size(), 1u);
  EXPECT_EQ(profile.pairs_by_shared_edges.at(1), 60u);
}

TEST(ExactMoments, DegenerateProbabilities) {
  WorkBudget budget;
  for (const auto& [params, t] : {std::pair{GraphParams(5, 2, 0), 5}, std::pair{GraphParams(6, 1, 0), 4}}) {
    const ExactMoments full = exact_moments(params, t, 1.0, budget);
    EXPECT_EQ(full.expectation, count_cycles_direct(params, t, budget).c_t.convert_to<double>());
    EXPECT_EQ(full.variance, 0.0);
    const ExactMoments none = exact_moments(params, t, 0.0, budget);
    EXPECT_EQ(none.expectation, 0.0);
    EXPECT_EQ(none.variance, 0.0);
  }
  EXPECT_THROW(exact_moments(kPetersen, 5, 1.5, budget), ParameterError);
  EXPECT_THROW(exact_moments(kPetersen, 5, 0.5, budget, 5), CapExceeded);
}

TEST(ExactMoments, MatchesExhaustiveSubsetOracle) {
  // Sum over all 2^|E| subgraphs: K_4 and K_5 triangles and 4-cycles,
  // Petersen 5-cycles.
  struct Case {
    GraphParams params;
    int t;
    double p;
  };
  for (const Case& c : {Case{GraphParams(4, 1, 0), 3, 0.3}, Case{GraphParams(5, 1, 0), 3, 0.5},
                        Case{GraphParams(5, 1, 0), 4, 0.7}, Case{GraphParams(5, 2, 0), 5, 0.6}}) {
    const auto g = oracle::build(c.params.n(), c.params.r(), c.params.s());
    const oracle::ExactLaw law = oracle::percolation_law(g, c.t, c.p);
    WorkBudget budget;
    const ExactMoments m = exact_moments(c.params, c.t, c.p, budget);
    EXPECT_NEAR(m.expectation, law.mean, 1e-12) << c.params.to_string();
    EXPECT_NEAR(m.variance, law.variance, 1e-10) << c.params.to_string();
  }
}

TEST(ExactMoments, VarianceDominatesDiagonalBelowOneCopy) {
  WorkBudget budget;
  for (const auto& [params, t] : {std::pair{GraphParams(7, 1, 0), 4}, std::pair{GraphParams(5, 2, 0), 6}}) {
    const OverlapProfile profile = overlap_profile(enumerate_cycles(params, t, 20000, budget));
    for (double p : {0.01, 0.05, 0.1, 0.2}) {
      const ExactMoments m = exact_moments(profile, p);
      if (m.expectation >= 1) continue;
      EXPECT_GE(m.variance, m.expectation * (1 - std::pow(p, t)) - 1e-15);
    }
  }
}

TEST(Bounds, PathAndCycleBoundsOnSmallGraphs) {
  for (const auto& params : {GraphParams(8, 2, 0), GraphParams(7, 2, 1), GraphParams(9, 3, 0),
                             GraphParams(7, 3, 2)}) {
    const BigInt n1 = degree(params);
    const BigInt a_ss = a_ij(params, params.s(), params.s());
    for (int t = 3; t <= 6; ++t) {
      WorkBudget budget;
      const CycleCensus census = count_cycles_lemma(params, t, budget);
      const BigInt p_t = *census.p_t;
      BigInt upper = 1, lower = 1, n1_t = 1;
      for (int k = 0; k < t - 2; ++k) upper *= n1;
      if (a_ss > t) {
        for (int k = 0; k < t - 2; ++k) lower *= a_ss - t;
        EXPECT_GE(p_t, lower) << params.to_string() << " t=" << t;
      }
      EXPECT_LE(p_t, upper) << params.to_string() << " t=" << t;
      for (int k = 0; k < t - 1; ++k) n1_t *= n1;
      EXPECT_LE(2 * t * census.c_t, vertex_count(params) * n1_t);
    }
  }
}

TEST(Bounds, NsShapeNeedsItsConstantAtSmallN) {
  // 2t c_t <= n^s N1^t holds only up to a constant: G(9,3,0) has
  // 2t c_4 = 181440 > 20^4.
  WorkBudget budget;
  const GraphParams params(9, 3, 0);
  EXPECT_EQ(8 * count_cycles_lemma(params, 4, budget).c_t, 181440);
  EXPECT_EQ(degree(params), 20);
}

}  // namespace
}  // namespace gjohnson

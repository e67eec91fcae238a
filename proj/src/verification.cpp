#include "gjohnson/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "gjohnson/counting.hpp"
#include "gjohnson/graph.hpp"

namespace gjohnson {

namespace {

constexpr std::size_t kMaxRecordedFailures = 50;

void expect(VerifyReport& report, bool ok, const std::string& what) {
  ++report.checks;
  if (!ok && report.failures.size() < kMaxRecordedFailures) report.failures.push_back(what);
}

std::string tuple(const GraphParams& p) {
  return fmt::format("n={} r={} s={}", p.n(), p.r(), p.s());
}

BigInt term(const GraphParams& params, int i, int j, int m) {
  const int n = params.n(), r = params.r(), s = params.s();
  return binom(i, m) * binom(r - i, s - m) * binom(r - i, j - m) *
         binom(n - 2 * r + i, r - s - j + m);
}

BigInt power(const BigInt& base, int exponent) {
  BigInt out = 1;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

}  // namespace

void verify_combinatorics(const GraphParams& params, VerifyReport& report) {
  const int n = params.n(), r = params.r(), s = params.s();
  const JohnsonGraph graph(params);
  const std::uint64_t count = graph.vertex_count();
  const BigInt n1 = degree(params);

  std::vector<std::vector<BigInt>> table(r + 1, std::vector<BigInt>(r + 1));
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= r; ++j) table[i][j] = a_ij(params, i, j);
  }

  // Choice independence against the brute-force count for every (x, y).
  std::vector<std::uint64_t> masks(count);
  for (Rank v = 0; v < count; ++v) {
    const Vertex vertex = graph.unrank(v);
    std::uint64_t mask = 0;
    for (int e : vertex.elements()) mask |= std::uint64_t{1} << ((e - 1) % 64);
    masks[v] = mask;
  }
  const AdjacencyLists adj = graph.adjacency_lists();
  auto meet = [&](Rank a, Rank b) {
    if (n <= 64) return std::popcount(masks[a] & masks[b]);
    return intersection_size(graph.unrank(a), graph.unrank(b));
  };
  std::vector<std::uint64_t> by_class(r + 1);
  bool all_match = true;
  for (Rank y = 0; y < count; ++y) {
    for (Rank x = 0; x < count; ++x) {
      const int i = meet(x, y);
      std::fill(by_class.begin(), by_class.end(), 0);
      for (std::uint32_t z : adj[x]) ++by_class[meet(z, y)];
      for (int j = 0; j <= r; ++j) {
        if (table[i][j] != by_class[j]) {
          all_match = false;
          expect(report, false,
                 fmt::format("A_i^j mismatch {} i={} j={}: formula {} vs brute force {} "
                             "(x={}, y={})",
                             tuple(params), i, j, table[i][j].str(), by_class[j],
                             graph.unrank(x).to_string(), graph.unrank(y).to_string()));
        }
      }
    }
  }
  expect(report, all_match, fmt::format("A_i^j brute force {}", tuple(params)));

  for (int j = 0; j <= r; ++j) {
    expect(report, table[r][j] == (j == s ? n1 : BigInt(0)),
           fmt::format("A_r^j != delta_sj N1 at {} j={}", tuple(params), j));
  }
  for (int i = 0; i <= r; ++i) {
    expect(report, table[i][r] == (i == s ? 1 : 0),
           fmt::format("A_i^r != delta_is at {} i={}", tuple(params), i));
  }
  for (int i = 0; i <= r; ++i) {
    if (n - 2 * r + i < 0) continue;  // V_i(y) is empty
    BigInt row = 0;
    for (int j = 0; j <= r; ++j) row += table[i][j];
    expect(report, row == n1, fmt::format("row sum of A_i^j != N1 at {} i={}", tuple(params), i));
  }

  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= r; ++j) {
      const MRange range = m_range(params, i, j);
      bool range_ok = range.empty() == (table[i][j] == 0);
      for (int m = -2; m <= r + 2; ++m) {
        const bool inside = !range.empty() && range.m_min <= m && m <= range.m_max;
        const BigInt value = term(params, i, j, m);
        range_ok = range_ok && (inside ? value > 0 : value == 0);
      }
      expect(report, range_ok,
             fmt::format("m-range disagrees with nonzero terms at {} i={} j={}", tuple(params),
                         i, j));
      if (n >= 4 * r) {
        const bool predicted = a_ij_nonzero(r, s, i, j);
        expect(report, predicted == (table[i][j] > 0) && predicted == !range.empty(),
               fmt::format("nonzero class disagrees at {} i={} j={}", tuple(params), i, j));
      }
    }
  }
}

void verify_graph(const GraphParams& params, VerifyReport& report) {
  const JohnsonGraph graph(params);
  const std::uint64_t count = graph.vertex_count();
  const std::uint64_t n1 = graph.degree();
  const AdjacencyLists adj = graph.adjacency_lists();

  bool ranks_ok = true, regular = true, symmetric = true;
  for (Rank v = 0; v < count; ++v) {
    const Vertex vertex = graph.unrank(v);
    ranks_ok = ranks_ok && graph.rank(vertex) == v;
    std::set<Rank> seen;
    std::uint64_t streamed = 0;
    graph.for_each_neighbor(vertex, [&](const Vertex& w) {
      ++streamed;
      regular = regular && graph.adjacent(vertex, w);
      seen.insert(graph.rank(w));
    });
    regular = regular && streamed == n1 && seen.size() == n1;
    for (std::uint32_t w : adj[v]) {
      symmetric = symmetric && std::binary_search(adj[w].begin(), adj[w].end(),
                                                  static_cast<std::uint32_t>(v));
    }
  }
  expect(report, ranks_ok, fmt::format("rank/unrank round trip {}", tuple(params)));
  expect(report, regular, fmt::format("regularity {}", tuple(params)));
  expect(report, symmetric, fmt::format("adjacency symmetry {}", tuple(params)));

  for (Rank y_rank : {Rank{0}, count - 1}) {
    const Vertex y = graph.unrank(y_rank);
    std::set<Rank> covered;
    std::uint64_t total = 0;
    bool classes_ok = true;
    for (int j = 0; j <= params.r(); ++j) {
      const auto members = graph.partition_class(y, j);
      total += members.size();
      for (const Vertex& x : members) {
        classes_ok = classes_ok && intersection_size(x, y) == j;
        covered.insert(graph.rank(x));
      }
      if (j == params.s()) classes_ok = classes_ok && members.size() == n1;
      if (j == params.r()) classes_ok = classes_ok && members.size() == 1 && members[0] == y;
    }
    expect(report, classes_ok && total == count && covered.size() == count,
           fmt::format("partition V_j(y) {} y={}", tuple(params), y.to_string()));
  }

  const auto edges = graph.edges();
  std::vector<RankEdge> expected;
  for (Rank a = 0; a < count; ++a) {
    for (Rank b = a + 1; b < count; ++b) {
      if (graph.adjacent(graph.unrank(a), graph.unrank(b))) expected.push_back({a, b});
    }
  }
  expect(report, edges == expected && BigInt(edges.size()) == edge_count(params),
         fmt::format("edge stream {}", tuple(params)));
}

void verify_cycles(const GraphParams& params, int t, const VerifyOptions& options,
                   VerifyReport& report) {
  const std::string where = fmt::format("{} t={}", tuple(params), t);
  const BigInt n1 = degree(params);

  BigInt p_t;
  try {
    WorkBudget budget(options.budget);
    p_t = count_paths(params, t, PathEndpoints::canonical(), budget).p_t;
  } catch (const BudgetExceeded& e) {
    report.skipped.push_back(fmt::format("{}: p_t ({})", where, e.what()));
    return;
  }

  expect(report, p_t <= power(n1, t - 2), fmt::format("p_t > N1^(t-2) at {}", where));
  const BigInt a_ss = a_ij(params, params.s(), params.s());
  if (a_ss > t) {
    expect(report, p_t >= power(a_ss - t, t - 2),
           fmt::format("p_t < (A_s^s - t)^(t-2) at {}", where));
  }

  const BigInt numerator = vertex_count(params) * n1 * p_t;
  expect(report, numerator % (2 * t) == 0, fmt::format("2t does not divide N N1 p_t at {}", where));
  const BigInt c_t = numerator / (2 * t);
  expect(report, 2 * t * c_t <= vertex_count(params) * power(n1, t - 1),
         fmt::format("2t c_t > N N1^(t-1) at {}", where));
  if (2 * t * c_t > power(params.n(), params.s()) * power(n1, t)) {
    report.notes.push_back(fmt::format("{}: 2t c_t exceeds n^s N1^t", where));
  }

  try {
    WorkBudget budget(options.budget);
    const PathCount all = count_paths(params, t, PathEndpoints::all_edges(), budget);
    expect(report, all.p_t == p_t && BigInt(all.edges_checked) == edge_count(params),
           fmt::format("p_t over all edges differs from canonical at {}", where));
  } catch (const ConsistencyError& e) {
    expect(report, false, e.what());
  } catch (const BudgetExceeded& e) {
    report.skipped.push_back(fmt::format("{}: all-edges p_t ({})", where, e.what()));
  }

  if (c_t > options.budget) {
    report.skipped.push_back(
        fmt::format("{}: direct enumeration (c_t = {} exceeds the budget)", where, c_t.str()));
    return;
  }
  try {
    WorkBudget budget(options.budget);
    const CycleCensus direct = count_cycles_direct(params, t, budget);
    expect(report, direct.c_t == c_t,
           fmt::format("identity c_t = {} but enumeration found {} at {}", c_t.str(),
                       direct.c_t.str(), where));
  } catch (const BudgetExceeded& e) {
    report.skipped.push_back(fmt::format("{}: direct enumeration ({})", where, e.what()));
    return;
  }

  if (c_t > options.overlap_cap) return;
  WorkBudget budget(options.budget);
  const auto cycles = enumerate_cycles(params, t, options.overlap_cap, budget);
  const JohnsonGraph graph(params);
  bool shape_ok = BigInt(cycles.size()) == c_t;
  for (const CanonicalCycle& cycle : cycles) {
    shape_ok = shape_ok && CanonicalCycle(cycle.vertices()) == cycle;
    const auto& v = cycle.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
      shape_ok = shape_ok &&
                 graph.adjacent(graph.unrank(v[k]), graph.unrank(v[(k + 1) % v.size()]));
    }
  }
  shape_ok = shape_ok && std::set<CanonicalCycle>(cycles.begin(), cycles.end()).size() ==
                             cycles.size();
  expect(report, shape_ok, fmt::format("enumerated cycles malformed at {}", where));

  std::map<int, std::uint64_t> pairs;
  bool overlap_ok = true;
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    for (std::size_t b = 0; b < cycles.size(); ++b) {
      if (a == b) continue;
      const OverlapStats o = overlap(cycles[a], cycles[b]);
      if (o.shared_edges == 0) {
        overlap_ok = overlap_ok && o.maximal_paths == 0;
        continue;
      }
      ++pairs[o.shared_edges];
      overlap_ok = overlap_ok && o.maximal_paths >= 1 &&
                   o.maximal_paths <= o.shared_edges &&
                   o.shared_edges <= t - o.maximal_paths && o.maximal_paths <= t / 2;
    }
  }
  expect(report, overlap_ok, fmt::format("overlap inequalities at {}", where));
  OverlapProfile profile = overlap_profile(cycles);
  profile.t = t;
  expect(report, profile.pairs_by_shared_edges == pairs,
         fmt::format("overlap profile disagrees with pairwise overlaps at {}", where));

  if (cycles.empty()) return;
  const double c = static_cast<double>(cycles.size());
  const double p_small = 0.5 * std::pow(c, -1.0 / t);
  const ExactMoments small = exact_moments(profile, p_small);
  expect(report,
         small.variance >= 0 &&
             small.variance >= small.expectation * (1 - std::pow(p_small, t)) - 1e-12,
         fmt::format("variance below the diagonal term at {} p={}", where, p_small));
  const ExactMoments full = exact_moments(profile, 1.0);
  expect(report, full.expectation == c && full.variance == 0.0,
         fmt::format("moments at p=1 at {}", where));
  const ExactMoments none = exact_moments(profile, 0.0);
  expect(report, none.expectation == 0.0 && none.variance == 0.0,
         fmt::format("moments at p=0 at {}", where));
}

void verify_petersen(const VerifyOptions& options, VerifyReport& report) {
  const GraphParams petersen(5, 2, 0);
  for (const auto& [t, expected] : {std::pair{5, 12}, std::pair{6, 10}, std::pair{10, 0}}) {
    WorkBudget budget(options.budget);
    const BigInt lemma = count_cycles_lemma(petersen, t, budget).c_t;
    const BigInt direct = count_cycles_direct(petersen, t, budget).c_t;
    expect(report, lemma == expected && direct == expected,
           fmt::format("Petersen c_{}: identity {} enumeration {} expected {}", t,
                       lemma.str(), direct.str(), expected));
  }
  WorkBudget budget(options.budget);
  expect(report, count_paths(petersen, 5, PathEndpoints::all_edges(), budget).p_t == 4,
         "Petersen p_5 != 4");
}

VerifyReport run_verification(const VerifyOptions& options, std::ostream& log) {
  VerifyReport report;
  for (int a = 0; a <= 30; ++a) {
    for (int b = 0; b <= a; ++b) {
      expect(report, binom(a, b) == binom(a, a - b), fmt::format("binom symmetry a={} b={}", a, b));
      if (a > 0) {
        expect(report, binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b),
               fmt::format("Pascal rule a={} b={}", a, b));
      }
    }
  }
  if (options.petersen) verify_petersen(options, report);

  for (int n = 2; n <= options.max_n; ++n) {
    for (int r = 1; r <= options.max_r && r < n; ++r) {
      for (int s = 0; s < r; ++s) {
        if (n < 2 * r - s) continue;  // edgeless
        const GraphParams params(n, r, s);
        const std::uint64_t before = report.checks;
        const std::size_t skipped_before = report.skipped.size();
        if (options.combinatorics) {
          verify_combinatorics(params, report);
          verify_graph(params, report);
        }
        if (options.cycles) {
          for (int t = options.t_min; t <= options.t_max; ++t) {
            verify_cycles(params, t, options, report);
          }
        }
        fmt::print(log, "{}: {} checks, {} skipped, {} failures so far\n", params.to_string(),
                   report.checks - before, report.skipped.size() - skipped_before,
                   report.failures.size());
      }
    }
  }
  return report;
}

}  // namespace gjohnson

#ifndef GJOHNSON_COUNTING_HPP_
#define GJOHNSON_COUNTING_HPP_

// Exact censuses on G(n,r,s): simple paths between an adjacent pair, cycles
// of a fixed length (by the 2t-automorphism identity and by direct
// enumeration), pairwise cycle overlaps and exact moments of the surviving
// copy count under edge percolation.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gjohnson/combinatorics.hpp"
#include "gjohnson/errors.hpp"
#include "gjohnson/graph.hpp"

namespace gjohnson {

enum class CensusMethod { kLemmaIdentity, kDirectEnumeration };

const char* to_string(CensusMethod method);

struct CycleCensus {
  int t = 0;
  /// Paths between an adjacent pair; only the identity route computes it.
  std::optional<BigInt> p_t;
  BigInt c_t;
  CensusMethod method = CensusMethod::kLemmaIdentity;
};

/// Which adjacent pair(s) the path census runs on.
struct PathEndpoints {
  enum class Mode { kCanonical, kExplicit, kAllEdges };

  Mode mode = Mode::kCanonical;
  RankEdge edge;  // used by kExplicit

  static PathEndpoints canonical() { return {}; }
  static PathEndpoints explicit_edge(RankEdge e) { return {Mode::kExplicit, e}; }
  static PathEndpoints all_edges() { return {Mode::kAllEdges, {}}; }
};

struct PathCount {
  BigInt p_t;
  std::uint64_t edges_checked = 0;
};

/// p_t: simple paths on t vertices from x to y for an adjacent pair {x,y}.
/// The canonical pair is rank 0 and its lowest-rank neighbor. In kAllEdges
/// mode every edge is counted and a ConsistencyError is raised unless all
/// agree.
PathCount count_paths(const GraphParams& params, int t, PathEndpoints endpoints,
                      WorkBudget& budget);

/// c_t = N * N1 * p_t / (2t). Throws ConsistencyError if the division is
/// inexact.
CycleCensus count_cycles_lemma(const GraphParams& params, int t, WorkBudget& budget);

/// c_t by rooted DFS enumeration of canonical cycles.
CycleCensus count_cycles_direct(const GraphParams& params, int t, WorkBudget& budget);

/// Cycles whose minimum-rank vertex lies in [root_begin, root_end). Summing
/// over any partition of [0, N) gives count_cycles_direct.
BigInt count_cycles_direct_roots(const GraphParams& params, int t, Rank root_begin,
                                 Rank root_end, WorkBudget& budget);

/// A t-cycle as vertex ranks: minimum rank first, second entry below the
/// last.
class CanonicalCycle {
 public:
  /// Canonicalizes any traversal of a cycle (any rotation, either direction).
  explicit CanonicalCycle(std::vector<Rank> traversal);

  const std::vector<Rank>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()); }
  /// Edges as sorted rank pairs, in traversal order starting at vertices()[0].
  std::vector<RankEdge> edges() const;

  friend bool operator==(const CanonicalCycle&, const CanonicalCycle&) = default;
  friend auto operator<=>(const CanonicalCycle&, const CanonicalCycle&) = default;

 private:
  std::vector<Rank> vertices_;
};

/// Every t-cycle of G(n,r,s) in enumeration order (by minimum vertex, then
/// DFS order). Throws CapExceeded if more than `limit` exist.
std::vector<CanonicalCycle> enumerate_cycles(const GraphParams& params, int t,
                                             std::size_t limit, WorkBudget& budget);

struct OverlapStats {
  int shared_edges = 0;    // x
  int maximal_paths = 0;   // α: connected components of the shared edges
};

/// Overlap of two cycles of the same length. Identical cycles report
/// (t, 1).
OverlapStats overlap(const CanonicalCycle& a, const CanonicalCycle& b);

/// Ordered pairs (i, j), i != j, grouped by their shared-edge count x >= 1.
struct OverlapProfile {
  int t = 0;
  std::uint64_t cycles = 0;
  std::map<int, std::uint64_t> pairs_by_shared_edges;
};

OverlapProfile overlap_profile(const std::vector<CanonicalCycle>& cycles);

struct ExactMoments {
  int t = 0;
  double p = 0.0;
  double expectation = 0.0;
  double log_expectation = 0.0;  // -inf when the expectation is zero
  double variance = 0.0;
};

/// E X = c_t p^t and
/// Var X = c_t (p^t - p^{2t}) + sum over overlapping ordered pairs of
///         (p^{2t-x} - p^{2t}).
ExactMoments exact_moments(const OverlapProfile& profile, double p);

inline constexpr std::size_t kDefaultCycleCap = 20'000;

ExactMoments exact_moments(const GraphParams& params, int t, double p,
                           WorkBudget& budget, std::size_t cap = kDefaultCycleCap);

}  // namespace gjohnson

#endif  // GJOHNSON_COUNTING_HPP_

#ifndef GJOHNSON_SAMPLING_HPP_
#define GJOHNSON_SAMPLING_HPP_

// Edge percolation G_p(n,r,s) with per-trial reproducible randomness.
//
// Trial seeds: trial_seed(master, index) mixes the pair through SplitMix64
// and seeds a std::mt19937_64 for that trial alone. The canonical edge
// stream of the host graph is walked in order and every edge consumes exactly
// one 53-bit uniform u in [0,1); the edge is kept iff u < p. Because the draw
// sequence does not depend on p, samples at p1 < p2 with the same
// (master_seed, trial_index) are nested.

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "gjohnson/combinatorics.hpp"
#include "gjohnson/errors.hpp"
#include "gjohnson/graph.hpp"

namespace gjohnson {

inline constexpr const char* kGeneratorName = "mt19937_64";
inline constexpr const char* kSeedSplitName = "splitmix64(master_seed, trial_index)";

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the per-trial generator.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

struct SampleConfig {
  GraphParams params;
  double p = 0.0;
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

/// Canonical edge list of one host graph, built once and shared by trials.
class HostGraph {
 public:
  explicit HostGraph(const GraphParams& params);

  const GraphParams& params() const { return params_; }
  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<RankEdge>& edges() const { return edges_; }

 private:
  GraphParams params_;
  std::uint32_t vertex_count_;
  std::vector<RankEdge> edges_;
};

struct PercolationSample {
  SampleConfig config;
  AdjacencyLists adjacency;  // symmetric, ascending per vertex
  std::uint64_t retained_edges = 0;

  /// Retained edges in canonical order.
  std::vector<RankEdge> edge_list() const;
};

PercolationSample draw_sample(const HostGraph& host, const SampleConfig& config);
PercolationSample draw_sample(const SampleConfig& config);

/// True iff the sample contains a simple cycle on exactly t vertices.
/// Searches only the 2-core and stops at the first witness.
bool has_cycle_t(const PercolationSample& sample, int t, WorkBudget& budget);

/// Number of t-cycles made of retained edges.
std::uint64_t count_copies(const PercolationSample& sample, int t, WorkBudget& budget);

enum class TrialMode { kExistence, kCount };

struct TrialResult {
  std::uint64_t trial_index = 0;
  bool contains_cycle = false;
  std::optional<std::uint64_t> copy_count;  // kCount mode only
  std::uint64_t retained_edges = 0;
  bool failed = false;  // budget exhausted on this trial
};

struct TrialOptions {
  TrialMode mode = TrialMode::kExistence;
  /// Node-expansion budget for each trial's cycle search.
  std::uint64_t budget_per_trial = WorkBudget::kDefaultLimit;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Trials 0..trials-1, in index order. Results depend only on the
/// arguments, never on the thread count or scheduling.
std::vector<TrialResult> run_trials(const HostGraph& host, double p, int t,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    const TrialOptions& options = {});
std::vector<TrialResult> run_trials(const GraphParams& params, double p, int t,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    const TrialOptions& options = {});

/// Sample log: "n r s p master_seed trial_index" on the first line, then one
/// "rankA rankB" line per retained edge with rankA < rankB.
void write_sample_log(const PercolationSample& sample, std::ostream& out);

struct SampleLog {
  SampleConfig config;
  std::vector<RankEdge> edges;
};

SampleLog read_sample_log(std::istream& in);

}  // namespace gjohnson

#endif  // GJOHNSON_SAMPLING_HPP_

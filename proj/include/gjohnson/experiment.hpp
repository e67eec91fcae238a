#ifndef GJOHNSON_EXPERIMENT_HPP_
#define GJOHNSON_EXPERIMENT_HPP_

// Monte Carlo threshold sweeps and copy-count distribution checks.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gjohnson/combinatorics.hpp"
#include "gjohnson/sampling.hpp"

namespace gjohnson {

inline constexpr double kZ95 = 1.959963984540054;

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval for a binomial proportion.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z = kZ95);

/// ln of the expected copy count c_t p^t. Exact when c_t was computed,
/// otherwise the pair of bounds implied by
///   N N1 (A_s^s - t)^{t-2} / (2t) <= c_t <= N N1^{t-1} / (2t).
struct LogExpectedCopies {
  bool exact = false;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  /// "%.12g" for exact values, "lo:hi" for bounds.
  std::string to_string() const;
};

/// Exact c_t when the identity route fits in `budget`, else nullopt.
std::optional<BigInt> try_cycle_count(const GraphParams& params, int t,
                                      std::uint64_t budget);

/// Bounds on ln c_t from the path-count bounds; lo is -inf when A_s^s <= t.
std::pair<double, double> log_cycle_count_bounds(const GraphParams& params, int t);

struct SweepSpec {
  GraphParams params;
  int t = 3;
  std::vector<double> c_factors;  // p = c * n^{-s/t} / N1
  std::uint64_t trials = 1000;
  std::uint64_t master_seed = 0;
  TrialMode mode = TrialMode::kExistence;
  unsigned threads = 1;
  std::uint64_t budget = WorkBudget::kDefaultLimit;
};

struct SweepRow {
  int n = 0, r = 0, s = 0, t = 0;
  double c_factor = 0.0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double prob_hat = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 1.0;
  std::optional<double> mean_copies;
  std::optional<double> var_copies;
  LogExpectedCopies ln_expected_copies;
  bool clamped = false;
  std::uint64_t failed = 0;  // trials whose search ran out of budget
  std::uint64_t seed = 0;
};

struct SweepResult {
  Threshold threshold;
  std::optional<BigInt> c_t;
  std::vector<SweepRow> rows;  // ascending c_factor
};

SweepResult run_sweep(const SweepSpec& spec);

inline constexpr const char* kSweepCsvHeader =
    "n,r,s,t,c_factor,p,trials,successes,prob_hat,wilson_lo,wilson_hi,"
    "mean_copies,var_copies,ln_expected_copies,clamped,failed,seed";

/// Header plus one line per row, LF line endings.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct DistributionResult {
  int t = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  BigInt c_t;
  double poisson_mean = 0.0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // copy count -> trials
  std::uint64_t failed = 0;
  double tv_distance = 0.0;
};

/// Total-variation distance between the empirical law in `histogram` and
/// Poisson(mean).
double poisson_tv_distance(const std::map<std::uint64_t, std::uint64_t>& histogram,
                           double mean);

DistributionResult run_distribution(const GraphParams& params, int t, double p,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    unsigned threads = 1,
                                    std::uint64_t budget = WorkBudget::kDefaultLimit);

}  // namespace gjohnson

#endif  // GJOHNSON_EXPERIMENT_HPP_

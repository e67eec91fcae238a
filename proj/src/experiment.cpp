#include "gjohnson/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "gjohnson/counting.hpp"

namespace gjohnson {

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  if (successes > trials) throw ParameterError("successes exceed trials");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double center = (phat + z2 / (2 * n)) / (1 + z2 / n);
  const double half =
      z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  // Clamp so that lo <= phat <= hi survives rounding at the endpoints.
  return {std::min(phat, std::max(0.0, center - half)),
          std::max(phat, std::min(1.0, center + half))};
}

std::string LogExpectedCopies::to_string() const {
  if (exact) return fmt::format("{:.12g}", value);
  return fmt::format("{:.12g}:{:.12g}", lo, hi);
}

std::optional<BigInt> try_cycle_count(const GraphParams& params, int t,
                                      std::uint64_t budget) {
  WorkBudget work(budget);
  try {
    return count_cycles_lemma(params, t, work).c_t;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::pair<double, double> log_cycle_count_bounds(const GraphParams& params, int t) {
  const double ln_n = log_of(vertex_count(params));
  const double ln_n1 = log_of(degree(params));
  const double ln_2t = std::log(2.0 * t);
  const double hi = ln_n + (t - 1) * ln_n1 - ln_2t;
  const BigInt a_ss = a_ij(params, params.s(), params.s());
  double lo = -std::numeric_limits<double>::infinity();
  if (a_ss > t) lo = ln_n + ln_n1 + (t - 2) * log_of(a_ss - t) - ln_2t;
  return {lo, hi};
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.c_factors.empty()) throw ParameterError("sweep needs at least one c value");
  for (double c : spec.c_factors) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw ParameterError(fmt::format("c values must be positive, got {}", c));
    }
  }
  if (spec.trials < 1) throw ParameterError("sweep needs at least one trial");

  SweepResult result;
  result.threshold = threshold_p(spec.params, spec.t, ThresholdForm::kExactDegree);
  result.c_t = try_cycle_count(spec.params, spec.t, spec.budget);
  const auto [ln_c_lo, ln_c_hi] = log_cycle_count_bounds(spec.params, spec.t);

  std::vector<double> factors = spec.c_factors;
  std::sort(factors.begin(), factors.end());

  const HostGraph host(spec.params);
  TrialOptions options;
  options.mode = spec.mode;
  options.budget_per_trial = spec.budget;
  options.threads = spec.threads;

  for (double c : factors) {
    SweepRow row;
    row.n = spec.params.n();
    row.r = spec.params.r();
    row.s = spec.params.s();
    row.t = spec.t;
    row.c_factor = c;
    const double raw = c * result.threshold.value;
    row.clamped = raw > 1.0;
    row.p = std::min(raw, 1.0);
    row.trials = spec.trials;
    row.seed = spec.master_seed;

    const auto trials =
        run_trials(host, row.p, spec.t, spec.trials, spec.master_seed, options);
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t counted = 0;
    for (const TrialResult& trial : trials) {
      if (trial.failed) {
        ++row.failed;
        continue;
      }
      if (trial.contains_cycle) ++row.successes;
      if (trial.copy_count) {
        const double x = static_cast<double>(*trial.copy_count);
        sum += x;
        sum_sq += x * x;
        ++counted;
      }
    }
    row.prob_hat = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    const WilsonInterval ci = wilson_interval(row.successes, row.trials);
    row.wilson_lo = ci.lo;
    row.wilson_hi = ci.hi;
    if (spec.mode == TrialMode::kCount && counted > 0) {
      const double mean = sum / static_cast<double>(counted);
      row.mean_copies = mean;
      row.var_copies = counted > 1 ? (sum_sq - counted * mean * mean) / (counted - 1) : 0.0;
    }
    const double ln_pt = spec.t * std::log(row.p);
    if (result.c_t) {
      row.ln_expected_copies.exact = true;
      row.ln_expected_copies.value = log_of(*result.c_t) + ln_pt;
    } else {
      row.ln_expected_copies.lo = ln_c_lo + ln_pt;
      row.ln_expected_copies.hi = ln_c_hi + ln_pt;
    }
    result.rows.push_back(row);
  }
  return result;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  auto optional_field = [](const std::optional<double>& v) {
    return v ? fmt::format("{:.12g}", *v) : std::string();
  };
  for (const SweepRow& row : rows) {
    fmt::print(out, "{},{},{},{},{:.12g},{:.12g},{},{},{:.12g},{:.12g},{:.12g},{},{},{},{},{},{}\n",
               row.n, row.r, row.s, row.t, row.c_factor, row.p, row.trials, row.successes,
               row.prob_hat, row.wilson_lo, row.wilson_hi, optional_field(row.mean_copies),
               optional_field(row.var_copies), row.ln_expected_copies.to_string(),
               row.clamped ? 1 : 0, row.failed, row.seed);
  }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_sweep_csv(rows, out);
  return out.str();
}

double poisson_tv_distance(const std::map<std::uint64_t, std::uint64_t>& histogram,
                           double mean) {
  std::uint64_t total = 0;
  std::uint64_t max_k = 0;
  for (const auto& [k, count] : histogram) {
    total += count;
    max_k = std::max(max_k, k);
  }
  if (total == 0) throw ParameterError("empty histogram");
  auto pmf = [mean](std::uint64_t k) {
    if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
  };
  double distance = 0.0;
  double covered = 0.0;
  for (std::uint64_t k = 0; k <= max_k; ++k) {
    const auto it = histogram.find(k);
    const double empirical =
        it == histogram.end() ? 0.0 : static_cast<double>(it->second) / total;
    const double poisson = pmf(k);
    covered += poisson;
    distance += std::abs(empirical - poisson);
  }
  distance += std::max(0.0, 1.0 - covered);
  return distance / 2.0;
}

DistributionResult run_distribution(const GraphParams& params, int t, double p,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    unsigned threads, std::uint64_t budget) {
  WorkBudget work(budget);
  DistributionResult result;
  result.t = t;
  result.p = p;
  result.trials = trials;
  result.c_t = count_cycles_lemma(params, t, work).c_t;
  result.poisson_mean = result.c_t.convert_to<double>() * std::pow(p, t);

  TrialOptions options;
  options.mode = TrialMode::kCount;
  options.threads = threads;
  options.budget_per_trial = budget;
  for (const TrialResult& trial : run_trials(params, p, t, trials, master_seed, options)) {
    if (trial.failed) {
      ++result.failed;
      continue;
    }
    ++result.histogram[*trial.copy_count];
  }
  if (result.histogram.empty()) {
    throw BudgetExceeded(budget, "every trial exhausted its budget");
  }
  result.tv_distance = poisson_tv_distance(result.histogram, result.poisson_mean);
  return result;
}

}  // namespace gjohnson

#include "gjohnson/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "gjohnson/combinatorics.hpp"
#include "gjohnson/counting.hpp"
#include "gjohnson/experiment.hpp"
#include "gjohnson/graph.hpp"
#include "gjohnson/sampling.hpp"
#include "gjohnson/verification.hpp"

namespace gjohnson {

namespace {

struct ParamFlags {
  int n = 0;
  int r = 0;
  int s = 0;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "ground set size")->required();
    app->add_option("--r", r, "subset size")->required();
    app->add_option("--s", s, "intersection size of adjacent subsets")->required();
  }
  GraphParams params() const { return GraphParams(n, r, s); }
};

std::string g12(double value) { return fmt::format("{:.12g}", value); }

void print_warnings(const GraphParams& params, int t, std::ostream& out) {
  const BigInt n1 = degree(params);
  if (BigInt(t) * t >= n1) {
    fmt::print(out,
               "warning: t^2 = {} >= N1 = {}; the threshold estimate assumes t = o(sqrt(N1)) "
               "and its guarantee does not apply\n",
               t * t, n1.str());
  }
  if (params.s() > 0 && t <= std::log(static_cast<double>(params.n()))) {
    fmt::print(out, "note: s > 0 and t <= ln n = {:.4f}; sharpness of the threshold is unknown "
                    "in this regime\n",
               std::log(static_cast<double>(params.n())));
  }
}

int cmd_info(const GraphParams& params, std::optional<int> t, std::ostream& out) {
  const int r = params.r(), s = params.s();
  fmt::print(out, "graph {}\n", params.to_string());
  fmt::print(out, "N = {}\n", vertex_count(params).str());
  fmt::print(out, "N1 = {}\n", degree(params).str());
  fmt::print(out, "edges = {}\n", edge_count(params).str());
  fmt::print(out, "A_s^s = {}\n", a_ij(params, s, s).str());
  fmt::print(out, "A_i^j (row i, column j):\n");
  for (int i = 0; i <= r; ++i) {
    std::string line;
    for (int j = 0; j <= r; ++j) line += fmt::format(" {:>10}", a_ij(params, i, j).str());
    fmt::print(out, "  i={}{}\n", i, line);
  }
  if (t) {
    const Threshold exact = threshold_p(params, *t, ThresholdForm::kExactDegree);
    const Threshold fixed = threshold_p(params, *t, ThresholdForm::kFixedLength);
    fmt::print(out, "threshold n^(-s/t)/N1 = {} (ln {})\n", g12(exact.value), g12(exact.log_value));
    fmt::print(out, "threshold n^(-(r-s)-s/t) = {} (ln {})\n", g12(fixed.value),
               g12(fixed.log_value));
    print_warnings(params, *t, out);
  }
  return kExitOk;
}

// Brute force A_i^j for one y and every x in V_i(y).
std::optional<std::uint64_t> brute_force_aij(const GraphParams& params, int i, int j) {
  const JohnsonGraph graph(params);
  const Vertex y = graph.unrank(0);
  std::optional<std::uint64_t> common;
  bool agree = true;
  graph.for_each_in_class(y, i, [&](const Vertex& x) {
    std::uint64_t count = 0;
    graph.for_each_neighbor(x, [&](const Vertex& z) { count += intersection_size(z, y) == j; });
    if (common && *common != count) agree = false;
    common = count;
  });
  if (!agree) return std::nullopt;
  return common.value_or(0);
}

int cmd_aij(const GraphParams& params, std::optional<int> i, std::optional<int> j,
            bool verify, std::ostream& out) {
  if (i.has_value() != j.has_value()) throw ParameterError("give both --i and --j or neither");
  if (!i) {
    for (int a = 0; a <= params.r(); ++a) {
      for (int b = 0; b <= params.r(); ++b) {
        fmt::print(out, "A_{}^{} = {}\n", a, b, a_ij(params, a, b).str());
      }
    }
    return kExitOk;
  }
  const BigInt value = a_ij(params, *i, *j);
  if (!verify) {
    fmt::print(out, "{}\n", value.str());
    return kExitOk;
  }
  if (params.n() - 2 * params.r() + *i < 0) {
    fmt::print(out, "{} (V_{}(y) is empty; nothing to brute force)\n", value.str(), *i);
    return kExitOk;
  }
  const auto brute = brute_force_aij(params, *i, *j);
  if (brute && BigInt(*brute) == value) {
    fmt::print(out, "{} (brute force agrees)\n", value.str());
    return kExitOk;
  }
  fmt::print(out, "{} (brute force {})\n", value.str(),
             brute ? std::to_string(*brute) : std::string("depends on the choice of x"));
  return kExitVerification;
}

int cmd_count(const GraphParams& params, int t, const std::string& method,
              std::optional<double> p, std::uint64_t budget, std::ostream& out) {
  WorkBudget work(budget);
  std::optional<BigInt> lemma, direct;
  if (method == "lemma" || method == "both") lemma = count_cycles_lemma(params, t, work).c_t;
  if (method == "direct" || method == "both") direct = count_cycles_direct(params, t, work).c_t;
  int code = kExitOk;
  if (lemma && direct) {
    if (*lemma == *direct) {
      fmt::print(out, "{} (methods agree)\n", lemma->str());
    } else {
      fmt::print(out, "identity {} != enumeration {} (methods disagree)\n", lemma->str(),
                 direct->str());
      code = kExitVerification;
    }
  } else {
    fmt::print(out, "{}\n", (lemma ? *lemma : *direct).str());
  }
  if (p) {
    WorkBudget moment_work(budget);
    const ExactMoments m = exact_moments(params, t, *p, moment_work);
    fmt::print(out, "E X = {} (ln {})\n", g12(m.expectation), g12(m.log_expectation));
    fmt::print(out, "Var X = {} (ln {})\n", g12(m.variance), g12(std::log(m.variance)));
  }
  return code;
}

int cmd_paths(const GraphParams& params, int t, bool all_edges,
              const std::vector<std::uint64_t>& edge, std::uint64_t budget, std::ostream& out) {
  WorkBudget work(budget);
  if (all_edges) {
    const PathCount count = count_paths(params, t, PathEndpoints::all_edges(), work);
    fmt::print(out, "{} (uniform over {} edges)\n", count.p_t.str(), count.edges_checked);
    return kExitOk;
  }
  PathEndpoints endpoints = PathEndpoints::canonical();
  if (!edge.empty()) {
    RankEdge e{edge[0], edge[1]};
    if (e.a > e.b) std::swap(e.a, e.b);
    endpoints = PathEndpoints::explicit_edge(e);
  }
  fmt::print(out, "{}\n", count_paths(params, t, endpoints, work).p_t.str());
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, bool strict_budget, std::ostream& out) {
  const VerifyReport report = run_verification(options, out);
  for (const auto& line : report.skipped) fmt::print(out, "skipped: {}\n", line);
  for (const auto& line : report.notes) fmt::print(out, "note: {}\n", line);
  for (const auto& line : report.failures) fmt::print(out, "FAIL: {}\n", line);
  fmt::print(out, "{} checks, {} failures, {} skipped\n", report.checks, report.failures.size(),
             report.skipped.size());
  if (!report.ok()) return kExitVerification;
  if (strict_budget && !report.skipped.empty()) return kExitBudget;
  fmt::print(out, "all pass\n");
  return kExitOk;
}

int cmd_sample(const GraphParams& params, double p, std::uint64_t seed, std::uint64_t trial,
               std::optional<int> t, const std::string& log_path, std::uint64_t budget,
               std::ostream& out) {
  const PercolationSample sample = draw_sample({params, p, seed, trial});
  fmt::print(out, "sample {} p={} seed={} trial={} ({} seeded by {})\n", params.to_string(),
             g12(p), seed, trial, kGeneratorName, kSeedSplitName);
  fmt::print(out, "retained edges = {} of {}\n", sample.retained_edges, edge_count(params).str());
  if (t) {
    WorkBudget work(budget);
    const std::uint64_t copies = count_copies(sample, *t, work);
    fmt::print(out, "contains C_{} = {}\n", *t, copies > 0 ? "yes" : "no");
    fmt::print(out, "copies of C_{} = {}\n", *t, copies);
  }
  if (!log_path.empty()) {
    std::ofstream file(log_path, std::ios::binary);
    if (!file) throw ParameterError(fmt::format("cannot write {}", log_path));
    write_sample_log(sample, file);
    fmt::print(out, "sample log written to {}\n", log_path);
  }
  return kExitOk;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, std::ostream& out) {
  const SweepResult result = run_sweep(spec);
  const std::string csv = sweep_csv(result.rows);
  if (out_path.empty()) {
    out << csv;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ParameterError(fmt::format("cannot write {}", out_path));
    file << csv;
  }
  std::ostream& summary = out_path.empty() ? std::cerr : out;
  fmt::print(summary, "sweep {} t={} trials={} seed={} rng={} via {}\n",
             spec.params.to_string(), spec.t, spec.trials, spec.master_seed, kGeneratorName,
             kSeedSplitName);
  fmt::print(summary, "threshold n^(-s/t)/N1 = {}\n", g12(result.threshold.value));
  if (result.c_t) {
    fmt::print(summary, "c_t = {}\n", result.c_t->str());
  } else {
    fmt::print(summary, "c_t beyond budget; ln_expected_copies holds lo:hi bounds\n");
  }
  print_warnings(spec.params, spec.t, summary);
  for (const SweepRow& row : result.rows) {
    fmt::print(summary, "c={} p={} P(C_t) ~ {} [{}, {}]{}{}\n", g12(row.c_factor), g12(row.p),
               g12(row.prob_hat), g12(row.wilson_lo), g12(row.wilson_hi),
               row.clamped ? " (clamped)" : "",
               row.failed ? fmt::format(" ({} trials over budget)", row.failed) : "");
  }
  if (!out_path.empty()) fmt::print(summary, "csv written to {}\n", out_path);
  return kExitOk;
}

int cmd_distribution(const GraphParams& params, int t, double p, std::uint64_t trials,
                     std::uint64_t seed, unsigned threads, std::uint64_t budget,
                     std::ostream& out) {
  const DistributionResult d = run_distribution(params, t, p, trials, seed, threads, budget);
  fmt::print(out, "c_t = {}, Poisson mean c_t p^t = {}\n", d.c_t.str(), g12(d.poisson_mean));
  fmt::print(out, "copies,trials,frequency\n");
  const double used = static_cast<double>(trials - d.failed);
  for (const auto& [k, count] : d.histogram) {
    fmt::print(out, "{},{},{}\n", k, count, g12(count / used));
  }
  if (d.failed) fmt::print(out, "{} trials over budget were excluded\n", d.failed);
  fmt::print(out, "total variation distance to Poisson = {}\n", g12(d.tv_distance));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycles and edge percolation in generalized Johnson graphs G(n,r,s)",
               "gjohnson"};
  app.require_subcommand(1);
  std::uint64_t budget = WorkBudget::kDefaultLimit;
  app.add_option("--budget", budget, "node-expansion budget for exhaustive searches")
      ->capture_default_str();

  std::function<int()> action;

  ParamFlags info_flags;
  std::optional<int> info_t;
  auto* info = app.add_subcommand("info", "vertex count, degree, A_i^j and thresholds");
  info_flags.add_to(info);
  info->add_option("--t", info_t, "cycle length");
  info->callback([&] { action = [&] { return cmd_info(info_flags.params(), info_t, out); }; });

  ParamFlags aij_flags;
  std::optional<int> aij_i, aij_j;
  bool aij_verify = false;
  auto* aij = app.add_subcommand("aij", "A_i^j transition counts");
  aij_flags.add_to(aij);
  aij->add_option("--i", aij_i, "|x ∩ y|");
  aij->add_option("--j", aij_j, "class index of the neighbor");
  aij->add_flag("--verify", aij_verify, "compare with brute-force enumeration");
  aij->callback([&] {
    action = [&] { return cmd_aij(aij_flags.params(), aij_i, aij_j, aij_verify, out); };
  });

  ParamFlags count_flags;
  int count_t = 0;
  std::string count_method = "lemma";
  std::optional<double> count_p;
  auto* count = app.add_subcommand("count", "number c_t of t-cycles");
  count_flags.add_to(count);
  count->add_option("--t", count_t, "cycle length")->required();
  count->add_option("--method", count_method, "lemma, direct or both")
      ->check(CLI::IsMember({"lemma", "direct", "both"}))
      ->capture_default_str();
  count->add_option("--p", count_p, "also print exact moments of the copy count at this p");
  count->callback([&] {
    action = [&] {
      return cmd_count(count_flags.params(), count_t, count_method, count_p, budget, out);
    };
  });

  ParamFlags paths_flags;
  int paths_t = 0;
  bool paths_all = false;
  std::vector<std::uint64_t> paths_edge;
  auto* paths = app.add_subcommand("paths", "number p_t of t-vertex paths across an edge");
  paths_flags.add_to(paths);
  paths->add_option("--t", paths_t, "path length in vertices")->required();
  paths->add_flag("--all-edges", paths_all, "count across every edge and check they agree");
  paths->add_option("--edge", paths_edge, "explicit edge as two vertex ranks")->expected(2);
  paths->callback([&] {
    action = [&] {
      return cmd_paths(paths_flags.params(), paths_t, paths_all, paths_edge, budget, out);
    };
  });

  VerifyOptions verify_options;
  bool strict_budget = false;
  auto* verify = app.add_subcommand("verify", "brute-force oracle suite over a parameter grid");
  verify->add_option("--max-n", verify_options.max_n)->capture_default_str();
  verify->add_option("--max-r", verify_options.max_r)->capture_default_str();
  verify->add_option("--t-min", verify_options.t_min)->capture_default_str();
  verify->add_option("--t-max", verify_options.t_max)->capture_default_str();
  verify->add_flag("--strict-budget", strict_budget,
                   "exit with code 2 when any instance was skipped for budget");
  verify->callback([&] {
    action = [&] {
      verify_options.budget = budget;
      return cmd_verify(verify_options, strict_budget, out);
    };
  });

  ParamFlags sample_flags;
  double sample_p = 0.0;
  std::uint64_t sample_seed = 0, sample_trial = 0;
  std::optional<int> sample_t;
  std::string sample_log;
  auto* sample = app.add_subcommand("sample", "draw one percolation sample");
  sample_flags.add_to(sample);
  sample->add_option("--p", sample_p, "edge retention probability")->required();
  sample->add_option("--seed", sample_seed)->capture_default_str();
  sample->add_option("--trial", sample_trial)->capture_default_str();
  sample->add_option("--t", sample_t, "also count t-cycles in the sample");
  sample->add_option("--log", sample_log, "write retained edges to this file");
  sample->callback([&] {
    action = [&] {
      return cmd_sample(sample_flags.params(), sample_p, sample_seed, sample_trial, sample_t,
                        sample_log, budget, out);
    };
  });

  ParamFlags sweep_flags;
  int sweep_t = 0;
  std::vector<double> sweep_c;
  std::uint64_t sweep_trials = 1000, sweep_seed = 0;
  std::string sweep_out;
  bool sweep_count = false;
  unsigned sweep_threads = 1;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over multiples of the threshold");
  sweep_flags.add_to(sweep);
  sweep->add_option("--t", sweep_t, "cycle length")->required();
  sweep->add_option("--c-values", sweep_c, "comma-separated multiples c of the threshold")
      ->delimiter(',')
      ->required();
  sweep->add_option("--trials", sweep_trials)->capture_default_str();
  sweep->add_option("--seed", sweep_seed)->capture_default_str();
  sweep->add_option("--out", sweep_out, "CSV path (stdout when omitted)");
  sweep->add_flag("--count", sweep_count, "count copies in every trial");
  sweep->add_option("--threads", sweep_threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  sweep->callback([&] {
    action = [&] {
      SweepSpec spec{.params = sweep_flags.params(),
                     .t = sweep_t,
                     .c_factors = sweep_c,
                     .trials = sweep_trials,
                     .master_seed = sweep_seed,
                     .mode = sweep_count ? TrialMode::kCount : TrialMode::kExistence,
                     .threads = sweep_threads,
                     .budget = budget};
      return cmd_sweep(spec, sweep_out, out);
    };
  });

  ParamFlags dist_flags;
  int dist_t = 0;
  double dist_p = 0.0;
  std::uint64_t dist_trials = 10000, dist_seed = 0;
  unsigned dist_threads = 1;
  auto* dist = app.add_subcommand("distribution", "copy-count histogram vs Poisson(c_t p^t)");
  dist_flags.add_to(dist);
  dist->add_option("--t", dist_t, "cycle length")->required();
  dist->add_option("--p", dist_p, "edge retention probability")->required();
  dist->add_option("--trials", dist_trials)->capture_default_str();
  dist->add_option("--seed", dist_seed)->capture_default_str();
  dist->add_option("--threads", dist_threads)->capture_default_str();
  dist->callback([&] {
    action = [&] {
      return cmd_distribution(dist_flags.params(), dist_t, dist_p, dist_trials, dist_seed,
                              dist_threads, budget, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const ParameterError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitBudget;
  } catch (const CapExceeded& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    fmt::print(err, "verification failure: {}\n", e.what());
    return kExitVerification;
  }
}

}  // namespace gjohnson

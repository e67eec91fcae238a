#include "gjohnson/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <string>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cycle_search.hpp"

namespace gjohnson {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(~trial_index));
}

HostGraph::HostGraph(const GraphParams& params) : params_(params) {
  const JohnsonGraph graph(params);
  if (graph.vertex_count() > std::numeric_limits<std::uint32_t>::max()) {
    throw ParameterError(fmt::format("{} is too large to percolate", params.to_string()));
  }
  vertex_count_ = static_cast<std::uint32_t>(graph.vertex_count());
  edges_ = graph.edges();
}

std::vector<RankEdge> PercolationSample::edge_list() const {
  std::vector<RankEdge> out;
  out.reserve(retained_edges);
  for (std::uint32_t a = 0; a < adjacency.size(); ++a) {
    for (std::uint32_t b : adjacency[a]) {
      if (b > a) out.push_back({a, b});
    }
  }
  return out;
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(fmt::format("probability must lie in [0,1], got {}", p));
  }
}

}  // namespace

PercolationSample draw_sample(const HostGraph& host, const SampleConfig& config) {
  if (!(config.params == host.params())) {
    throw ParameterError("sample config and host graph disagree on (n, r, s)");
  }
  check_probability(config.p);
  PercolationSample sample{config, AdjacencyLists(host.vertex_count()), 0};
  std::mt19937_64 gen(trial_seed(config.master_seed, config.trial_index));
  for (const RankEdge& e : host.edges()) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u < config.p) {
      sample.adjacency[e.a].push_back(static_cast<std::uint32_t>(e.b));
      sample.adjacency[e.b].push_back(static_cast<std::uint32_t>(e.a));
      ++sample.retained_edges;
    }
  }
  return sample;
}

PercolationSample draw_sample(const SampleConfig& config) {
  return draw_sample(HostGraph(config.params), config);
}

bool has_cycle_t(const PercolationSample& sample, int t, WorkBudget& budget) {
  if (t < 3) throw ParameterError(fmt::format("cycle length t must be >= 3, got {}", t));
  if (sample.retained_edges < static_cast<std::uint64_t>(t)) return false;
  const AdjacencyLists core = detail::prune_to_two_core(sample.adjacency);
  detail::CycleSearchOptions options;
  options.stop_at_first = true;
  return detail::search_cycles(core, t, budget, options) > 0;
}

std::uint64_t count_copies(const PercolationSample& sample, int t, WorkBudget& budget) {
  if (t < 3) throw ParameterError(fmt::format("cycle length t must be >= 3, got {}", t));
  if (sample.retained_edges < static_cast<std::uint64_t>(t)) return 0;
  const AdjacencyLists core = detail::prune_to_two_core(sample.adjacency);
  return detail::search_cycles(core, t, budget);
}

namespace {

TrialResult run_one(const HostGraph& host, double p, int t, std::uint64_t master_seed,
                    std::uint64_t index, const TrialOptions& options) {
  const PercolationSample sample =
      draw_sample(host, {host.params(), p, master_seed, index});
  TrialResult result;
  result.trial_index = index;
  result.retained_edges = sample.retained_edges;
  WorkBudget budget(options.budget_per_trial);
  try {
    if (options.mode == TrialMode::kCount) {
      result.copy_count = count_copies(sample, t, budget);
      result.contains_cycle = *result.copy_count > 0;
    } else {
      result.contains_cycle = has_cycle_t(sample, t, budget);
    }
  } catch (const BudgetExceeded&) {
    result.failed = true;
    result.contains_cycle = false;
    result.copy_count.reset();
  }
  return result;
}

}  // namespace

std::vector<TrialResult> run_trials(const HostGraph& host, double p, int t,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    const TrialOptions& options) {
  if (trials < 1) throw ParameterError("need at least one trial");
  if (t < 3) throw ParameterError(fmt::format("cycle length t must be >= 3, got {}", t));
  check_probability(p);

  std::vector<TrialResult> results(trials);
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(trials, 1024))));
  if (threads == 1) {
    for (std::uint64_t i = 0; i < trials; ++i) {
      results[i] = run_one(host, p, t, master_seed, i, options);
    }
    return results;
  }

  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= trials || failed.load()) return;
        const std::uint64_t end = std::min(trials, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          results[i] = run_one(host, p, t, master_seed, i, options);
        }
      }
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<TrialResult> run_trials(const GraphParams& params, double p, int t,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    const TrialOptions& options) {
  return run_trials(HostGraph(params), p, t, trials, master_seed, options);
}

void write_sample_log(const PercolationSample& sample, std::ostream& out) {
  const SampleConfig& c = sample.config;
  fmt::print(out, "{} {} {} {} {} {}\n", c.params.n(), c.params.r(), c.params.s(), c.p,
             c.master_seed, c.trial_index);
  for (const RankEdge& e : sample.edge_list()) fmt::print(out, "{} {}\n", e.a, e.b);
}

SampleLog read_sample_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("sample log is empty");
  std::istringstream header(line);
  int n = 0, r = 0, s = 0;
  double p = 0.0;
  std::uint64_t seed = 0, index = 0;
  if (!(header >> n >> r >> s >> p >> seed >> index)) {
    throw ParameterError(fmt::format("malformed sample log header: '{}'", line));
  }
  SampleLog log{{GraphParams(n, r, s), p, seed, index}, {}};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    RankEdge e;
    if (!(row >> e.a >> e.b) || e.a >= e.b) {
      throw ParameterError(fmt::format("malformed sample log edge: '{}'", line));
    }
    log.edges.push_back(e);
  }
  return log;
}

}  // namespace gjohnson

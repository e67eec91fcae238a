#include "gjohnson/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "cycle_search.hpp"

namespace gjohnson {

namespace {

std::uint64_t edge_key(Rank a, Rank b) {
  if (a > b) std::swap(a, b);
  return (a << 32) | b;
}

void check_cycle_length(int t) {
  if (t < 3) throw ParameterError(fmt::format("cycle length t must be >= 3, got {}", t));
}

}  // namespace

const char* to_string(CensusMethod method) {
  switch (method) {
    case CensusMethod::kLemmaIdentity:
      return "lemma-identity";
    case CensusMethod::kDirectEnumeration:
      return "direct-enumeration";
  }
  return "?";
}

PathCount count_paths(const GraphParams& params, int t, PathEndpoints endpoints,
                      WorkBudget& budget) {
  if (t < 2) throw ParameterError(fmt::format("path length t must be >= 2, got {}", t));
  const JohnsonGraph graph(params);
  const AdjacencyLists adj = graph.adjacency_lists();

  switch (endpoints.mode) {
    case PathEndpoints::Mode::kCanonical: {
      const std::uint32_t x = 0;
      const std::uint32_t y = adj[0].front();
      return {detail::count_paths_between(adj, x, y, t, budget), 1};
    }
    case PathEndpoints::Mode::kExplicit: {
      const auto [a, b] = endpoints.edge;
      if (a >= adj.size() || b >= adj.size() ||
          !std::binary_search(adj[a].begin(), adj[a].end(), b)) {
        throw ParameterError(fmt::format("({}, {}) is not an edge of {}", a, b,
                                         params.to_string()));
      }
      return {detail::count_paths_between(adj, a, b, t, budget), 1};
    }
    case PathEndpoints::Mode::kAllEdges: {
      std::optional<std::uint64_t> common;
      std::uint64_t checked = 0;
      for (std::uint32_t a = 0; a < adj.size(); ++a) {
        for (std::uint32_t b : adj[a]) {
          if (b < a) continue;
          std::uint64_t value = 0;
          try {
            value = detail::count_paths_between(adj, a, b, t, budget);
          } catch (const BudgetExceeded& e) {
            throw BudgetExceeded(
                e.nodes_expanded(),
                fmt::format("{} edges agreed on p_{} = {} before the budget ran out",
                            checked, t, common.value_or(0)));
          }
          if (common && *common != value) {
            throw ConsistencyError(fmt::format(
                "p_{} differs across edges of {}: {} on edge ({},{}) vs {} before",
                t, params.to_string(), value, a, b, *common));
          }
          common = value;
          ++checked;
        }
      }
      return {common.value_or(0), checked};
    }
  }
  throw ParameterError("unknown endpoint mode");
}

CycleCensus count_cycles_lemma(const GraphParams& params, int t, WorkBudget& budget) {
  check_cycle_length(t);
  const BigInt p_t = count_paths(params, t, PathEndpoints::canonical(), budget).p_t;
  const BigInt numerator = vertex_count(params) * degree(params) * p_t;
  const BigInt two_t = 2 * t;
  if (numerator % two_t != 0) {
    throw ConsistencyError(fmt::format(
        "N * N1 * p_t = {} is not divisible by 2t = {} on {}", numerator.str(),
        two_t.str(), params.to_string()));
  }
  return {t, p_t, numerator / two_t, CensusMethod::kLemmaIdentity};
}

BigInt count_cycles_direct_roots(const GraphParams& params, int t, Rank root_begin,
                                 Rank root_end, WorkBudget& budget) {
  check_cycle_length(t);
  const JohnsonGraph graph(params);
  const AdjacencyLists adj = graph.adjacency_lists();
  detail::CycleSearchOptions options;
  options.root_begin = static_cast<std::uint32_t>(std::min<Rank>(root_begin, adj.size()));
  options.root_end = static_cast<std::uint32_t>(std::min<Rank>(root_end, adj.size()));
  return detail::search_cycles(adj, t, budget, options);
}

CycleCensus count_cycles_direct(const GraphParams& params, int t, WorkBudget& budget) {
  const auto n_vertices = vertex_count(params).convert_to<std::uint64_t>();
  return {t, std::nullopt, count_cycles_direct_roots(params, t, 0, n_vertices, budget),
          CensusMethod::kDirectEnumeration};
}

CanonicalCycle::CanonicalCycle(std::vector<Rank> traversal) {
  const std::size_t t = traversal.size();
  if (t < 3) throw ParameterError("a cycle needs at least 3 vertices");
  const auto start = std::min_element(traversal.begin(), traversal.end()) - traversal.begin();
  const Rank next = traversal[(start + 1) % t];
  const Rank prev = traversal[(start + t - 1) % t];
  vertices_.reserve(t);
  for (std::size_t k = 0; k < t; ++k) {
    const std::size_t at = next < prev ? (start + k) % t : (start + t - k) % t;
    vertices_.push_back(traversal[at]);
  }
}

std::vector<RankEdge> CanonicalCycle::edges() const {
  std::vector<RankEdge> out;
  out.reserve(vertices_.size());
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    Rank a = vertices_[k];
    Rank b = vertices_[(k + 1) % vertices_.size()];
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  }
  return out;
}

std::vector<CanonicalCycle> enumerate_cycles(const GraphParams& params, int t,
                                             std::size_t limit, WorkBudget& budget) {
  check_cycle_length(t);
  const JohnsonGraph graph(params);
  const AdjacencyLists adj = graph.adjacency_lists();
  std::vector<CanonicalCycle> cycles;
  const detail::CycleSink sink = [&](std::span<const std::uint32_t> path) {
    if (cycles.size() == limit) {
      throw CapExceeded(fmt::format("{} has more than {} cycles of length {}",
                                    params.to_string(), limit, t));
    }
    cycles.emplace_back(std::vector<Rank>(path.begin(), path.end()));
  };
  detail::CycleSearchOptions options;
  options.sink = &sink;
  detail::search_cycles(adj, t, budget, options);
  return cycles;
}

OverlapStats overlap(const CanonicalCycle& a, const CanonicalCycle& b) {
  if (a.length() != b.length()) {
    throw ParameterError("overlap needs two cycles of the same length");
  }
  std::unordered_set<std::uint64_t> theirs;
  for (const RankEdge& e : b.edges()) theirs.insert(edge_key(e.a, e.b));
  const auto ours = a.edges();
  std::vector<char> shared(ours.size());
  OverlapStats stats;
  for (std::size_t k = 0; k < ours.size(); ++k) {
    shared[k] = theirs.contains(edge_key(ours[k].a, ours[k].b));
    stats.shared_edges += shared[k];
  }
  if (stats.shared_edges == a.length()) {
    stats.maximal_paths = 1;
    return stats;
  }
  for (std::size_t k = 0; k < ours.size(); ++k) {
    const std::size_t before = (k + ours.size() - 1) % ours.size();
    if (shared[k] && !shared[before]) ++stats.maximal_paths;
  }
  return stats;
}

OverlapProfile overlap_profile(const std::vector<CanonicalCycle>& cycles) {
  OverlapProfile profile;
  profile.cycles = cycles.size();
  if (cycles.empty()) return profile;
  profile.t = cycles.front().length();

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> containing;
  for (std::uint32_t i = 0; i < cycles.size(); ++i) {
    for (const RankEdge& e : cycles[i].edges()) containing[edge_key(e.a, e.b)].push_back(i);
  }
  std::vector<int> shared(cycles.size(), 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t i = 0; i < cycles.size(); ++i) {
    touched.clear();
    for (const RankEdge& e : cycles[i].edges()) {
      for (std::uint32_t j : containing[edge_key(e.a, e.b)]) {
        if (j == i) continue;
        if (shared[j]++ == 0) touched.push_back(j);
      }
    }
    for (std::uint32_t j : touched) {
      ++profile.pairs_by_shared_edges[shared[j]];
      shared[j] = 0;
    }
  }
  return profile;
}

ExactMoments exact_moments(const OverlapProfile& profile, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(fmt::format("probability must lie in [0,1], got {}", p));
  }
  const int t = profile.t;
  const double c = static_cast<double>(profile.cycles);
  ExactMoments m;
  m.t = t;
  m.p = p;
  if (profile.cycles == 0) {
    m.log_expectation = -std::numeric_limits<double>::infinity();
    return m;
  }
  const double p_t = std::pow(p, t);
  const double p_2t = p_t * p_t;
  m.expectation = c * p_t;
  m.log_expectation = std::log(c) + t * std::log(p);
  double variance = c * (p_t - p_2t);
  for (const auto& [x, pairs] : profile.pairs_by_shared_edges) {
    variance += static_cast<double>(pairs) * std::pow(p, 2 * t - x) * (1.0 - std::pow(p, x));
  }
  m.variance = std::max(variance, 0.0);
  return m;
}

ExactMoments exact_moments(const GraphParams& params, int t, double p,
                           WorkBudget& budget, std::size_t cap) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(fmt::format("probability must lie in [0,1], got {}", p));
  }
  OverlapProfile profile = overlap_profile(enumerate_cycles(params, t, cap, budget));
  profile.t = t;
  return exact_moments(profile, p);
}

}  // namespace gjohnson

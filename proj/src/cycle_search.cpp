#include "cycle_search.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <fmt/format.h>

namespace gjohnson::detail {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// BFS distances from `source` over vertices >= `floor`. Vertices first
// reached are appended to `touched` so the caller can reset them cheaply.
void distances_from(const AdjacencyLists& adj, std::uint32_t source,
                    std::uint32_t floor, int horizon, std::vector<int>& dist,
                    std::vector<std::uint32_t>& touched) {
  touched.clear();
  dist[source] = 0;
  touched.push_back(source);
  for (std::size_t head = 0; head < touched.size(); ++head) {
    const std::uint32_t u = touched[head];
    if (dist[u] >= horizon) continue;
    for (std::uint32_t w : adj[u]) {
      if (w < floor || dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      touched.push_back(w);
    }
  }
}

class PathCounter {
 public:
  PathCounter(const AdjacencyLists& adj, std::uint32_t y, int t, WorkBudget& budget)
      : adj_(adj), t_(t), budget_(budget), visited_(adj.size(), 0),
        dist_(adj.size(), kUnreached) {
    std::vector<std::uint32_t> touched;
    distances_from(adj_, y, 0, t_, dist_, touched);
    visited_[y] = 1;
  }

  std::uint64_t run(std::uint32_t x) {
    visited_[x] = 1;
    extend(x, 1);
    return count_;
  }

 private:
  // `depth` vertices of the path are fixed, the last being `last`.
  void extend(std::uint32_t last, int depth) {
    if (depth == t_ - 2) {
      // The next vertex must be a neighbor of y.
      for (std::uint32_t w : adj_[last]) {
        if (!visited_[w] && dist_[w] == 1) ++count_;
      }
      return;
    }
    const int remaining = t_ - depth - 1;  // edges still needed after w
    for (std::uint32_t w : adj_[last]) {
      if (visited_[w] || dist_[w] > remaining) continue;
      budget_.charge();
      visited_[w] = 1;
      extend(w, depth + 1);
      visited_[w] = 0;
    }
  }

  const AdjacencyLists& adj_;
  int t_;
  WorkBudget& budget_;
  std::vector<char> visited_;
  std::vector<int> dist_;
  std::uint64_t count_ = 0;
};

class CycleSearch {
 public:
  CycleSearch(const AdjacencyLists& adj, int t, WorkBudget& budget,
              const CycleSearchOptions& options)
      : adj_(adj), t_(t), budget_(budget), options_(options),
        visited_(adj.size(), 0), dist_(adj.size(), kUnreached), path_(t) {}

  std::uint64_t run() {
    const auto end = std::min<std::uint64_t>(options_.root_end, adj_.size());
    std::vector<std::uint32_t> touched;
    for (std::uint32_t root = options_.root_begin; root < end && !done_; ++root) {
      if (adj_[root].size() < 2) continue;
      distances_from(adj_, root, root, t_, dist_, touched);
      budget_.charge();
      root_ = root;
      path_[0] = root;
      visited_[root] = 1;
      extend(1);
      visited_[root] = 0;
      for (std::uint32_t v : touched) dist_[v] = kUnreached;
      ++roots_done_;
    }
    return count_;
  }

  std::uint64_t roots_done() const { return roots_done_; }
  std::uint64_t count() const { return count_; }

 private:
  // path_[0..depth) is fixed.
  void extend(int depth) {
    const std::uint32_t last = path_[depth - 1];
    const auto& nbrs = adj_[last];
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), root_);
    if (depth == t_ - 1) {
      // Closing vertex: adjacent to the root and above path_[1].
      for (; it != nbrs.end(); ++it) {
        const std::uint32_t w = *it;
        if (visited_[w] || dist_[w] != 1 || w < path_[1]) continue;
        ++count_;
        if (options_.sink != nullptr) {
          path_[depth] = w;
          (*options_.sink)(path_);
        }
        if (options_.stop_at_first) {
          done_ = true;
          return;
        }
      }
      return;
    }
    const int remaining = t_ - depth;  // edges from w back to the root
    for (; it != nbrs.end() && !done_; ++it) {
      const std::uint32_t w = *it;
      if (visited_[w] || dist_[w] > remaining) continue;
      budget_.charge();
      visited_[w] = 1;
      path_[depth] = w;
      extend(depth + 1);
      visited_[w] = 0;
    }
  }

  const AdjacencyLists& adj_;
  int t_;
  WorkBudget& budget_;
  const CycleSearchOptions& options_;
  std::vector<char> visited_;
  std::vector<int> dist_;
  std::vector<std::uint32_t> path_;
  std::uint32_t root_ = 0;
  std::uint64_t count_ = 0;
  std::uint64_t roots_done_ = 0;
  bool done_ = false;
};

}  // namespace

std::uint64_t count_paths_between(const AdjacencyLists& adj, std::uint32_t x,
                                  std::uint32_t y, int t, WorkBudget& budget) {
  if (t < 2) throw ParameterError(fmt::format("path length t must be >= 2, got {}", t));
  if (x == y) throw ParameterError("path endpoints must differ");
  if (t == 2) {
    return std::binary_search(adj[x].begin(), adj[x].end(), y) ? 1 : 0;
  }
  PathCounter counter(adj, y, t, budget);
  try {
    return counter.run(x);
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(e.nodes_expanded(),
                         fmt::format("path DFS from {} to {} incomplete", x, y));
  }
}

std::uint64_t search_cycles(const AdjacencyLists& adj, int t, WorkBudget& budget,
                            const CycleSearchOptions& options) {
  if (t < 3) throw ParameterError(fmt::format("cycle length t must be >= 3, got {}", t));
  CycleSearch search(adj, t, budget, options);
  try {
    return search.run();
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(
        e.nodes_expanded(),
        fmt::format("{} of {} roots completed, {} cycles found so far",
                    search.roots_done(), adj.size(), search.count()));
  }
}

AdjacencyLists prune_to_two_core(const AdjacencyLists& adj) {
  std::vector<std::size_t> deg(adj.size());
  std::vector<char> removed(adj.size(), 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    deg[v] = adj[v].size();
    if (deg[v] < 2) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t w : adj[queue[head]]) {
      if (removed[w]) continue;
      if (--deg[w] < 2) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  AdjacencyLists core(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v) {
    if (removed[v]) continue;
    for (std::uint32_t w : adj[v]) {
      if (!removed[w]) core[v].push_back(w);
    }
  }
  return core;
}

}  // namespace gjohnson::detail

#ifndef GJOHNSON_SRC_CYCLE_SEARCH_HPP_
#define GJOHNSON_SRC_CYCLE_SEARCH_HPP_

// Depth-first path and cycle search over adjacency lists. Shared by the
// host-graph censuses and by the percolation-sample detectors.

#include <cstdint>
#include <functional>
#include <span>

#include "gjohnson/errors.hpp"
#include "gjohnson/graph.hpp"

namespace gjohnson::detail {

/// Simple paths on `t` vertices from x to y (x != y). For t == 2 this is 1
/// iff x and y are adjacent.
std::uint64_t count_paths_between(const AdjacencyLists& adj, std::uint32_t x,
                                  std::uint32_t y, int t, WorkBudget& budget);

/// Receives each cycle in canonical form: minimum vertex first, second
/// vertex smaller than the last.
using CycleSink = std::function<void(std::span<const std::uint32_t>)>;

struct CycleSearchOptions {
  std::uint32_t root_begin = 0;
  std::uint32_t root_end = UINT32_MAX;  // clamped to the vertex count
  bool stop_at_first = false;
  const CycleSink* sink = nullptr;
};

/// Counts t-cycles (t >= 3) whose minimum vertex lies in
/// [root_begin, root_end). Each cycle is found exactly once: the DFS from
/// root v only visits vertices above v and closes a cycle only when the
/// second vertex is below the last.
std::uint64_t search_cycles(const AdjacencyLists& adj, int t, WorkBudget& budget,
                            const CycleSearchOptions& options = {});

/// Copy of `adj` with every vertex outside the 2-core stripped of edges.
AdjacencyLists prune_to_two_core(const AdjacencyLists& adj);

}  // namespace gjohnson::detail

#endif  // GJOHNSON_SRC_CYCLE_SEARCH_HPP_

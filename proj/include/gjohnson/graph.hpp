#ifndef GJOHNSON_GRAPH_HPP_
#define GJOHNSON_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gjohnson/combinatorics.hpp"

namespace gjohnson {

/// Colexicographic rank of a vertex, in [0, N).
using Rank = std::uint64_t;

/// Per-vertex ascending neighbor ranks. Used for the host graph and for
/// percolation samples alike.
using AdjacencyLists = std::vector<std::vector<std::uint32_t>>;

/// An r-subset of {1..n}, stored as strictly increasing 1-based elements.
/// When n <= 64 a packed bitmask (bit e-1 for element e) is kept alongside
/// and used for intersections.
class Vertex {
 public:
  /// Throws ParameterError unless `elements` is strictly increasing and
  /// inside [1, n].
  Vertex(int n, std::vector<int> elements);

  int n() const { return n_; }
  int r() const { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const { return elements_; }
  const std::optional<std::uint64_t>& mask() const { return mask_; }

  /// "{1,3,7}".
  std::string to_string() const;

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.n_ == b.n_ && a.elements_ == b.elements_;
  }

 private:
  int n_;
  std::vector<int> elements_;
  std::optional<std::uint64_t> mask_;
};

/// |x ∩ y|. Throws ParameterError if x and y come from different (n, r).
int intersection_size(const Vertex& x, const Vertex& y);

/// Edge as a pair of ranks with a < b.
struct RankEdge {
  Rank a = 0;
  Rank b = 0;

  friend bool operator==(const RankEdge&, const RankEdge&) = default;
  friend auto operator<=>(const RankEdge&, const RankEdge&) = default;
};

/// On-demand view of G(n,r,s). Nothing is materialized beyond a small
/// binomial table used for ranking.
class JohnsonGraph {
 public:
  explicit JohnsonGraph(GraphParams params);

  const GraphParams& params() const { return params_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  std::uint64_t degree() const { return degree_; }

  Rank rank(const Vertex& v) const;
  Vertex unrank(Rank rank) const;
  /// Builds a vertex from 1-based elements (any order), validated against n and r.
  Vertex vertex(std::vector<int> elements) const;

  bool adjacent(const Vertex& x, const Vertex& y) const;

  /// Visits the N1 neighbors of x: every choice of s elements of x (lex
  /// order) combined with every choice of r-s elements outside x (lex
  /// order).
  void for_each_neighbor(const Vertex& x,
                         const std::function<void(const Vertex&)>& visit) const;
  std::vector<Vertex> neighbors(const Vertex& x) const;
  /// Neighbor ranks of the vertex with rank `v`, ascending.
  std::vector<Rank> neighbor_ranks(Rank v) const;

  /// Visits V_j(y) = {x : |x ∩ y| = j}. Throws ParameterError for j outside [0, r].
  void for_each_in_class(const Vertex& y, int j,
                         const std::function<void(const Vertex&)>& visit) const;
  std::vector<Vertex> partition_class(const Vertex& y, int j) const;

  /// Every edge once, ordered by (rank a, rank b).
  void for_each_edge(const std::function<void(const RankEdge&)>& visit) const;
  std::vector<RankEdge> edges() const;

  /// Adjacency lists of ranks (ascending) for every vertex. This is the
  /// working form for exhaustive searches; it never holds a matrix.
  AdjacencyLists adjacency_lists() const;

 private:
  void for_each_mixed(const Vertex& y, int inside,
                      const std::function<void(const Vertex&)>& visit) const;

  GraphParams params_;
  std::uint64_t vertex_count_;
  std::uint64_t degree_;
  // binom_[a][b] = C(a, b) for 0 <= a <= n, 0 <= b <= r.
  std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace gjohnson

#endif  // GJOHNSON_GRAPH_HPP_

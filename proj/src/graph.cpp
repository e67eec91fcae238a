#include "gjohnson/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gjohnson/errors.hpp"

namespace gjohnson {

namespace {

constexpr int kMaskBits = 64;

// Advances `idx` (strictly increasing indices into a pool of `pool_size`) to
// the next combination in lexicographic order. Returns false after the last.
bool next_combination(std::vector<int>& idx, int pool_size) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == pool_size - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::vector<int> first_combination(int k) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

Vertex::Vertex(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const int e = elements_[k];
    if (e < 1 || e > n_ || (k > 0 && elements_[k - 1] >= e)) {
      throw ParameterError(fmt::format(
          "vertex elements must be strictly increasing in [1,{}], got {{{}}}", n_,
          fmt::join(elements_, ",")));
    }
  }
  if (n_ <= kMaskBits) {
    std::uint64_t mask = 0;
    for (int e : elements_) mask |= std::uint64_t{1} << (e - 1);
    mask_ = mask;
  }
}

std::string Vertex::to_string() const {
  return fmt::format("{{{}}}", fmt::join(elements_, ","));
}

int intersection_size(const Vertex& x, const Vertex& y) {
  if (x.n() != y.n() || x.r() != y.r()) {
    throw ParameterError(fmt::format("vertices {} and {} belong to different graphs",
                                     x.to_string(), y.to_string()));
  }
  if (x.mask() && y.mask()) return std::popcount(*x.mask() & *y.mask());
  const auto a = x.elements();
  const auto b = y.elements();
  int common = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return common;
}

JohnsonGraph::JohnsonGraph(GraphParams params) : params_(params) {
  const BigInt n_vertices = gjohnson::vertex_count(params_);
  const BigInt n_degree = gjohnson::degree(params_);
  if (n_vertices > std::numeric_limits<std::int64_t>::max()) {
    throw ParameterError(fmt::format("{} has too many vertices to rank ({})",
                                     params_.to_string(), n_vertices.str()));
  }
  vertex_count_ = n_vertices.convert_to<std::uint64_t>();
  degree_ = n_degree.convert_to<std::uint64_t>();
  const int n = params_.n(), r = params_.r();
  binom_.assign(n + 1, std::vector<std::uint64_t>(r + 1, 0));
  for (int a = 0; a <= n; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= std::min(a, r); ++b) {
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
  }
}

Vertex JohnsonGraph::vertex(std::vector<int> elements) const {
  std::sort(elements.begin(), elements.end());
  if (static_cast<int>(elements.size()) != params_.r()) {
    throw ParameterError(fmt::format("a vertex of {} has {} elements, got {}",
                                     params_.to_string(), params_.r(),
                                     elements.size()));
  }
  return Vertex(params_.n(), std::move(elements));
}

Rank JohnsonGraph::rank(const Vertex& v) const {
  if (v.n() != params_.n() || v.r() != params_.r()) {
    throw ParameterError(fmt::format("vertex {} does not belong to {}",
                                     v.to_string(), params_.to_string()));
  }
  Rank rank = 0;
  const auto e = v.elements();
  for (std::size_t k = 0; k < e.size(); ++k) rank += binom_[e[k] - 1][k + 1];
  return rank;
}

Vertex JohnsonGraph::unrank(Rank rank) const {
  if (rank >= vertex_count_) {
    throw ParameterError(fmt::format("rank {} out of range [0,{})", rank, vertex_count_));
  }
  const int r = params_.r();
  std::vector<int> elements(r);
  int c = params_.n() - 1;
  for (int k = r - 1; k >= 0; --k) {
    while (binom_[c][k + 1] > rank) --c;
    elements[k] = c + 1;
    rank -= binom_[c][k + 1];
    --c;
  }
  return Vertex(params_.n(), std::move(elements));
}

bool JohnsonGraph::adjacent(const Vertex& x, const Vertex& y) const {
  return intersection_size(x, y) == params_.s();
}

void JohnsonGraph::for_each_mixed(const Vertex& y, int inside,
                                  const std::function<void(const Vertex&)>& visit) const {
  const int n = params_.n(), r = params_.r();
  const auto own = y.elements();
  std::vector<int> outside;
  outside.reserve(n - r);
  for (int e = 1, k = 0; e <= n; ++e) {
    if (k < r && own[k] == e) {
      ++k;
    } else {
      outside.push_back(e);
    }
  }
  const int from_outside = r - inside;
  if (inside > r || from_outside > static_cast<int>(outside.size())) return;

  std::vector<int> elements(r);
  std::vector<int> in_idx = first_combination(inside);
  do {
    std::vector<int> out_idx = first_combination(from_outside);
    do {
      auto it = elements.begin();
      for (int i : in_idx) *it++ = own[i];
      for (int i : out_idx) *it++ = outside[i];
      std::vector<int> sorted = elements;
      std::inplace_merge(sorted.begin(), sorted.begin() + inside, sorted.end());
      visit(Vertex(n, std::move(sorted)));
    } while (next_combination(out_idx, static_cast<int>(outside.size())));
  } while (next_combination(in_idx, r));
}

void JohnsonGraph::for_each_neighbor(
    const Vertex& x, const std::function<void(const Vertex&)>& visit) const {
  rank(x);  // validates membership
  for_each_mixed(x, params_.s(), visit);
}

std::vector<Vertex> JohnsonGraph::neighbors(const Vertex& x) const {
  std::vector<Vertex> out;
  out.reserve(degree_);
  for_each_neighbor(x, [&](const Vertex& v) { out.push_back(v); });
  return out;
}

std::vector<Rank> JohnsonGraph::neighbor_ranks(Rank v) const {
  std::vector<Rank> out;
  out.reserve(degree_);
  for_each_mixed(unrank(v), params_.s(), [&](const Vertex& w) { out.push_back(rank(w)); });
  std::sort(out.begin(), out.end());
  return out;
}

void JohnsonGraph::for_each_in_class(
    const Vertex& y, int j, const std::function<void(const Vertex&)>& visit) const {
  if (j < 0 || j > params_.r()) {
    throw ParameterError(fmt::format("class index j must lie in [0,{}], got {}",
                                     params_.r(), j));
  }
  rank(y);
  for_each_mixed(y, j, visit);
}

std::vector<Vertex> JohnsonGraph::partition_class(const Vertex& y, int j) const {
  std::vector<Vertex> out;
  for_each_in_class(y, j, [&](const Vertex& v) { out.push_back(v); });
  return out;
}

void JohnsonGraph::for_each_edge(const std::function<void(const RankEdge&)>& visit) const {
  for (Rank a = 0; a < vertex_count_; ++a) {
    for (Rank b : neighbor_ranks(a)) {
      if (b > a) visit({a, b});
    }
  }
}

std::vector<RankEdge> JohnsonGraph::edges() const {
  std::vector<RankEdge> out;
  for_each_edge([&](const RankEdge& e) { out.push_back(e); });
  return out;
}

AdjacencyLists JohnsonGraph::adjacency_lists() const {
  if (vertex_count_ > std::numeric_limits<std::uint32_t>::max()) {
    throw ParameterError(fmt::format("{} is too large for adjacency lists",
                                     params_.to_string()));
  }
  AdjacencyLists adj(vertex_count_);
  for (Rank a = 0; a < vertex_count_; ++a) {
    const auto ranks = neighbor_ranks(a);
    adj[a].assign(ranks.begin(), ranks.end());
  }
  return adj;
}

}  // namespace gjohnson

#ifndef GJOHNSON_COMBINATORICS_HPP_
#define GJOHNSON_COMBINATORICS_HPP_

// Exact integer combinatorics of the generalized Johnson graph G(n,r,s):
// vertices are the r-subsets of {1..n}, two vertices are adjacent iff they
// share exactly s elements.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gjohnson {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(a,b) extended to all integers: zero unless 0 <= b <= a, C(0,0) = 1.
BigInt binom(std::int64_t a, std::int64_t b);

/// Natural log of a positive big integer; -inf for zero.
double log_of(const BigInt& value);

/// The triple (n, r, s) with 0 <= s < r < n and n >= 2r - s, so that the
/// graph has at least one edge.
class GraphParams {
 public:
  GraphParams(int n, int r, int s);

  int n() const { return n_; }
  int r() const { return r_; }
  int s() const { return s_; }

  std::string to_string() const;

  friend bool operator==(const GraphParams&, const GraphParams&) = default;

 private:
  int n_;
  int r_;
  int s_;
};

/// N = C(n,r).
BigInt vertex_count(const GraphParams& params);
/// N1 = C(r,s) * C(n-r, r-s); the graph is N1-regular.
BigInt degree(const GraphParams& params);
/// N * N1 / 2.
BigInt edge_count(const GraphParams& params);

/// Summation range of the A_i^j formula. Empty when m_min > m_max.
struct MRange {
  std::int64_t m_min = 0;
  std::int64_t m_max = -1;

  bool empty() const { return m_min > m_max; }
};

/// Exact range of m whose term in the A_i^j sum is nonzero at this n.
MRange m_range(const GraphParams& params, int i, int j);

/// The large-n range: m_max drops the n-dependent bound and becomes
/// min{s, i, j}.
MRange asymptotic_m_range(int r, int s, int i, int j);

/// A_i^j = |V_j(y) ∩ V_s(x)| for any y and any x with |x ∩ y| = i.
BigInt a_ij(const GraphParams& params, int i, int j);

/// Large-n nonzero predicate: |i - j| <= r - s and i + j <= r + s.
bool a_ij_nonzero(int r, int s, int i, int j);

/// A_i^j ~ coefficient * n^exponent.
struct LeadingTerm {
  BigRational coefficient;
  int exponent = 0;
};

/// Leading term of A_i^j in n, from the m = min{s,i,j} summand.
/// Throws ParameterError for (i,j) outside the nonzero class.
LeadingTerm a_ij_leading(int r, int s, int i, int j);

enum class ThresholdForm {
  kExactDegree,  // n^{-s/t} / N1
  kFixedLength,  // n^{-(r-s) - s/t}
};

struct Threshold {
  double value = 0.0;
  double log_value = 0.0;
};

/// Edge-retention probability at which C_t containment switches on.
Threshold threshold_p(const GraphParams& params, int t, ThresholdForm form);

}  // namespace gjohnson

#endif  // GJOHNSON_COMBINATORICS_HPP_

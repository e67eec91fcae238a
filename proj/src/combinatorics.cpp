#include "gjohnson/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "gjohnson/errors.hpp"

namespace gjohnson {

BigInt binom(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::int64_t k = 1; k <= b; ++k) {
    result *= a - b + k;
    result /= k;
  }
  return result;
}

double log_of(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

GraphParams::GraphParams(int n, int r, int s) : n_(n), r_(r), s_(s) {
  if (!(0 <= s && s < r && r < n)) {
    throw ParameterError(
        fmt::format("need 0 <= s < r < n, got n={} r={} s={}", n, r, s));
  }
  if (n - r < r - s) {
    throw ParameterError(fmt::format(
        "G({},{},{}) has no edges: need n >= 2r - s for degree N1 >= 1", n, r, s));
  }
}

std::string GraphParams::to_string() const {
  return fmt::format("G({},{},{})", n_, r_, s_);
}

BigInt vertex_count(const GraphParams& params) {
  return binom(params.n(), params.r());
}

BigInt degree(const GraphParams& params) {
  return binom(params.r(), params.s()) *
         binom(params.n() - params.r(), params.r() - params.s());
}

BigInt edge_count(const GraphParams& params) {
  return vertex_count(params) * degree(params) / 2;
}

namespace {

void check_indices(int r, int i, int j) {
  if (i < 0 || i > r || j < 0 || j > r) {
    throw ParameterError(
        fmt::format("indices must lie in [0,{}], got i={} j={}", r, i, j));
  }
}

std::int64_t lower_m(int r, int s, int i, int j) {
  return std::max({0, std::max(i, j) - (r - s), i + j - r});
}

}  // namespace

MRange m_range(const GraphParams& params, int i, int j) {
  const int n = params.n(), r = params.r(), s = params.s();
  check_indices(r, i, j);
  return {lower_m(r, s, i, j),
          std::min<std::int64_t>({s, i, j, n - 2 * r + i + j - (r - s)})};
}

MRange asymptotic_m_range(int r, int s, int i, int j) {
  check_indices(r, i, j);
  return {lower_m(r, s, i, j), std::min({s, i, j})};
}

BigInt a_ij(const GraphParams& params, int i, int j) {
  const int n = params.n(), r = params.r(), s = params.s();
  check_indices(r, i, j);
  BigInt total = 0;
  for (int m = 0; m <= s; ++m) {
    total += binom(i, m) * binom(r - i, s - m) * binom(r - i, j - m) *
             binom(n - 2 * r + i, r - s - j + m);
  }
  return total;
}

bool a_ij_nonzero(int r, int s, int i, int j) {
  return std::abs(i - j) <= r - s && i + j <= r + s;
}

LeadingTerm a_ij_leading(int r, int s, int i, int j) {
  check_indices(r, i, j);
  if (!a_ij_nonzero(r, s, i, j)) {
    throw ParameterError(fmt::format(
        "A_{}^{} vanishes for large n (r={} s={}); no leading term", i, j, r, s));
  }
  const int m = std::min({s, i, j});
  const int power = r - s - j + m;
  BigInt numerator = binom(i, m) * binom(r - i, s - m) * binom(r - i, j - m);
  BigInt factorial = 1;
  for (int k = 2; k <= power; ++k) factorial *= k;
  return {BigRational(numerator, factorial), power};
}

Threshold threshold_p(const GraphParams& params, int t, ThresholdForm form) {
  if (t < 3) throw ParameterError(fmt::format("cycle length t must be >= 3, got {}", t));
  const double log_n = std::log(static_cast<double>(params.n()));
  const double shift = static_cast<double>(params.s()) / t * log_n;
  double log_value = 0.0;
  switch (form) {
    case ThresholdForm::kExactDegree:
      log_value = -shift - log_of(degree(params));
      break;
    case ThresholdForm::kFixedLength:
      log_value = -(params.r() - params.s()) * log_n - shift;
      break;
  }
  return {std::exp(log_value), log_value};
}

}  // namespace gjohnson

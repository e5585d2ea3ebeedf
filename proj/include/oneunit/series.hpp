#ifndef ONEUNIT_SERIES_HPP
#define ONEUNIT_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oneunit/fp.hpp"

namespace oneunit {

/// A power series over F_p known modulo x^N.
///
/// The coefficient vector always has exactly N entries, each reduced into
/// [0, p). Binary operations require equal modulus and equal precision;
/// use `truncate` to bring operands to a common precision explicitly.
class TruncSeries {
 public:
  /// Throws OutOfRange if any coefficient is >= p, ShapeMismatch if empty.
  TruncSeries(Prime p, std::vector<std::uint32_t> coeffs);

  static TruncSeries zero(Prime p, std::size_t precision);
  static TruncSeries one(Prime p, std::size_t precision);
  /// The series x (or 0 when precision is 1).
  static TruncSeries variable(Prime p, std::size_t precision);
  /// Reduces each signed entry into F_p.
  static TruncSeries from_ints(Prime p, std::span<const std::int64_t> values);

  Prime modulus() const noexcept { return p_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  std::uint32_t operator[](std::size_t n) const { return coeffs_[n]; }
  FpElement coeff(std::size_t n) const { return {coeffs_.at(n), p_}; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  Prime p_;
  std::vector<std::uint32_t> coeffs_;
};

TruncSeries add(const TruncSeries& f, const TruncSeries& g);
TruncSeries sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries scale(const TruncSeries& f, FpElement c);

/// Cauchy product truncated to N terms.
TruncSeries mul(const TruncSeries& f, const TruncSeries& g);

/// g with f*g = 1 mod x^N. Throws NonUnitConstantTerm if f(0) = 0.
TruncSeries invert(const TruncSeries& f);

/// f^e by square-and-multiply.
TruncSeries pow(const TruncSeries& f, std::uint64_t e);

/// Order-m Hasse derivative: x^n maps to C(n, m) x^(n-m). The result has
/// precision N - m. Throws PrecisionExhausted if m >= N.
TruncSeries hasse_derivative(const TruncSeries& f, std::size_t m);

/// f(x^p) at the same precision.
TruncSeries frobenius(const TruncSeries& f);

/// g with g(x^p) = f, at precision floor((N-1)/p) + 1.
/// Throws NotAPthPower if f has a nonzero coefficient off the multiples of p.
TruncSeries pth_root(const TruncSeries& f);

/// Index of the first nonzero coefficient at an index not divisible by p.
std::optional<std::size_t> first_off_lattice(const TruncSeries& f);

/// f(h(x)) mod x^N. Throws NonzeroConstantInner if h(0) != 0.
TruncSeries compose(const TruncSeries& f, const TruncSeries& h);

/// First M coefficients of f. Throws PrecisionExhausted if M > N.
TruncSeries truncate(const TruncSeries& f, std::size_t m);

inline TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) { return add(f, g); }
inline TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) { return sub(f, g); }
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return mul(f, g); }

/// `p=<p>;N=<N>;coeffs=<c0>,...,<c{N-1}>`
std::string to_string(const TruncSeries& f);
/// Inverse of to_string. Throws ParseError or InvalidPrime.
TruncSeries parse_series(std::string_view text);
/// Bare comma-separated coefficients; precision is the number of entries.
TruncSeries parse_coeff_list(Prime p, std::string_view text);

/// Series in x and y known modulo (x^N, y^N); entry (i, j) is the
/// coefficient of x^i y^j.
class BivTrunc {
 public:
  BivTrunc(Prime p, std::size_t precision);

  Prime modulus() const noexcept { return p_; }
  std::size_t precision() const noexcept { return n_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return coeffs_[i * n_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return coeffs_[i * n_ + j]; }

  friend bool operator==(const BivTrunc&, const BivTrunc&) = default;

 private:
  Prime p_;
  std::size_t n_;
  std::vector<std::uint32_t> coeffs_;
};

/// f(x) * f(y) in the N x N box.
BivTrunc outer_product(const TruncSeries& f, const TruncSeries& g);

/// f(x + y + xy) in the N x N box, by Horner evaluation.
BivTrunc subst_group_law(const TruncSeries& f);

}  // namespace oneunit

#endif  // ONEUNIT_SERIES_HPP

#ifndef ONEUNIT_POLYNOMIAL_HPP
#define ONEUNIT_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oneunit/fp.hpp"
#include "oneunit/series.hpp"

namespace oneunit {

/// Dense polynomial over F_p with no trailing zero coefficients; the zero
/// polynomial has an empty coefficient vector.
class Polynomial {
 public:
  Polynomial(Prime p, std::vector<std::uint32_t> coeffs);

  static Polynomial constant(Prime p, std::uint32_t c);
  /// 1 - x^r
  static Polynomial one_minus_x_pow(Prime p, std::size_t r);

  Prime modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  std::uint32_t operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : 0; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

  /// Coefficients mod x^N as a series.
  TruncSeries to_series(std::size_t precision) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  Prime p_;
  std::vector<std::uint32_t> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, std::uint32_t c);
/// x^k * a
Polynomial shift(const Polynomial& a, std::size_t k);

/// (quotient, remainder). Throws DivisionByZero for b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Comma-separated coefficients, low degree first; "0" for the zero polynomial.
std::string to_string(const Polynomial& a);

}  // namespace oneunit

#endif  // ONEUNIT_POLYNOMIAL_HPP

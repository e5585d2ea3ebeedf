#ifndef ONEUNIT_PADIC_HPP
#define ONEUNIT_PADIC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oneunit/fp.hpp"
#include "oneunit/period.hpp"

namespace oneunit {

/// A reduced fraction with positive denominator.
class RationalNum {
 public:
  /// Normalizes sign and common factors. Throws DivisionByZero if den = 0.
  RationalNum(std::int64_t num, std::int64_t den = 1);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  friend bool operator==(const RationalNum&, const RationalNum&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// `a/b`, or `a` when the denominator is 1.
std::string to_string(const RationalNum& r);
/// Accepts `a/b` or a plain integer.
RationalNum parse_rational(std::string_view text);

/// A p-adic integer known modulo p^K, stored as K little-endian base-p
/// digits (digits[i] is the coefficient of p^i). Negative numbers are
/// represented by their residues, never by a sign.
class PadicApprox {
 public:
  /// Throws OutOfRange for digits >= p, PrecisionExhausted for K = 0.
  PadicApprox(Prime p, std::vector<std::uint32_t> digits);

  Prime modulus() const noexcept { return p_; }
  std::size_t precision() const noexcept { return digits_.size(); }
  std::uint32_t digit(std::size_t i) const { return digits_.at(i); }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }
  bool is_unit() const noexcept { return digits_[0] != 0; }

  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

 private:
  Prime p_;
  std::vector<std::uint32_t> digits_;
};

PadicApprox from_integer(Prime p, std::int64_t y, std::size_t precision);
/// num * den^-1 mod p^K. Throws DenominatorNotCoprime if p divides den.
PadicApprox from_fraction(Prime p, const RationalNum& r, std::size_t precision);

/// Results carry the smaller of the two input precisions.
PadicApprox add(const PadicApprox& a, const PadicApprox& b);
PadicApprox sub(const PadicApprox& a, const PadicApprox& b);
PadicApprox neg(const PadicApprox& a);
PadicApprox mul(const PadicApprox& a, const PadicApprox& b);
/// Newton iteration x <- x(2 - ax). Throws NonUnitExponent if a_0 = 0.
PadicApprox unit_inverse(const PadicApprox& a);
PadicApprox truncate(const PadicApprox& a, std::size_t precision);

inline PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) { return add(a, b); }
inline PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return sub(a, b); }
inline PadicApprox operator-(const PadicApprox& a) { return neg(a); }
inline PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) { return mul(a, b); }

/// C(y, n) mod p as the Lucas product over base-p digits of n.
/// Throws PrecisionExhausted when n >= p^K.
FpElement binom(const PadicApprox& y, std::uint64_t n);

/// Smallest k with p^k >= n (0 for n <= 1).
std::size_t digits_to_cover(Prime p, std::uint64_t n);

/// Integrality evidence read from the trailing digits of y.
struct IntegerVerdict {
  enum class Kind { kNonNegative, kNegative, kNotInteger };
  Kind kind = Kind::kNotInteger;
  std::int64_t value = 0;     // meaningful for the two integer kinds
  std::size_t tail_length = 0;  // length of the trailing run of 0 or p-1 digits

  bool is_integer() const noexcept { return kind != Kind::kNotInteger; }
  friend bool operator==(const IntegerVerdict&, const IntegerVerdict&) = default;
};

/// Calls y an integer when its trailing run of 0 (or p-1) digits covers at
/// least max(2, ceil(K/2)) digits. The verdict is relative to the window K.
/// Throws PrecisionExhausted for K < 2, Overflow if the value exceeds int64.
IntegerVerdict is_integer_window(const PadicApprox& y);

/// Minimum trailing-run length that is_integer_window accepts at precision K.
std::size_t integer_tail_threshold(std::size_t precision);

std::optional<PeriodReport> detect_digit_period(const PadicApprox& y, std::size_t max_preperiod,
                                                std::size_t max_period);

/// A + p^w P / (1 - p^r), reduced, where A is the value of the preperiod
/// digits and P the value of one period block. Throws InconsistentReport if
/// re-expanding the result does not reproduce y.
RationalNum reconstruct_rational(const PadicApprox& y, const PeriodReport& report);

/// `p=<p>;K=<K>;digits=<d0>,<d1>,...`
std::string to_string(const PadicApprox& y);
PadicApprox parse_padic(std::string_view text);
/// Bare comma-separated digits, little-endian.
PadicApprox parse_digit_list(Prime p, std::string_view text);

}  // namespace oneunit

#endif  // ONEUNIT_PADIC_HPP

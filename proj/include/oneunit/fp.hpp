#ifndef ONEUNIT_FP_HPP
#define ONEUNIT_FP_HPP

#include <cstdint>
#include <ostream>

#include "oneunit/errors.hpp"

namespace oneunit {

/// A prime modulus, validated by trial division at construction.
///
/// Moduli are limited to p <= 2^31 so that a product of two residues fits in
/// 64 bits without widening.
class Prime {
 public:
  static constexpr std::uint64_t kMax = std::uint64_t{1} << 31;

  explicit Prime(std::uint64_t p);

  std::uint32_t value() const noexcept { return p_; }
  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Element of F_p. `value` is always reduced into [0, p).
struct FpElement {
  std::uint32_t value;
  Prime modulus;

  /// Reduces an arbitrary signed integer into F_p.
  static FpElement from_int(Prime p, std::int64_t v);

  friend bool operator==(const FpElement&, const FpElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const FpElement& a);

namespace detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Inverse by extended Euclid; `a` must be nonzero mod p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

std::uint32_t reduce(std::int64_t v, std::uint32_t p);

}  // namespace detail

FpElement add(FpElement a, FpElement b);
FpElement sub(FpElement a, FpElement b);
FpElement neg(FpElement a);
FpElement mul(FpElement a, FpElement b);
FpElement inv(FpElement a);
FpElement pow(FpElement a, std::uint64_t e);

inline FpElement operator+(FpElement a, FpElement b) { return add(a, b); }
inline FpElement operator-(FpElement a, FpElement b) { return sub(a, b); }
inline FpElement operator-(FpElement a) { return neg(a); }
inline FpElement operator*(FpElement a, FpElement b) { return mul(a, b); }

/// C(a, b) mod p for single base-p digits a, b in [0, p). Zero when b > a.
FpElement binom_digit(std::uint32_t a, std::uint32_t b, Prime p);

/// C(n, k) mod p by Lucas' theorem over the base-p digits of n and k.
FpElement lucas_binom(std::uint64_t n, std::uint64_t k, Prime p);

}  // namespace oneunit

#endif  // ONEUNIT_FP_HPP

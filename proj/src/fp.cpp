#include "oneunit/fp.hpp"

#include <algorithm>
#include <string>

namespace oneunit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) {
  if (p > kMax) {
    throw InvalidPrime("modulus " + std::to_string(p) + " exceeds 2^31");
  }
  if (!is_prime(p)) {
    throw InvalidPrime(std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

FpElement FpElement::from_int(Prime p, std::int64_t v) {
  return FpElement{detail::reduce(v, p.value()), p};
}

std::ostream& operator<<(std::ostream& os, const FpElement& a) {
  return os << a.value;
}

namespace detail {

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t r0 = p, r1 = a % p;
  std::int64_t t0 = 0, t1 = 1;
  if (r1 == 0) throw DivisionByZero();
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0, p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace detail

namespace {

void require_same(FpElement a, FpElement b) {
  if (!(a.modulus == b.modulus)) throw ModulusMismatch();
}

}  // namespace

FpElement add(FpElement a, FpElement b) {
  require_same(a, b);
  return {detail::add_mod(a.value, b.value, a.modulus.value()), a.modulus};
}

FpElement sub(FpElement a, FpElement b) {
  require_same(a, b);
  return {detail::sub_mod(a.value, b.value, a.modulus.value()), a.modulus};
}

FpElement neg(FpElement a) {
  return {detail::neg_mod(a.value, a.modulus.value()), a.modulus};
}

FpElement mul(FpElement a, FpElement b) {
  require_same(a, b);
  return {detail::mul_mod(a.value, b.value, a.modulus.value()), a.modulus};
}

FpElement inv(FpElement a) {
  return {detail::inv_mod(a.value, a.modulus.value()), a.modulus};
}

FpElement pow(FpElement a, std::uint64_t e) {
  return {detail::pow_mod(a.value, e, a.modulus.value()), a.modulus};
}

FpElement binom_digit(std::uint32_t a, std::uint32_t b, Prime p) {
  const std::uint32_t m = p.value();
  if (a >= m || b >= m) throw OutOfRange("binom_digit arguments must be base-p digits");
  if (b > a) return {0, p};
  b = std::min(b, a - b);
  // a < p, so every factor of b! is invertible.
  std::uint32_t num = 1 % m, den = 1 % m;
  for (std::uint32_t i = 1; i <= b; ++i) {
    num = detail::mul_mod(num, a - b + i, m);
    den = detail::mul_mod(den, i, m);
  }
  return {detail::mul_mod(num, detail::inv_mod(den, m), m), p};
}

FpElement lucas_binom(std::uint64_t n, std::uint64_t k, Prime p) {
  const std::uint32_t m = p.value();
  std::uint32_t result = 1 % m;
  while (k != 0) {
    auto nd = static_cast<std::uint32_t>(n % m);
    auto kd = static_cast<std::uint32_t>(k % m);
    if (kd > nd) return {0, p};
    result = detail::mul_mod(result, binom_digit(nd, kd, p).value, m);
    n /= m;
    k /= m;
  }
  return {result, p};
}

}  // namespace oneunit

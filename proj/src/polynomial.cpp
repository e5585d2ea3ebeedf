#include "oneunit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace oneunit {

using detail::add_mod;
using detail::mul_mod;
using detail::sub_mod;

Polynomial::Polynomial(Prime p, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_.value();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Prime p, std::uint32_t c) { return Polynomial(p, {c}); }

Polynomial Polynomial::one_minus_x_pow(Prime p, std::size_t r) {
  std::vector<std::uint32_t> c(r + 1, 0);
  c[0] = 1;
  c[r] = detail::sub_mod(c[r], 1, p.value());
  return Polynomial(p, std::move(c));
}

TruncSeries Polynomial::to_series(std::size_t precision) const {
  std::vector<std::uint32_t> c(precision, 0);
  std::copy_n(coeffs_.begin(), std::min(precision, coeffs_.size()), c.begin());
  return TruncSeries(p_, std::move(c));
}

namespace {

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch();
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  const auto p = a.modulus().value();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a[i], b[i], p);
  return Polynomial(a.modulus(), std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  const auto p = a.modulus().value();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a[i], b[i], p);
  return Polynomial(a.modulus(), std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.modulus(), {});
  const auto p = a.modulus().value();
  std::vector<std::uint32_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = add_mod(c[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  return Polynomial(a.modulus(), std::move(c));
}

Polynomial scale(const Polynomial& a, std::uint32_t k) {
  std::vector<std::uint32_t> c = a.coeffs();
  for (auto& v : c) v = mul_mod(v, k, a.modulus().value());
  return Polynomial(a.modulus(), std::move(c));
}

Polynomial shift(const Polynomial& a, std::size_t k) {
  if (a.is_zero()) return a;
  std::vector<std::uint32_t> c(k, 0);
  c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
  return Polynomial(a.modulus(), std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (b.is_zero()) throw DivisionByZero();
  const auto p = a.modulus().value();
  std::vector<std::uint32_t> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const std::uint32_t lead_inv = detail::inv_mod(b.coeffs().back(), p);
  std::vector<std::uint32_t> q(r.size() >= db + 1 ? r.size() - db : 0, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const std::uint32_t c = mul_mod(r[k], lead_inv, p);
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = sub_mod(r[k - db + j], mul_mod(c, b[j], p), p);
  }
  return {Polynomial(a.modulus(), std::move(q)), Polynomial(a.modulus(), std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return scale(x, detail::inv_mod(x.coeffs().back(), x.modulus().value()));
}

std::string to_string(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

}  // namespace oneunit

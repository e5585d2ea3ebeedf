#include "oneunit/series.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace oneunit {

using detail::add_mod;
using detail::mul_mod;
using detail::sub_mod;

TruncSeries::TruncSeries(Prime p, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ShapeMismatch("series precision must be at least 1");
  for (auto c : coeffs_) {
    if (c >= p_.value()) throw OutOfRange("coefficient " + std::to_string(c) + " is not reduced mod p");
  }
}

TruncSeries TruncSeries::zero(Prime p, std::size_t precision) {
  return TruncSeries(p, std::vector<std::uint32_t>(precision, 0));
}

TruncSeries TruncSeries::one(Prime p, std::size_t precision) {
  std::vector<std::uint32_t> c(precision, 0);
  if (!c.empty()) c[0] = 1;
  return TruncSeries(p, std::move(c));
}

TruncSeries TruncSeries::variable(Prime p, std::size_t precision) {
  std::vector<std::uint32_t> c(precision, 0);
  if (precision > 1) c[1] = 1;
  return TruncSeries(p, std::move(c));
}

TruncSeries TruncSeries::from_ints(Prime p, std::span<const std::int64_t> values) {
  std::vector<std::uint32_t> c;
  c.reserve(values.size());
  for (auto v : values) c.push_back(detail::reduce(v, p.value()));
  return TruncSeries(p, std::move(c));
}

namespace {

void require_compatible(const TruncSeries& f, const TruncSeries& g) {
  if (!(f.modulus() == g.modulus())) throw ModulusMismatch();
  if (f.precision() != g.precision()) {
    throw ShapeMismatch("precision mismatch: " + std::to_string(f.precision()) + " vs " +
                        std::to_string(g.precision()));
  }
}

// Product of f and g keeping only the first `len` coefficients; both inputs
// must have at least `len` entries.
std::vector<std::uint32_t> mul_prefix(std::span<const std::uint32_t> f,
                                      std::span<const std::uint32_t> g, std::size_t len,
                                      std::uint32_t p) {
  std::vector<std::uint32_t> out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (f[i] == 0) continue;
    const std::uint64_t fi = f[i];
    for (std::size_t j = 0; i + j < len; ++j) {
      if (g[j] == 0) continue;
      out[i + j] = add_mod(out[i + j], static_cast<std::uint32_t>(fi * g[j] % p), p);
    }
  }
  return out;
}

}  // namespace

TruncSeries add(const TruncSeries& f, const TruncSeries& g) {
  require_compatible(f, g);
  const auto p = f.modulus().value();
  std::vector<std::uint32_t> c(f.precision());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = add_mod(f[n], g[n], p);
  return TruncSeries(f.modulus(), std::move(c));
}

TruncSeries sub(const TruncSeries& f, const TruncSeries& g) {
  require_compatible(f, g);
  const auto p = f.modulus().value();
  std::vector<std::uint32_t> c(f.precision());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = sub_mod(f[n], g[n], p);
  return TruncSeries(f.modulus(), std::move(c));
}

TruncSeries scale(const TruncSeries& f, FpElement k) {
  if (!(k.modulus == f.modulus())) throw ModulusMismatch();
  const auto p = f.modulus().value();
  std::vector<std::uint32_t> c(f.precision());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = mul_mod(f[n], k.value, p);
  return TruncSeries(f.modulus(), std::move(c));
}

TruncSeries mul(const TruncSeries& f, const TruncSeries& g) {
  require_compatible(f, g);
  return TruncSeries(f.modulus(),
                     mul_prefix(f.coeffs(), g.coeffs(), f.precision(), f.modulus().value()));
}

TruncSeries invert(const TruncSeries& f) {
  const auto p = f.modulus().value();
  if (f[0] == 0) throw NonUnitConstantTerm();
  const std::size_t n = f.precision();
  const std::uint32_t c0inv = detail::inv_mod(f[0], p);
  std::vector<std::uint32_t> g(n, 0);
  g[0] = c0inv;
  // f0*g_k = -sum_{i=1..k} f_i g_{k-i}
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (f[i] == 0) continue;
      acc = add_mod(acc, mul_mod(f[i], g[k - i], p), p);
    }
    g[k] = mul_mod(detail::neg_mod(acc, p), c0inv, p);
  }
  return TruncSeries(f.modulus(), std::move(g));
}

TruncSeries pow(const TruncSeries& f, std::uint64_t e) {
  TruncSeries result = TruncSeries::one(f.modulus(), f.precision());
  TruncSeries base = f;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

TruncSeries hasse_derivative(const TruncSeries& f, std::size_t m) {
  const std::size_t n = f.precision();
  if (m >= n) {
    throw PrecisionExhausted("Hasse derivative of order " + std::to_string(m) +
                             " needs precision above " + std::to_string(m));
  }
  const auto p = f.modulus().value();
  std::vector<std::uint32_t> c(n - m, 0);
  for (std::size_t k = m; k < n; ++k) {
    if (f[k] == 0) continue;
    c[k - m] = mul_mod(f[k], lucas_binom(k, m, f.modulus()).value, p);
  }
  return TruncSeries(f.modulus(), std::move(c));
}

TruncSeries frobenius(const TruncSeries& f) {
  const std::size_t p = f.modulus().value();
  std::vector<std::uint32_t> c(f.precision(), 0);
  for (std::size_t n = 0; n * p < c.size(); ++n) c[n * p] = f[n];
  return TruncSeries(f.modulus(), std::move(c));
}

std::optional<std::size_t> first_off_lattice(const TruncSeries& f) {
  const std::size_t p = f.modulus().value();
  for (std::size_t n = 0; n < f.precision(); ++n) {
    if (n % p != 0 && f[n] != 0) return n;
  }
  return std::nullopt;
}

TruncSeries pth_root(const TruncSeries& f) {
  if (auto bad = first_off_lattice(f)) throw NotAPthPower(*bad);
  const std::size_t p = f.modulus().value();
  const std::size_t m = (f.precision() - 1) / p + 1;
  std::vector<std::uint32_t> c(m);
  for (std::size_t n = 0; n < m; ++n) c[n] = f[n * p];
  return TruncSeries(f.modulus(), std::move(c));
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& h) {
  require_compatible(f, h);
  if (h[0] != 0) throw NonzeroConstantInner();
  const std::size_t n = f.precision();
  const auto p = f.modulus().value();
  // Horner: r_k = a_k + h * r_{k+1}. Since h^k has valuation >= k, r_k only
  // matters modulo x^(N-k).
  std::vector<std::uint32_t> r{f[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t len = n - k;
    std::vector<std::uint32_t> prev(len, 0);
    std::copy(r.begin(), r.end(), prev.begin());
    r = mul_prefix(h.coeffs(), prev, len, p);
    r[0] = add_mod(r[0], f[k], p);
  }
  return TruncSeries(f.modulus(), std::move(r));
}

TruncSeries truncate(const TruncSeries& f, std::size_t m) {
  if (m > f.precision()) {
    throw PrecisionExhausted("cannot raise precision from " + std::to_string(f.precision()) +
                             " to " + std::to_string(m));
  }
  auto c = f.coeffs();
  return TruncSeries(f.modulus(), std::vector<std::uint32_t>(c.begin(), c.begin() + m));
}

std::string to_string(const TruncSeries& f) {
  std::ostringstream os;
  os << "p=" << f.modulus().value() << ";N=" << f.precision() << ";coeffs=";
  for (std::size_t n = 0; n < f.precision(); ++n) {
    if (n) os << ',';
    os << f[n];
  }
  return os.str();
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string_view expect_field(std::string_view& rest, std::string_view key) {
  if (rest.substr(0, key.size()) != key) {
    throw ParseError("expected '" + std::string(key) + "'");
  }
  rest.remove_prefix(key.size());
  auto semi = rest.find(';');
  std::string_view value = rest.substr(0, semi);
  rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
  return value;
}

}  // namespace

TruncSeries parse_coeff_list(Prime p, std::string_view text) {
  std::vector<std::uint32_t> c;
  while (true) {
    auto comma = text.find(',');
    auto v = parse_uint(text.substr(0, comma), "coefficient");
    if (v >= p.value()) throw ParseError("coefficient " + std::to_string(v) + " is not reduced mod p");
    c.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return TruncSeries(p, std::move(c));
}

TruncSeries parse_series(std::string_view text) {
  std::string_view rest = text;
  Prime p(parse_uint(expect_field(rest, "p="), "prime"));
  auto n = parse_uint(expect_field(rest, "N="), "precision");
  auto coeffs = expect_field(rest, "coeffs=");
  if (!rest.empty()) throw ParseError("trailing input after coeffs");
  auto f = parse_coeff_list(p, coeffs);
  if (f.precision() != n) {
    throw ParseError("N=" + std::to_string(n) + " but " + std::to_string(f.precision()) +
                     " coefficients given");
  }
  return f;
}

BivTrunc::BivTrunc(Prime p, std::size_t precision)
    : p_(p), n_(precision), coeffs_(precision * precision, 0) {
  if (precision == 0) throw ShapeMismatch("bivariate precision must be at least 1");
}

BivTrunc outer_product(const TruncSeries& f, const TruncSeries& g) {
  require_compatible(f, g);
  const auto p = f.modulus().value();
  BivTrunc out(f.modulus(), f.precision());
  for (std::size_t i = 0; i < f.precision(); ++i) {
    for (std::size_t j = 0; j < g.precision(); ++j) out.at(i, j) = mul_mod(f[i], g[j], p);
  }
  return out;
}

BivTrunc subst_group_law(const TruncSeries& f) {
  const std::size_t n = f.precision();
  const auto p = f.modulus().value();
  BivTrunc acc(f.modulus(), n);
  acc.at(0, 0) = f[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    // acc <- acc * (x + y + xy) + a_k
    BivTrunc next(f.modulus(), n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t c = acc.at(i, j);
        if (c == 0) continue;
        if (i + 1 < n) next.at(i + 1, j) = add_mod(next.at(i + 1, j), c, p);
        if (j + 1 < n) next.at(i, j + 1) = add_mod(next.at(i, j + 1), c, p);
        if (i + 1 < n && j + 1 < n) next.at(i + 1, j + 1) = add_mod(next.at(i + 1, j + 1), c, p);
      }
    }
    next.at(0, 0) = add_mod(next.at(0, 0), f[k], p);
    acc = std::move(next);
  }
  return acc;
}

}  // namespace oneunit

#include "oneunit/padic.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace oneunit {

using boost::multiprecision::cpp_int;

RationalNum::RationalNum(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min()) {
      throw Overflow("fraction does not fit in 64 bits");
    }
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string to_string(const RationalNum& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

RationalNum parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalNum(parse_int(text));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator");
  return RationalNum(parse_int(text.substr(0, slash)), den);
}

PadicApprox::PadicApprox(Prime p, std::vector<std::uint32_t> digits)
    : p_(p), digits_(std::move(digits)) {
  if (digits_.empty()) throw PrecisionExhausted("p-adic precision must be at least 1");
  for (auto d : digits_) {
    if (d >= p_.value()) throw OutOfRange("digit " + std::to_string(d) + " is not a base-p digit");
  }
}

namespace {

// Digits of num/den, den a unit mod p, by p-adic long division. |num| stays
// bounded by max(|num|, den) throughout, so 128-bit intermediates suffice.
std::vector<std::uint32_t> divide_digits(Prime prime, __int128 num, __int128 den, std::size_t k) {
  const auto p = prime.value();
  const std::uint32_t den_inv = detail::inv_mod(
      static_cast<std::uint32_t>(((den % p) + p) % p), p);
  std::vector<std::uint32_t> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto r = static_cast<std::uint32_t>(((num % p) + p) % p);
    std::uint32_t d = detail::mul_mod(r, den_inv, p);
    out[i] = d;
    num = (num - static_cast<__int128>(d) * den) / p;
  }
  return out;
}

void require_same(const PadicApprox& a, const PadicApprox& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch();
}

}  // namespace

PadicApprox from_integer(Prime p, std::int64_t y, std::size_t precision) {
  if (precision == 0) throw PrecisionExhausted("p-adic precision must be at least 1");
  return PadicApprox(p, divide_digits(p, y, 1, precision));
}

PadicApprox from_fraction(Prime p, const RationalNum& r, std::size_t precision) {
  if (precision == 0) throw PrecisionExhausted("p-adic precision must be at least 1");
  if (r.denominator() % p.value() == 0) throw DenominatorNotCoprime();
  return PadicApprox(p, divide_digits(p, r.numerator(), r.denominator(), precision));
}

PadicApprox add(const PadicApprox& a, const PadicApprox& b) {
  require_same(a, b);
  const auto p = a.modulus().value();
  const std::size_t k = std::min(a.precision(), b.precision());
  std::vector<std::uint32_t> out(k);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t t = std::uint64_t{a.digit(i)} + b.digit(i) + carry;
    out[i] = static_cast<std::uint32_t>(t % p);
    carry = t / p;
  }
  return PadicApprox(a.modulus(), std::move(out));
}

PadicApprox neg(const PadicApprox& a) {
  const auto p = a.modulus().value();
  // -a = complement(a) + 1
  std::vector<std::uint32_t> out(a.precision());
  std::uint64_t carry = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t t = std::uint64_t{p - 1 - a.digit(i)} + carry;
    out[i] = static_cast<std::uint32_t>(t % p);
    carry = t / p;
  }
  return PadicApprox(a.modulus(), std::move(out));
}

PadicApprox sub(const PadicApprox& a, const PadicApprox& b) { return add(a, neg(b)); }

PadicApprox mul(const PadicApprox& a, const PadicApprox& b) {
  require_same(a, b);
  const auto p = a.modulus().value();
  const std::size_t k = std::min(a.precision(), b.precision());
  std::vector<std::uint32_t> out(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t ai = a.digit(i);
    if (ai == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; i + j < k; ++j) {
      // < p + p^2 + p <= 2^62 + 2^33 for p <= 2^31
      std::uint64_t t = out[i + j] + ai * b.digit(j) + carry;
      out[i + j] = static_cast<std::uint32_t>(t % p);
      carry = t / p;
    }
  }
  return PadicApprox(a.modulus(), std::move(out));
}

PadicApprox truncate(const PadicApprox& a, std::size_t precision) {
  if (precision == 0 || precision > a.precision()) {
    throw PrecisionExhausted("cannot truncate precision " + std::to_string(a.precision()) + " to " +
                             std::to_string(precision));
  }
  auto d = a.digits();
  return PadicApprox(a.modulus(), std::vector<std::uint32_t>(d.begin(), d.begin() + precision));
}

PadicApprox unit_inverse(const PadicApprox& a) {
  if (!a.is_unit()) throw NonUnitExponent();
  const Prime p = a.modulus();
  const std::size_t k = a.precision();
  PadicApprox x = from_integer(p, detail::inv_mod(a.digit(0), p.value()), k);
  const PadicApprox two = from_integer(p, 2, k);
  // Each step doubles the number of correct digits.
  for (std::size_t correct = 1; correct < k; correct *= 2) x = mul(x, sub(two, mul(a, x)));
  return x;
}

std::size_t digits_to_cover(Prime p, std::uint64_t n) {
  std::size_t k = 0;
  // Track p^k without overflow: stop as soon as it reaches n.
  for (std::uint64_t pk = 1; pk < n; ++k) {
    if (pk > n / p.value()) {
      ++k;
      break;
    }
    pk *= p.value();
  }
  return k;
}

FpElement binom(const PadicApprox& y, std::uint64_t n) {
  const Prime prime = y.modulus();
  const auto p = prime.value();
  std::uint32_t result = 1;
  for (std::size_t i = 0; n != 0; ++i) {
    if (i >= y.precision()) {
      throw PrecisionExhausted("C(y, n) needs more than " + std::to_string(y.precision()) +
                               " digits of y");
    }
    auto nd = static_cast<std::uint32_t>(n % p);
    if (nd > y.digit(i)) return {0, prime};
    result = detail::mul_mod(result, binom_digit(y.digit(i), nd, prime).value, p);
    n /= p;
  }
  return {result, prime};
}

std::size_t integer_tail_threshold(std::size_t precision) {
  return std::max<std::size_t>(2, (precision + 1) / 2);
}

IntegerVerdict is_integer_window(const PadicApprox& y) {
  const std::size_t k = y.precision();
  if (k < 2) throw PrecisionExhausted("integrality test needs at least 2 digits");
  const std::uint32_t top = y.digit(k - 1);
  const std::uint32_t pm1 = y.modulus().value() - 1;
  IntegerVerdict v;
  if (top != 0 && top != pm1) return v;
  std::size_t tail = 0;
  while (tail < k && y.digit(k - 1 - tail) == top) ++tail;
  v.tail_length = tail;
  if (tail < integer_tail_threshold(k)) return v;

  const cpp_int p = y.modulus().value();
  cpp_int value = 0, scale = 1;
  for (std::size_t i = 0; i + tail < k; ++i) {
    value += scale * y.digit(i);
    scale *= p;
  }
  if (top == pm1 && top != 0) {
    value -= scale;
    v.kind = IntegerVerdict::Kind::kNegative;
  } else {
    v.kind = IntegerVerdict::Kind::kNonNegative;
  }
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Overflow("integer read from digits exceeds 64 bits");
  }
  v.value = static_cast<std::int64_t>(value);
  return v;
}

std::optional<PeriodReport> detect_digit_period(const PadicApprox& y, std::size_t max_preperiod,
                                                std::size_t max_period) {
  return detect_period(y.digits(), max_preperiod, max_period);
}

RationalNum reconstruct_rational(const PadicApprox& y, const PeriodReport& report) {
  if (report.period == 0 || report.preperiod + report.period > y.precision()) {
    throw InconsistentReport("period report does not fit the digit window");
  }
  const cpp_int p = y.modulus().value();
  cpp_int pre = 0, block = 0, scale = 1;
  for (std::size_t i = 0; i < report.preperiod; ++i) {
    pre += scale * y.digit(i);
    scale *= p;
  }
  const cpp_int p_omega = scale;
  scale = 1;
  for (std::size_t j = 0; j < report.period; ++j) {
    block += scale * y.digit(report.preperiod + j);
    scale *= p;
  }
  // scale == p^r
  cpp_int den = 1 - scale;
  cpp_int num = pre * den + p_omega * block;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const cpp_int g = gcd(num, den);
  num /= g;
  den /= g;
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num > hi || num < lo || den > hi) throw Overflow("reconstructed fraction exceeds 64 bits");
  RationalNum r(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  if (!(from_fraction(y.modulus(), r, y.precision()) == y)) {
    throw InconsistentReport("reconstructed fraction " + to_string(r) +
                             " does not re-expand to the given digits");
  }
  return r;
}

std::string to_string(const PadicApprox& y) {
  std::ostringstream os;
  os << "p=" << y.modulus().value() << ";K=" << y.precision() << ";digits=";
  for (std::size_t i = 0; i < y.precision(); ++i) {
    if (i) os << ',';
    os << y.digit(i);
  }
  return os.str();
}

PadicApprox parse_digit_list(Prime p, std::string_view text) {
  std::vector<std::uint32_t> digits;
  while (true) {
    auto comma = text.find(',');
    auto v = parse_int(text.substr(0, comma));
    if (v < 0 || v >= static_cast<std::int64_t>(p.value())) {
      throw ParseError("digit " + std::to_string(v) + " is not a base-p digit");
    }
    digits.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return PadicApprox(p, std::move(digits));
}

PadicApprox parse_padic(std::string_view text) {
  auto take = [&](std::string_view key) {
    if (text.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "'");
    text.remove_prefix(key.size());
    auto semi = text.find(';');
    auto value = text.substr(0, semi);
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    return value;
  };
  auto pv = parse_int(take("p="));
  if (pv < 2) throw ParseError("invalid prime");
  Prime p(static_cast<std::uint64_t>(pv));
  auto k = parse_int(take("K="));
  auto y = parse_digit_list(p, take("digits="));
  if (!text.empty()) throw ParseError("trailing input after digits");
  if (static_cast<std::int64_t>(y.precision()) != k) {
    throw ParseError("K=" + std::to_string(k) + " but " + std::to_string(y.precision()) +
                     " digits given");
  }
  return y;
}

}  // namespace oneunit

#include "oneunit/unit_group.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace oneunit {

OneUnit::OneUnit(TruncSeries series) : series_(std::move(series)) {
  if (series_[0] != 1) throw NotAOneUnit();
}

namespace {

void require_cover(const PadicApprox& y, std::size_t precision) {
  const std::size_t need = digits_to_cover(y.modulus(), precision);
  if (y.precision() < need) {
    throw PrecisionExhausted("(1+x)^y mod x^" + std::to_string(precision) + " needs " +
                             std::to_string(need) + " digits of y, have " +
                             std::to_string(y.precision()));
  }
}

// (1 + x)^d mod x^N for an ordinary nonnegative integer d.
TruncSeries binomial_poly(Prime p, std::uint64_t d, std::size_t precision) {
  std::vector<std::uint32_t> c(precision, 0);
  for (std::size_t n = 0; n < precision && n <= d; ++n) c[n] = lucas_binom(d, n, p).value;
  return TruncSeries(p, std::move(c));
}

}  // namespace

OneUnit pow_binomial(const PadicApprox& y, std::size_t precision) {
  require_cover(y, precision);
  std::vector<std::uint32_t> c(precision);
  for (std::size_t n = 0; n < precision; ++n) c[n] = binom(y, n).value;
  return OneUnit(TruncSeries(y.modulus(), std::move(c)));
}

OneUnit pow_product(const PadicApprox& y, std::size_t precision) {
  require_cover(y, precision);
  const Prime p = y.modulus();
  TruncSeries result = TruncSeries::one(p, precision);
  std::size_t stride = 1;  // p^i
  for (std::size_t i = 0; stride < precision; ++i) {
    std::vector<std::uint32_t> c(precision, 0);
    c[0] = 1;
    c[stride] = 1;
    const TruncSeries factor(p, std::move(c));
    for (std::uint32_t e = 0; e < y.digit(i); ++e) result = mul(result, factor);
    if (stride > precision / p.value()) break;
    stride *= p.value();
  }
  return OneUnit(std::move(result));
}

PadicApprox recover_exponent(const OneUnit& f) {
  if (f.precision() < 2) {
    throw PrecisionExhausted("exponent recovery needs precision at least 2");
  }
  const Prime p = f.modulus();
  TruncSeries g = f.series();
  std::vector<std::uint32_t> digits;
  for (std::size_t stage = 0; g.precision() >= 2; ++stage) {
    const std::uint32_t d = g[1];
    if (d != 0) g = mul(g, invert(binomial_poly(p, d, g.precision())));
    if (first_off_lattice(g)) throw NotAnEndomorphism(stage);
    g = pth_root(g);
    digits.push_back(d);
  }
  return PadicApprox(p, std::move(digits));
}

std::string describe(const EndoVerdict::Witness& w) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "none"; }
    std::string operator()(const EndoVerdict::BoxWitness& b) const {
      return "box(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
    }
    std::string operator()(const EndoVerdict::RecoveryStage& s) const {
      return "stage " + std::to_string(s.stage);
    }
    std::string operator()(const EndoVerdict::PowerMismatch& m) const {
      return "mismatch at coefficient " + std::to_string(m.index);
    }
  };
  return std::visit(Visitor{}, w);
}

EndoVerdict is_endomorphism_bivariate(const OneUnit& f) {
  const std::size_t n = f.precision();
  const BivTrunc lhs = outer_product(f.series(), f.series());
  const BivTrunc rhs = subst_group_law(f.series());
  EndoVerdict v;
  // Coefficients with i + j >= N involve a_n for n >= N, which f does not
  // determine; scan the rest by total degree.
  for (std::size_t total = 0; total < n; ++total) {
    for (std::size_t i = 0; i <= total; ++i) {
      const std::size_t j = total - i;
      if (lhs.at(i, j) != rhs.at(i, j)) {
        v.witness = EndoVerdict::BoxWitness{i, j};
        return v;
      }
    }
  }
  v.endomorphism = true;
  return v;
}

EndoVerdict is_endomorphism_via_theorem(const OneUnit& f) {
  EndoVerdict v;
  if (f.precision() < 2) {
    // Only the constant 1 is known; every such truncation is that of u^y.
    v.endomorphism = true;
    return v;
  }
  std::optional<PadicApprox> y;
  try {
    y = recover_exponent(f);
  } catch (const NotAnEndomorphism& e) {
    v.witness = EndoVerdict::RecoveryStage{e.stage()};
    return v;
  }

  const OneUnit expected = pow_binomial(*y, f.precision());
  for (std::size_t k = 0; k < f.precision(); ++k) {
    if (expected.series()[k] != f.series()[k]) {
      v.witness = EndoVerdict::PowerMismatch{k};
      return v;
    }
  }
  v.endomorphism = true;
  v.exponent = std::move(y);
  return v;
}

bool hasse_identity_check(const OneUnit& f, std::size_t m) {
  const TruncSeries derivative = hasse_derivative(f.series(), m);
  const std::size_t len = derivative.precision();
  const TruncSeries lhs = scale(truncate(f.series(), len), f.series().coeff(m));
  const TruncSeries rhs = mul(derivative, binomial_poly(f.modulus(), m, len));
  return lhs == rhs;
}

namespace {

PadicApprox exponent_or_throw(const OneUnit& f) {
  if (f.precision() < 2) throw PrecisionExhausted("automorphism test needs precision at least 2");
  EndoVerdict v = is_endomorphism_via_theorem(f);
  if (!v.endomorphism) {
    if (auto* s = std::get_if<EndoVerdict::RecoveryStage>(&v.witness)) throw NotAnEndomorphism(s->stage);
    throw NotAnEndomorphism(digits_to_cover(f.modulus(), f.precision()));
  }
  return *v.exponent;
}

}  // namespace

bool is_automorphism(const OneUnit& f) {
  exponent_or_throw(f);
  return f.series()[1] != 0;
}

OneUnit invert_automorphism(const OneUnit& f) {
  const PadicApprox y = exponent_or_throw(f);
  return pow_binomial(unit_inverse(y), f.precision());
}

std::optional<PeriodReport> detect_coeff_period(const TruncSeries& f, std::size_t max_preperiod,
                                                std::size_t max_period) {
  return detect_period(f.coeffs(), max_preperiod, max_period);
}

std::optional<PeriodReport> detect_coeff_period(const OneUnit& f, std::size_t max_preperiod,
                                                std::size_t max_period) {
  return detect_coeff_period(f.series(), max_preperiod, max_period);
}

std::optional<PeriodReport> detect_coeff_period(const OneUnit& f) {
  return detect_coeff_period(f, f.precision() / 8, f.precision() / 8);
}

TruncSeries expand(const RationalFn& r, std::size_t precision) {
  return mul(r.numerator.to_series(precision), invert(r.denominator.to_series(precision)));
}

RationalFn make_rational_fn(const Polynomial& num, const Polynomial& den) {
  if (den[0] == 0) throw NonUnitConstantTerm();
  const Polynomial g = gcd(num, den);
  Polynomial n = divmod(num, g).first;
  Polynomial d = divmod(den, g).first;
  const std::uint32_t c = detail::inv_mod(d[0], d.modulus().value());
  return RationalFn{scale(n, c), scale(d, c)};
}

RationalFn coeffs_to_rational(const TruncSeries& f, const PeriodReport& report) {
  const std::size_t w = report.preperiod, r = report.period;
  if (r == 0 || w + r > f.precision()) {
    throw InconsistentReport("period report does not fit the coefficient window");
  }
  auto c = f.coeffs();
  const Prime p = f.modulus();
  const Polynomial pre(p, std::vector<std::uint32_t>(c.begin(), c.begin() + w));
  const Polynomial block(p, std::vector<std::uint32_t>(c.begin() + w, c.begin() + w + r));
  const Polynomial den = Polynomial::one_minus_x_pow(p, r);
  RationalFn out = make_rational_fn(pre * den + shift(block, w), den);
  if (!(expand(out, f.precision()) == f)) {
    throw InconsistentReport("reconstructed rational function does not re-expand to the stream");
  }
  return out;
}

RationalFn coeffs_to_rational(const OneUnit& f, const PeriodReport& report) {
  return coeffs_to_rational(f.series(), report);
}

Cor13Report cor13_report(const PadicApprox& y, std::size_t precision, std::size_t max_preperiod,
                         std::size_t max_period) {
  Cor13Report out;
  const OneUnit f = pow_binomial(y, precision);
  out.integer = is_integer_window(y);
  out.period = detect_coeff_period(f, max_preperiod, max_period);
  if (out.period) out.rational = coeffs_to_rational(f, *out.period);
  out.consistent = out.integer.is_integer() == out.period.has_value() &&
                   out.period.has_value() == out.rational.has_value();
  return out;
}

Cor13Report cor13_report(const PadicApprox& y, std::size_t precision) {
  return cor13_report(y, precision, precision / 8, precision / 8);
}

std::vector<OneUnit> enumerate_endomorphisms(Prime p, std::size_t precision) {
  if (precision == 0) throw ShapeMismatch("precision must be at least 1");
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < precision; ++i) {
    total *= p.value();
    if (total > kEnumerationLimit) {
      throw TooLargeToEnumerate("p^(N-1) exceeds 2^20 candidates");
    }
  }

  auto scan = [p, precision](std::uint64_t begin, std::uint64_t end) {
    std::vector<OneUnit> found;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::vector<std::uint32_t> c(precision, 0);
      c[0] = 1;
      std::uint64_t rest = idx;
      for (std::size_t n = 1; n < precision; ++n) {
        c[n] = static_cast<std::uint32_t>(rest % p.value());
        rest /= p.value();
      }
      OneUnit f(TruncSeries(p, std::move(c)));
      if (is_endomorphism_bivariate(f).endomorphism) found.push_back(std::move(f));
    }
    return found;
  };

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::future<std::vector<OneUnit>>> jobs;
  for (std::uint64_t begin = 0; begin < total; begin += chunk) {
    jobs.push_back(std::async(std::launch::async, scan, begin, std::min(total, begin + chunk)));
  }
  std::vector<OneUnit> all;
  for (auto& job : jobs) {
    auto part = job.get();
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end(), [](const OneUnit& a, const OneUnit& b) {
    auto x = a.series().coeffs();
    auto y = b.series().coeffs();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return all;
}

}  // namespace oneunit

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>

#include "oneunit/oneunit.hpp"

namespace oneunit::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultGuard = 4;

// Usage-level failure detected after CLI11 parsing (bad values, mismatches).
struct UsageError : Error {
  using Error::Error;
};

json to_json(const TruncSeries& f) {
  return {{"p", f.modulus().value()}, {"N", f.precision()},
          {"coeffs", std::vector<std::uint32_t>(f.coeffs().begin(), f.coeffs().end())}};
}

json to_json(const PadicApprox& y) {
  return {{"p", y.modulus().value()}, {"K", y.precision()},
          {"digits", std::vector<std::uint32_t>(y.digits().begin(), y.digits().end())}};
}

json to_json(const std::optional<PeriodReport>& r) {
  if (!r) return nullptr;
  return {{"preperiod", r->preperiod}, {"period", r->period}};
}

json to_json(const std::optional<RationalFn>& r) {
  if (!r) return nullptr;
  return {{"numerator", r->numerator.coeffs()}, {"denominator", r->denominator.coeffs()}};
}

json to_json(const IntegerVerdict& v) {
  using K = IntegerVerdict::Kind;
  switch (v.kind) {
    case K::kNonNegative:
      return {{"kind", "nonneg"}, {"value", v.value}};
    case K::kNegative:
      return {{"kind", "negative"}, {"value", v.value}};
    case K::kNotInteger:
      break;
  }
  return {{"kind", "no"}, {"value", nullptr}};
}

json to_json(const EndoVerdict::Witness& w) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const EndoVerdict::BoxWitness& b) const {
      return {{"kind", "box"}, {"i", b.i}, {"j", b.j}};
    }
    json operator()(const EndoVerdict::RecoveryStage& s) const {
      return {{"kind", "stage"}, {"stage", s.stage}};
    }
    json operator()(const EndoVerdict::PowerMismatch& m) const {
      return {{"kind", "mismatch"}, {"index", m.index}};
    }
  };
  return std::visit(Visitor{}, w);
}

std::string period_text(const std::optional<PeriodReport>& r) {
  if (!r) return "none";
  return "preperiod=" + std::to_string(r->preperiod) + ";period=" + std::to_string(r->period);
}

std::string rational_text(const std::optional<RationalFn>& r) {
  if (!r) return "none";
  return "numerator=" + to_string(r->numerator) + ";denominator=" + to_string(r->denominator);
}

std::string integer_text(const IntegerVerdict& v) {
  using K = IntegerVerdict::Kind;
  switch (v.kind) {
    case K::kNonNegative:
      return "nonneg " + std::to_string(v.value);
    case K::kNegative:
      return "negative " + std::to_string(v.value);
    case K::kNotInteger:
      break;
  }
  return "no";
}

std::string digit_list(const PadicApprox& y) {
  std::string s;
  for (std::size_t i = 0; i < y.precision(); ++i) {
    if (i) s += ',';
    s += std::to_string(y.digit(i));
  }
  return s;
}

Prime make_prime(std::uint64_t p) {
  try {
    return Prime(p);
  } catch (const InvalidPrime& e) {
    throw UsageError(e.what());
  }
}

// Either a bare coefficient list or the full `p=..;N=..;coeffs=..` form.
TruncSeries read_series(Prime p, const std::string& text) {
  if (text.find("coeffs=") == std::string::npos) return parse_coeff_list(p, text);
  TruncSeries f = parse_series(text);
  if (!(f.modulus() == p)) throw UsageError("--p does not match the prime in --series");
  return f;
}

OneUnit read_one_unit(Prime p, const std::string& text) {
  TruncSeries f = read_series(p, text);
  if (f[0] != 1) throw UsageError("series must have constant term 1");
  return OneUnit(std::move(f));
}

// Integer, fraction `a/b`, or little-endian digit string `d0,d1,...`.
PadicApprox read_exponent(Prime p, const std::string& text, std::size_t precision) {
  if (text.find(',') != std::string::npos) return parse_digit_list(p, text);
  RationalNum r = parse_rational(text);
  if (r.denominator() % p.value() == 0) throw UsageError("denominator of --y is divisible by p");
  return from_fraction(p, r, precision);
}

struct Options {
  std::uint64_t p = 0;
  std::size_t precision = 0;
  std::size_t guard = kDefaultGuard;
  std::optional<std::size_t> digits_k;
  std::string y;
  std::string series;
  std::string method;
  std::size_t order = 0;
  std::optional<std::size_t> omega_max;
  std::optional<std::size_t> r_max;
  bool as_json = false;
};

void add_window(CLI::App* sub, Options& o) {
  sub->add_option("--omega-max", o.omega_max, "largest preperiod to consider (default: length/8)");
  sub->add_option("--r-max", o.r_max, "largest period to consider (default: length/8)");
}

std::size_t exponent_digits(Prime p, const Options& o) {
  return digits_to_cover(p, o.precision) + o.guard;
}

int do_pow(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const PadicApprox y = read_exponent(p, o.y, exponent_digits(p, o));
  const OneUnit f = o.method == "product" ? pow_product(y, o.precision) : pow_binomial(y, o.precision);
  if (o.as_json) {
    out << to_json(f.series()).dump() << '\n';
  } else {
    out << to_string(f.series()) << '\n';
  }
  return kOk;
}

int do_recover(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const PadicApprox y = recover_exponent(read_one_unit(p, o.series));
  out << (o.as_json ? to_json(y).dump() : to_string(y)) << '\n';
  return kOk;
}

int do_check_endo(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const OneUnit f = read_one_unit(p, o.series);
  const EndoVerdict v =
      o.method == "bivariate" ? is_endomorphism_bivariate(f) : is_endomorphism_via_theorem(f);
  if (o.as_json) {
    json j{{"endomorphism", v.endomorphism},
           {"y", v.exponent ? to_json(*v.exponent) : json(nullptr)},
           {"witness", to_json(v.witness)}};
    out << j.dump() << '\n';
  } else if (v.endomorphism) {
    out << "endomorphism";
    if (v.exponent) out << " y=" << digit_list(*v.exponent);
    out << '\n';
  } else {
    out << "not-endomorphism witness=" << describe(v.witness) << '\n';
  }
  return kOk;
}

int do_hasse(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const OneUnit f = read_one_unit(p, o.series);
  const TruncSeries d = hasse_derivative(f.series(), o.order);
  const bool identity = hasse_identity_check(f, o.order);
  if (o.as_json) {
    out << json{{"derivative", to_json(d)}, {"identity", identity}}.dump() << '\n';
  } else {
    out << to_string(d) << '\n' << "identity=" << (identity ? "true" : "false") << '\n';
  }
  return kOk;
}

int do_invert_auto(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const OneUnit g = invert_automorphism(read_one_unit(p, o.series));
  out << (o.as_json ? to_json(g.series()).dump() : to_string(g.series())) << '\n';
  return kOk;
}

int do_detect_period(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const TruncSeries f = read_series(p, o.series);
  const std::size_t n = f.precision();
  const auto period = detect_coeff_period(f, o.omega_max.value_or(n / 8), o.r_max.value_or(n / 8));
  std::optional<RationalFn> rational;
  if (period) rational = coeffs_to_rational(f, *period);
  if (o.as_json) {
    out << json{{"period", to_json(period)}, {"rational", to_json(rational)}}.dump() << '\n';
  } else {
    out << period_text(period) << '\n';
    if (rational) out << rational_text(rational) << '\n';
  }
  return kOk;
}

int do_digits(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const PadicApprox y = read_exponent(p, o.y, o.digits_k.value_or(64));
  const std::size_t k = y.precision();
  const IntegerVerdict integer = is_integer_window(y);
  const auto period = detect_digit_period(y, o.omega_max.value_or(k / 8), o.r_max.value_or(k / 8));
  std::optional<RationalNum> value;
  if (period) value = reconstruct_rational(y, *period);
  if (o.as_json) {
    out << json{{"y", to_json(y)},
                {"integer", to_json(integer)},
                {"period", to_json(period)},
                {"rational", value ? json(to_string(*value)) : json(nullptr)}}
               .dump()
        << '\n';
  } else {
    out << to_string(y) << '\n'
        << "integer: " << integer_text(integer) << '\n'
        << "period: " << period_text(period) << '\n'
        << "rational: " << (value ? to_string(*value) : "none") << '\n';
  }
  return kOk;
}

int do_cor13(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const PadicApprox y = read_exponent(p, o.y, o.digits_k.value_or(exponent_digits(p, o)));
  const std::size_t n = o.precision;
  const Cor13Report r = cor13_report(y, n, o.omega_max.value_or(n / 8), o.r_max.value_or(n / 8));
  if (o.as_json) {
    out << json{{"y", to_json(y)},
                {"N", n},
                {"integer", to_json(r.integer)},
                {"period", to_json(r.period)},
                {"rational", to_json(r.rational)},
                {"consistent", r.consistent}}
               .dump()
        << '\n';
  } else {
    out << "integer: " << integer_text(r.integer) << '\n'
        << "period: " << period_text(r.period) << '\n'
        << "rational: " << rational_text(r.rational) << '\n'
        << (r.consistent ? "CONSISTENT" : "FINDING") << '\n';
  }
  return kOk;
}

int do_enumerate(const Options& o, std::ostream& out) {
  const Prime p = make_prime(o.p);
  const auto all = enumerate_endomorphisms(p, o.precision);
  if (o.as_json) {
    json list = json::array();
    for (const auto& f : all) list.push_back(to_json(f.series())["coeffs"]);
    out << json{{"p", p.value()}, {"N", o.precision}, {"count", all.size()}, {"series", list}}.dump()
        << '\n';
  } else {
    out << all.size() << '\n';
    for (const auto& f : all) out << to_string(f.series()) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power maps (1+x)^y on the 1-units of F_p[[x]]: computation and recognition"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  auto verb = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--p", o.p, "prime modulus")->required();
    sub->add_flag("--json", o.as_json, "emit a single JSON object");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* pow_cmd = verb("pow", "coefficients of (1+x)^y mod x^N", do_pow);
  pow_cmd->add_option("--prec", o.precision, "truncation precision N")->required()->check(CLI::PositiveNumber);
  pow_cmd->add_option("--y", o.y, "exponent: integer, a/b, or digits d0,d1,...")->required();
  pow_cmd->add_option("--guard", o.guard, "extra p-adic digits for integer/fraction exponents");
  pow_cmd->add_option("--method", o.method, "binomial (default) or product")
      ->check(CLI::IsMember({"binomial", "product"}));

  auto* recover_cmd = verb("recover", "recover y from a truncated endomorphism", do_recover);
  recover_cmd->add_option("--series", o.series, "coefficients c0,c1,... or p=..;N=..;coeffs=..")->required();

  auto* check_cmd = verb("check-endo", "decide whether a series is a truncated endomorphism", do_check_endo);
  check_cmd->add_option("--series", o.series, "series to test")->required();
  check_cmd->add_option("--method", o.method, "theorem (default) or bivariate")
      ->check(CLI::IsMember({"theorem", "bivariate"}));

  auto* hasse_cmd = verb("hasse", "Hasse derivative and the identity a_m f = D^(m)f (1+x)^m", do_hasse);
  hasse_cmd->add_option("--series", o.series, "one-unit series")->required();
  hasse_cmd->add_option("--m", o.order, "derivative order")->required();

  auto* inv_cmd = verb("invert-auto", "compositional inverse of an automorphism", do_invert_auto);
  inv_cmd->add_option("--series", o.series, "one-unit series")->required();

  auto* period_cmd = verb("detect-period", "ultimately periodic coefficient stream", do_detect_period);
  period_cmd->add_option("--series", o.series, "series")->required();
  add_window(period_cmd, o);

  auto* digits_cmd = verb("digits", "p-adic digits, integrality and periodicity of y", do_digits);
  digits_cmd->add_option("--y", o.y, "integer, a/b, or digits d0,d1,...")->required();
  digits_cmd->add_option("--K", o.digits_k, "digit precision for integer/fraction input (default 64)");
  add_window(digits_cmd, o);

  auto* cor_cmd = verb("cor13", "integer / periodic / rational verdicts for (1+x)^y", do_cor13);
  cor_cmd->add_option("--y", o.y, "integer, a/b, or digits d0,d1,...")->required();
  cor_cmd->add_option("--prec", o.precision, "truncation precision N")->required()->check(CLI::PositiveNumber);
  cor_cmd->add_option("--K", o.digits_k, "digit precision (default: digits covering N plus guard)");
  cor_cmd->add_option("--guard", o.guard, "extra p-adic digits");
  add_window(cor_cmd, o);

  auto* enum_cmd = verb("enumerate", "brute-force all truncated endomorphisms", do_enumerate);
  enum_cmd->add_option("--prec", o.precision, "truncation precision N")->required()->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"oneunit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace oneunit::cli

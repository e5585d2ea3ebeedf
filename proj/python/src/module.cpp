#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oneunit/oneunit.hpp"

namespace py = pybind11;
using namespace oneunit;

namespace {

std::vector<std::uint32_t> to_vector(std::span<const std::uint32_t> s) { return {s.begin(), s.end()}; }

py::object exponent_or_none(const std::optional<PadicApprox>& y) {
  return y ? py::cast(*y) : py::none();
}

py::dict verdict_dict(const EndoVerdict& v) {
  py::dict d;
  d["endomorphism"] = v.endomorphism;
  d["exponent"] = exponent_or_none(v.exponent);
  d["witness"] = v.endomorphism ? py::none() : py::cast(describe(v.witness));
  return d;
}

py::object period_or_none(const std::optional<PeriodReport>& r) {
  if (!r) return py::none();
  return py::make_tuple(r->preperiod, r->period);
}

py::object rational_or_none(const std::optional<RationalFn>& r) {
  if (!r) return py::none();
  return py::make_tuple(r->numerator.coeffs(), r->denominator.coeffs());
}

const char* kind_name(IntegerVerdict::Kind k) {
  switch (k) {
    case IntegerVerdict::Kind::kNonNegative: return "nonneg";
    case IntegerVerdict::Kind::kNegative: return "negative";
    default: return "no";
  }
}

}  // namespace

PYBIND11_MODULE(_oneunit, m) {
  m.doc() = "Endomorphisms of the one-unit group over F_p[[x]]";

  auto base = py::register_exception<Error>(m, "OneunitError", PyExc_ValueError);
  py::register_exception<NotAnEndomorphism>(m, "NotAnEndomorphism", base.ptr());
  py::register_exception<NonUnitExponent>(m, "NonUnitExponent", base.ptr());
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base.ptr());
  py::register_exception<WindowTooSmall>(m, "WindowTooSmall", base.ptr());
  py::register_exception<TooLargeToEnumerate>(m, "TooLargeToEnumerate", base.ptr());

  py::class_<TruncSeries>(m, "Series")
      .def(py::init([](std::uint64_t p, std::vector<std::uint32_t> coeffs) {
             return TruncSeries(Prime(p), std::move(coeffs));
           }),
           py::arg("p"), py::arg("coeffs"))
      .def_property_readonly("p", [](const TruncSeries& f) { return f.modulus().value(); })
      .def_property_readonly("N", &TruncSeries::precision)
      .def_property_readonly("coeffs", [](const TruncSeries& f) { return to_vector(f.coeffs()); })
      .def("__add__", [](const TruncSeries& a, const TruncSeries& b) { return a + b; })
      .def("__sub__", [](const TruncSeries& a, const TruncSeries& b) { return a - b; })
      .def("__mul__", [](const TruncSeries& a, const TruncSeries& b) { return a * b; })
      .def("__eq__", [](const TruncSeries& a, const TruncSeries& b) { return a == b; })
      .def("__str__", [](const TruncSeries& f) { return to_string(f); })
      .def("__repr__", [](const TruncSeries& f) { return "Series('" + to_string(f) + "')"; })
      .def("invert", [](const TruncSeries& f) { return invert(f); })
      .def("hasse_derivative", [](const TruncSeries& f, std::size_t k) { return hasse_derivative(f, k); })
      .def("frobenius", [](const TruncSeries& f) { return frobenius(f); })
      .def("pth_root", [](const TruncSeries& f) { return pth_root(f); })
      .def("compose", [](const TruncSeries& f, const TruncSeries& h) { return compose(f, h); });

  py::class_<PadicApprox>(m, "Padic")
      .def(py::init([](std::uint64_t p, std::vector<std::uint32_t> digits) {
             return PadicApprox(Prime(p), std::move(digits));
           }),
           py::arg("p"), py::arg("digits"))
      .def_static(
          "from_int", [](std::uint64_t p, std::int64_t y, std::size_t k) { return from_integer(Prime(p), y, k); },
          py::arg("p"), py::arg("y"), py::arg("K"))
      .def_static(
          "from_fraction",
          [](std::uint64_t p, std::int64_t a, std::int64_t b, std::size_t k) {
            return from_fraction(Prime(p), RationalNum(a, b), k);
          },
          py::arg("p"), py::arg("num"), py::arg("den"), py::arg("K"))
      .def_property_readonly("p", [](const PadicApprox& y) { return y.modulus().value(); })
      .def_property_readonly("K", &PadicApprox::precision)
      .def_property_readonly("digits", [](const PadicApprox& y) { return to_vector(y.digits()); })
      .def("is_unit", &PadicApprox::is_unit)
      .def("__add__", [](const PadicApprox& a, const PadicApprox& b) { return a + b; })
      .def("__mul__", [](const PadicApprox& a, const PadicApprox& b) { return a * b; })
      .def("__neg__", [](const PadicApprox& a) { return -a; })
      .def("__eq__", [](const PadicApprox& a, const PadicApprox& b) { return a == b; })
      .def("__str__", [](const PadicApprox& y) { return to_string(y); })
      .def("__repr__", [](const PadicApprox& y) { return "Padic('" + to_string(y) + "')"; });

  m.def("parse_series", [](const std::string& s) { return parse_series(s); });
  m.def("parse_padic", [](const std::string& s) { return parse_padic(s); });
  m.def("lucas_binom", [](std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    return lucas_binom(n, k, Prime(p)).value;
  });

  m.def(
      "pow",
      [](const PadicApprox& y, std::size_t n, const std::string& method) {
        if (method == "product") return pow_product(y, n).series();
        if (method != "binomial") throw py::value_error("method must be 'binomial' or 'product'");
        return pow_binomial(y, n).series();
      },
      py::arg("y"), py::arg("N"), py::arg("method") = "binomial");
  m.def("recover_exponent", [](const TruncSeries& f) { return recover_exponent(OneUnit(f)); });
  m.def(
      "check_endomorphism",
      [](const TruncSeries& f, const std::string& method) {
        if (method == "bivariate") return verdict_dict(is_endomorphism_bivariate(OneUnit(f)));
        if (method != "theorem") throw py::value_error("method must be 'theorem' or 'bivariate'");
        return verdict_dict(is_endomorphism_via_theorem(OneUnit(f)));
      },
      py::arg("f"), py::arg("method") = "theorem");
  m.def("hasse_identity_check", [](const TruncSeries& f, std::size_t k) { return hasse_identity_check(OneUnit(f), k); });
  m.def("is_automorphism", [](const TruncSeries& f) { return is_automorphism(OneUnit(f)); });
  m.def("invert_automorphism", [](const TruncSeries& f) { return invert_automorphism(OneUnit(f)).series(); });
  m.def(
      "detect_period",
      [](const std::vector<std::uint32_t>& s, std::size_t w, std::size_t r) {
        return period_or_none(detect_period(s, w, r));
      },
      py::arg("values"), py::arg("omega_max"), py::arg("r_max"));
  m.def(
      "coeffs_to_rational",
      [](const TruncSeries& f, std::size_t w, std::size_t r) {
        const RationalFn q = coeffs_to_rational(f, PeriodReport{w, r});
        return py::make_tuple(q.numerator.coeffs(), q.denominator.coeffs());
      },
      py::arg("f"), py::arg("preperiod"), py::arg("period"));
  m.def(
      "reconstruct_rational",
      [](const PadicApprox& y, std::size_t w, std::size_t r) {
        const RationalNum q = reconstruct_rational(y, PeriodReport{w, r});
        return py::make_tuple(q.numerator(), q.denominator());
      },
      py::arg("y"), py::arg("preperiod"), py::arg("period"));
  m.def("is_integer_window", [](const PadicApprox& y) {
    const IntegerVerdict v = is_integer_window(y);
    return py::make_tuple(kind_name(v.kind), v.value);
  });
  m.def(
      "cor13_report",
      [](const PadicApprox& y, std::size_t n, std::size_t w, std::size_t r) {
        const Cor13Report c = cor13_report(y, n, w, r);
        py::dict d;
        d["integer"] = py::make_tuple(kind_name(c.integer.kind), c.integer.value);
        d["period"] = period_or_none(c.period);
        d["rational"] = rational_or_none(c.rational);
        d["consistent"] = c.consistent;
        return d;
      },
      py::arg("y"), py::arg("N"), py::arg("omega_max"), py::arg("r_max"));
  m.def("enumerate_endomorphisms", [](std::uint64_t p, std::size_t n) {
    std::vector<TruncSeries> out;
    for (const auto& f : enumerate_endomorphisms(Prime(p), n)) out.push_back(f.series());
    return out;
  });
}

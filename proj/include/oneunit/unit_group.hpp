#ifndef ONEUNIT_UNIT_GROUP_HPP
#define ONEUNIT_UNIT_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oneunit/padic.hpp"
#include "oneunit/period.hpp"
#include "oneunit/polynomial.hpp"
#include "oneunit/series.hpp"

namespace oneunit {

/// A series with constant term 1: an element 1 + x of the 1-units, or the
/// truncated expansion f(1 + x) of a candidate endomorphism.
class OneUnit {
 public:
  /// Throws NotAOneUnit unless series[0] == 1.
  explicit OneUnit(TruncSeries series);

  const TruncSeries& series() const noexcept { return series_; }
  Prime modulus() const noexcept { return series_.modulus(); }
  std::size_t precision() const noexcept { return series_.precision(); }

  friend bool operator==(const OneUnit&, const OneUnit&) = default;

 private:
  TruncSeries series_;
};

/// (1 + x)^y mod x^N with coefficients C(y, n) mod p.
/// Throws PrecisionExhausted unless p^K >= N.
OneUnit pow_binomial(const PadicApprox& y, std::size_t precision);

/// (1 + x)^y mod x^N as the product over digits of (1 + x^(p^i))^(y_i).
/// Independent of pow_binomial; the two must agree.
OneUnit pow_product(const PadicApprox& y, std::size_t precision);

/// Reads the exponent y of a truncated endomorphism f = (1 + x)^y one
/// base-p digit at a time: the digit is the linear coefficient, dividing by
/// (1 + x)^digit leaves a series in x^p, and its p-th root carries the next
/// digit. A series known mod x^M has a root known mod x^(ceil(M/p)), so
/// exactly k = min{k : p^k >= N} digits come out.
///
/// Throws NotAnEndomorphism(stage) when the quotient at `stage` has support
/// off the multiples of p, and PrecisionExhausted for N < 2.
PadicApprox recover_exponent(const OneUnit& f);

/// Outcome of a truncated-endomorphism test.
struct EndoVerdict {
  /// Coefficient (i, j) of x^i y^j where f(x)f(y) and f(x + y + xy) differ.
  struct BoxWitness {
    std::size_t i, j;
    friend bool operator==(const BoxWitness&, const BoxWitness&) = default;
  };
  /// Digit stage at which exponent recovery failed.
  struct RecoveryStage {
    std::size_t stage;
    friend bool operator==(const RecoveryStage&, const RecoveryStage&) = default;
  };
  /// First coefficient where f differs from (1 + x)^y for the recovered y.
  struct PowerMismatch {
    std::size_t index;
    friend bool operator==(const PowerMismatch&, const PowerMismatch&) = default;
  };
  using Witness = std::variant<std::monostate, BoxWitness, RecoveryStage, PowerMismatch>;

  bool endomorphism = false;
  /// Set by the theorem route when `endomorphism` holds.
  std::optional<PadicApprox> exponent;
  /// Set exactly when `endomorphism` is false.
  Witness witness;
};

std::string describe(const EndoVerdict::Witness& w);

/// Checks f(x)f(y) = f(x + y + xy) coefficient-wise on every x^i y^j with
/// i + j < N, the part of the identity that the first N coefficients of f
/// determine.
EndoVerdict is_endomorphism_bivariate(const OneUnit& f);

/// Recovers y, then checks f == pow_binomial(y, N).
EndoVerdict is_endomorphism_via_theorem(const OneUnit& f);

/// a_m f == D^(m) f * (1 + x)^m mod x^(N - m).
/// Throws PrecisionExhausted if m >= N.
bool hasse_identity_check(const OneUnit& f, std::size_t m);

/// True iff the linear coefficient of the truncated endomorphism f is
/// nonzero. Throws NotAnEndomorphism if f fails the theorem test.
bool is_automorphism(const OneUnit& f);

/// Compositional inverse (1 + x)^(1/y) of f = (1 + x)^y for a unit y.
/// Throws NonUnitExponent (or NotAnEndomorphism) otherwise.
OneUnit invert_automorphism(const OneUnit& f);

/// Period detection over the coefficient stream. Defaults are N/8.
std::optional<PeriodReport> detect_coeff_period(const TruncSeries& f, std::size_t max_preperiod,
                                                std::size_t max_period);
std::optional<PeriodReport> detect_coeff_period(const OneUnit& f, std::size_t max_preperiod,
                                                std::size_t max_period);
std::optional<PeriodReport> detect_coeff_period(const OneUnit& f);

/// numerator / denominator over F_p, coprime, denominator(0) = 1.
struct RationalFn {
  Polynomial numerator;
  Polynomial denominator;

  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

/// Power-series expansion numerator * denominator^-1 mod x^N.
TruncSeries expand(const RationalFn& r, std::size_t precision);

/// Normalizes num/den: cancels the gcd and scales so den(0) = 1.
/// Throws NonUnitConstantTerm if den(0) == 0.
RationalFn make_rational_fn(const Polynomial& num, const Polynomial& den);

/// A(x) + x^w P(x) / (1 - x^r), reduced, where A holds the preperiod and P
/// one period block. Throws InconsistentReport unless the re-expansion
/// reproduces f.
RationalFn coeffs_to_rational(const TruncSeries& f, const PeriodReport& report);
RationalFn coeffs_to_rational(const OneUnit& f, const PeriodReport& report);

/// The three conditions "rational", "ultimately periodic" and "integer"
/// evaluated on (1 + x)^y at one finite window.
struct Cor13Report {
  IntegerVerdict integer;
  std::optional<PeriodReport> period;
  std::optional<RationalFn> rational;
  /// All three positive or all three negative. A false value is a finding
  /// about the window, not an error.
  bool consistent = false;
};

Cor13Report cor13_report(const PadicApprox& y, std::size_t precision, std::size_t max_preperiod,
                         std::size_t max_period);
Cor13Report cor13_report(const PadicApprox& y, std::size_t precision);

/// Largest p^(N-1) that enumerate_endomorphisms will scan.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 20;

/// Brute force over all p^(N-1) one-units of precision N, keeping those
/// passing is_endomorphism_bivariate; sorted lexicographically by
/// coefficients. Throws TooLargeToEnumerate above kEnumerationLimit.
std::vector<OneUnit> enumerate_endomorphisms(Prime p, std::size_t precision);

}  // namespace oneunit

#endif  // ONEUNIT_UNIT_GROUP_HPP

#ifndef ONEUNIT_ERRORS_HPP
#define ONEUNIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oneunit {

/// Base of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("operands have different moduli") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in F_p") {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
 public:
  NonUnitConstantTerm() : Error("series has a non-invertible constant term") {}
};

class NotAOneUnit : public Error {
 public:
  NotAOneUnit() : Error("series does not have constant term 1") {}
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class NotAPthPower : public Error {
 public:
  explicit NotAPthPower(std::size_t index)
      : Error("not a p-th power (nonzero coefficient at index " +
              std::to_string(index) + ")"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NonzeroConstantInner : public Error {
 public:
  NonzeroConstantInner()
      : Error("inner series of a composition must have zero constant term") {}
};

class DenominatorNotCoprime : public Error {
 public:
  DenominatorNotCoprime() : Error("denominator is divisible by p") {}
};

class NonUnitExponent : public Error {
 public:
  NonUnitExponent() : Error("exponent is not a p-adic unit") {}
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class InconsistentReport : public Error {
 public:
  using Error::Error;
};

class TooLargeToEnumerate : public Error {
 public:
  using Error::Error;
};

/// Raised by exponent recovery when the series is not the truncation of any
/// endomorphism; `stage` is the digit index at which the support test failed.
class NotAnEndomorphism : public Error {
 public:
  explicit NotAnEndomorphism(std::size_t stage)
      : Error("not an endomorphism (stage " + std::to_string(stage) + ")"),
        stage_(stage) {}
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

/// Malformed textual input (series, p-adic or fraction syntax).
class ParseError : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace oneunit

#endif  // ONEUNIT_ERRORS_HPP

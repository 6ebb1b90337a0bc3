#pragma once

#include <stdexcept>
#include <string>

namespace pf {

enum class Errc {
  NonPrimeCharacteristic,
  ReduciblePolynomial,
  ZeroInverse,
  FieldMismatch,
  NoCoordinates,
  AxiomViolation,
  RaggedLine,
  NotAnArc,
  InvalidPolarity,
  NotSubsetOfOval,
  BadM,
  BudgetExceeded,
  NotMersenneSetting,
  NotOddSquare,
  TooLarge,
  HashMismatch,
  CountMismatch,
  C4Found,
  BadFormat,
  IoFailure,
};

const char* errc_name(Errc c);

/// Library-wide exception. The code tells callers (and the CLI exit-code
/// mapping) what went wrong without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pf

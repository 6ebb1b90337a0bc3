#include "pf/errors.hpp"

namespace pf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NoCoordinates: return "NoCoordinates";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::RaggedLine: return "RaggedLine";
    case Errc::NotAnArc: return "NotAnArc";
    case Errc::InvalidPolarity: return "InvalidPolarity";
    case Errc::NotSubsetOfOval: return "NotSubsetOfOval";
    case Errc::BadM: return "BadM";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotMersenneSetting: return "NotMersenneSetting";
    case Errc::NotOddSquare: return "NotOddSquare";
    case Errc::TooLarge: return "TooLarge";
    case Errc::HashMismatch: return "HashMismatch";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::C4Found: return "C4Found";
    case Errc::BadFormat: return "BadFormat";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace pf

#include "netfield/error.hpp"

namespace netfield {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::DlogOfZero: return "DlogOfZero";
    case Errc::CombinatorialBudgetExceeded: return "CombinatorialBudgetExceeded";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::InvalidParam: return "InvalidParam";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::MissingCoefficient: return "MissingCoefficient";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace netfield

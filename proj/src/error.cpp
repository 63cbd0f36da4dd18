#include "reptqft/error.hpp"

namespace reptqft {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonExactDivision: return "NonExactDivision";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::UnknownStratum: return "UnknownStratum";
    case ErrorKind::UnknownPunctureLabel: return "UnknownPunctureLabel";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotConjugationClosed: return "NotConjugationClosed";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace reptqft

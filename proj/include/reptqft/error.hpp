#pragma once

#include <stdexcept>
#include <string>

namespace reptqft {

enum class ErrorKind {
  Parse,
  Io,
  InvalidArgument,
  NonExactDivision,
  ZeroBase,
  UnknownStratum,
  UnknownPunctureLabel,
  InvalidDatum,
  NotAGroup,
  GroupTooLarge,
  NotConjugationClosed,
  BudgetExceeded,
};

const char* to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind; the C API maps kinds to
/// status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace reptqft

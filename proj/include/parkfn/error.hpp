#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parkfn {

enum class ErrorKind {
  InvalidArgument,
  NotIncreasing,
  OutOfRange,
  Overflow,
  DimensionMismatch,
  LengthMismatch,
  NotParkingFunction,
  NotPrime,
  NoZeroEntry,
  InconsistentDecomposition,
  NonIntegralResult,
  ConventionUndefined,
  ZeroToNegative,
  DegenerateGrid,
  NonMonotoneWeights,
  SearchSpaceTooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace parkfn

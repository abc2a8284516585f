#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drg {

enum class ErrorCode {
  SelfLoop,
  NotConnected,
  MalformedLine,
  InvalidVertex,
  TooSmall,
  OddPairCount,
  NonIntegralDegree,
  NonIntegralCount,
  InvalidSequence,
  Overflow,
  ToleranceTooSmall,
  NotAnEigenvalue,
  WeightMismatch,
  MultiplicityNotIntegral,
  KernelMismatch,
  QuadratureNotConverged,
  NoConvergence,
  BasisMismatch,
  TooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `detail` carries the offending index
// where one exists (vertex, line number, k, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t detail = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::size_t detail_;
};

}  // namespace drg

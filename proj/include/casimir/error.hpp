#pragma once

#include <stdexcept>
#include <utility>
#include <string>
#include <string_view>

namespace casimir {

enum class ErrorKind {
  InvalidCavity,
  OutOfRange,
  DegenerateFan,
  NumericDomain,
  NumericDegeneracy,
  NonPositiveGap,
  NonPositiveRay,
  NotConverged,
  NonFiniteSample,
  NoInteriorMaximum,
  InvalidArgument,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `field()` names the offending input
/// (cavity field, flag, sample coordinate) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string field, const std::string& message)
      : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }

  /// Numerical failures map to CLI exit code 1, input problems to 2.
  bool is_usage() const noexcept {
    return kind_ == ErrorKind::Usage || kind_ == ErrorKind::InvalidCavity ||
           kind_ == ErrorKind::InvalidArgument;
  }

 private:
  ErrorKind kind_;
  std::string field_;
};

}  // namespace casimir

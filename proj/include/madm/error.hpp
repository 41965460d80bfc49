#ifndef MADM_ERROR_HPP
#define MADM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace madm {

enum class ErrorKind {
  NonPositiveValue,
  NonPositiveWeight,
  WeightSumViolation,
  DimensionMismatch,
  TooFewAlternatives,
  DuplicateName,
  NonFiniteScore,
  DegenerateColumn,
  IdenticalIdeals,
  InvalidParameter,
  DegenerateWeights,
  LengthMismatch,
  ZeroVariance,
  IndexMismatch,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine carries a kind so callers (tests, the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace madm

#endif  // MADM_ERROR_HPP

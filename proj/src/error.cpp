#include "madm/error.hpp"

namespace madm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::WeightSumViolation: return "WeightSumViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TooFewAlternatives: return "TooFewAlternatives";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NonFiniteScore: return "NonFiniteScore";
    case ErrorKind::DegenerateColumn: return "DegenerateColumn";
    case ErrorKind::IdenticalIdeals: return "IdenticalIdeals";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace madm

#ifndef MADM_NORMALIZATION_HPP
#define MADM_NORMALIZATION_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "madm/core_model.hpp"
#include "madm/matrix.hpp"

namespace madm {

enum class NormalizationScheme { Vector, Logarithmic, MinMax, Sum };

std::string_view to_string(NormalizationScheme scheme) noexcept;
/// Accepts "vector", "log"/"logarithmic", "minmax", "sum".
std::optional<NormalizationScheme> parse_scheme(std::string_view text) noexcept;

struct NormalizedMatrix {
  Matrix values;
  NormalizationScheme scheme = NormalizationScheme::Vector;
  std::vector<Direction> directions;
  /// true when a larger normalized value is better in that column. MinMax
  /// folds the direction into the values, so every column is oriented.
  std::vector<bool> higher_is_better;
  std::vector<std::string> warnings;
};

/// f = ln(x) / sum(ln(x)). The product in the denominator is taken in log
/// space. Throws NonPositiveValue, DegenerateColumn (|sum ln x| <= 1e-12).
std::vector<double> log_normalize_column(std::span<const double> column);

/// r = x / sqrt(sum x^2).
std::vector<double> vector_normalize_column(std::span<const double> column);

/// Benefit: (x - min) / (max - min); Cost: (max - x) / (max - min).
/// Throws DegenerateColumn when max == min.
std::vector<double> minmax_normalize_column(std::span<const double> column, Direction direction);

/// r = x / sum x.
std::vector<double> sum_normalize_column(std::span<const double> column);

/// Column-wise normalization of a problem. Vector, Logarithmic and Sum use the
/// benefit form for every column; cost handling happens at ideal selection.
/// Column errors are rethrown with the criterion name attached.
NormalizedMatrix normalize(const DecisionProblem& problem, NormalizationScheme scheme);

}  // namespace madm

#endif  // MADM_NORMALIZATION_HPP

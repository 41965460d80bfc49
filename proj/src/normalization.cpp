#include "madm/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "madm/error.hpp"

namespace madm {

namespace {

constexpr double kLogDenominatorFloor = 1e-12;

void require_positive(std::span<const double> column) {
  for (double x : column)
    if (!std::isfinite(x) || x <= 0.0)
      throw Error(ErrorKind::NonPositiveValue, "column entry " + std::to_string(x));
}

}  // namespace

std::string_view to_string(NormalizationScheme scheme) noexcept {
  switch (scheme) {
    case NormalizationScheme::Vector: return "vector";
    case NormalizationScheme::Logarithmic: return "log";
    case NormalizationScheme::MinMax: return "minmax";
    case NormalizationScheme::Sum: return "sum";
  }
  return "unknown";
}

std::optional<NormalizationScheme> parse_scheme(std::string_view text) noexcept {
  if (text == "vector") return NormalizationScheme::Vector;
  if (text == "log" || text == "logarithmic") return NormalizationScheme::Logarithmic;
  if (text == "minmax") return NormalizationScheme::MinMax;
  if (text == "sum") return NormalizationScheme::Sum;
  return std::nullopt;
}

std::vector<double> log_normalize_column(std::span<const double> column) {
  require_positive(column);
  std::vector<double> logs(column.size());
  std::transform(column.begin(), column.end(), logs.begin(), [](double x) { return std::log(x); });
  const double log_product = std::accumulate(logs.begin(), logs.end(), 0.0);
  if (std::abs(log_product) <= kLogDenominatorFloor)
    throw Error(ErrorKind::DegenerateColumn, "ln of the column product is zero");
  for (double& v : logs) v /= log_product;
  return logs;
}

std::vector<double> vector_normalize_column(std::span<const double> column) {
  require_positive(column);
  double sum_sq = 0.0;
  for (double x : column) sum_sq += x * x;
  const double norm = std::sqrt(sum_sq);
  std::vector<double> out(column.size());
  std::transform(column.begin(), column.end(), out.begin(), [&](double x) { return x / norm; });
  return out;
}

std::vector<double> minmax_normalize_column(std::span<const double> column, Direction direction) {
  require_positive(column);
  if (column.size() < 2)
    throw Error(ErrorKind::DimensionMismatch, "min-max normalization needs at least 2 entries");
  const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) throw Error(ErrorKind::DegenerateColumn, "column is constant");
  const double range = hi - lo;
  std::vector<double> out(column.size());
  std::transform(column.begin(), column.end(), out.begin(), [&](double x) {
    return direction == Direction::Benefit ? (x - lo) / range : (hi - x) / range;
  });
  return out;
}

std::vector<double> sum_normalize_column(std::span<const double> column) {
  require_positive(column);
  const double total = std::accumulate(column.begin(), column.end(), 0.0);
  std::vector<double> out(column.size());
  std::transform(column.begin(), column.end(), out.begin(), [&](double x) { return x / total; });
  return out;
}

NormalizedMatrix normalize(const DecisionProblem& problem, NormalizationScheme scheme) {
  const std::size_t n = problem.criterion_count();
  if (problem.values.cols() != n || problem.values.rows() != problem.alternative_count())
    throw Error(ErrorKind::DimensionMismatch, "value matrix does not match problem labels");

  NormalizedMatrix out;
  out.values = Matrix(problem.values.rows(), n);
  out.scheme = scheme;
  out.directions = problem.directions();
  out.higher_is_better.resize(n);

  for (std::size_t j = 0; j < n; ++j) {
    const auto& crit = problem.criteria[j];
    const auto column = problem.values.column(j);
    std::vector<double> normalized;
    try {
      switch (scheme) {
        case NormalizationScheme::Vector: normalized = vector_normalize_column(column); break;
        case NormalizationScheme::Logarithmic: normalized = log_normalize_column(column); break;
        case NormalizationScheme::MinMax:
          normalized = minmax_normalize_column(column, crit.direction);
          break;
        case NormalizationScheme::Sum: normalized = sum_normalize_column(column); break;
      }
    } catch (const Error& e) {
      throw Error(e.kind(), "criterion '" + crit.name + "': " + e.what());
    }
    out.values.set_column(j, normalized);
    out.higher_is_better[j] =
        scheme == NormalizationScheme::MinMax || crit.direction == Direction::Benefit;

    if (scheme == NormalizationScheme::Logarithmic &&
        std::any_of(column.begin(), column.end(), [](double x) { return x < 1.0; }))
      out.warnings.push_back("criterion '" + crit.name +
                             "': values below 1 give negative log-normalized entries");
  }
  return out;
}

}  // namespace madm

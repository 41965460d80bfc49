#ifndef MADM_CORE_MODEL_HPP
#define MADM_CORE_MODEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "madm/matrix.hpp"

namespace madm {

enum class Direction { Benefit, Cost };

struct Criterion {
  std::string name;
  Direction direction = Direction::Benefit;
  double weight = 0.0;

  bool operator==(const Criterion&) const = default;
};

/// Alternatives x criteria performance table. Rows of `values` follow
/// `alternatives`, columns follow `criteria`.
struct DecisionProblem {
  std::string name;
  std::vector<Criterion> criteria;
  std::vector<std::string> alternatives;
  Matrix values;

  [[nodiscard]] std::size_t alternative_count() const noexcept { return alternatives.size(); }
  [[nodiscard]] std::size_t criterion_count() const noexcept { return criteria.size(); }
  [[nodiscard]] std::vector<double> weights() const;
  [[nodiscard]] std::vector<Direction> directions() const;

  bool operator==(const DecisionProblem&) const = default;
};

inline constexpr double kWeightSumTolerance = 1e-6;
inline constexpr double kTieTolerance = 1e-9;

/// Builds a problem from row vectors. Ragged rows raise DimensionMismatch.
DecisionProblem make_problem(std::string name, std::vector<Criterion> criteria,
                             std::vector<std::string> alternatives,
                             const std::vector<std::vector<double>>& rows);

/// Checks every DecisionProblem invariant and returns the problem unchanged.
/// Throws madm::Error (NonPositiveValue, NonPositiveWeight, WeightSumViolation,
/// DimensionMismatch, TooFewAlternatives, DuplicateName).
DecisionProblem validate_problem(const DecisionProblem& problem);

/// Same problem with replaced weights. Zero weights are allowed here (weight
/// scenarios reach the interval bounds); negatives and bad sums are not.
DecisionProblem with_weights(const DecisionProblem& problem, std::span<const double> weights);

/// Structural checks shared by the ranking methods: shape, positivity,
/// m >= 2, and weights >= 0 summing to 1.
void require_rankable(const DecisionProblem& problem);

/// Sub-problem keeping only the listed alternative rows (in the given order).
DecisionProblem select_alternatives(const DecisionProblem& problem,
                                    std::span<const std::size_t> keep);

enum class Better { Higher, Lower };

struct RankVector {
  std::vector<int> ranks;                       // 1 = best, competition ranking
  std::vector<double> scores;
  Better better = Better::Higher;
  std::vector<std::vector<std::size_t>> ties;   // groups of size >= 2

  [[nodiscard]] std::size_t size() const noexcept { return ranks.size(); }
  /// Indices ordered best first; ties keep index order.
  [[nodiscard]] std::vector<std::size_t> order() const;
  /// Index of the (first) rank-1 alternative.
  [[nodiscard]] std::size_t best() const;

  bool operator==(const RankVector&) const = default;
};

/// Competition ranking of `scores`; scores within kTieTolerance of a group's
/// leading score share its rank. Throws NonFiniteScore.
RankVector ranks_from_scores(std::span<const double> scores, Better better);

}  // namespace madm

#endif  // MADM_CORE_MODEL_HPP

#include "madm/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "madm/error.hpp"

namespace madm {

namespace {

void check_shape(const DecisionProblem& p) {
  if (p.criteria.empty())
    throw Error(ErrorKind::DimensionMismatch, "problem has no criteria");
  if (p.values.rows() != p.alternatives.size() || p.values.cols() != p.criteria.size())
    throw Error(ErrorKind::DimensionMismatch,
                "value matrix is " + std::to_string(p.values.rows()) + "x" +
                    std::to_string(p.values.cols()) + ", expected " +
                    std::to_string(p.alternatives.size()) + "x" +
                    std::to_string(p.criteria.size()));
  if (p.alternatives.size() < 2)
    throw Error(ErrorKind::TooFewAlternatives,
                "need at least 2 alternatives, got " + std::to_string(p.alternatives.size()));
}

void check_values(const DecisionProblem& p) {
  for (std::size_t i = 0; i < p.values.rows(); ++i)
    for (std::size_t j = 0; j < p.values.cols(); ++j) {
      const double x = p.values(i, j);
      if (!std::isfinite(x) || x <= 0.0)
        throw Error(ErrorKind::NonPositiveValue, "x[" + p.alternatives[i] + "][" +
                                                     p.criteria[j].name +
                                                     "] = " + std::to_string(x));
    }
}

void check_weight_sum(std::span<const double> w) {
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(std::abs(sum - 1.0) <= kWeightSumTolerance))
    throw Error(ErrorKind::WeightSumViolation, "weights sum to " + std::to_string(sum));
}

}  // namespace

std::vector<double> DecisionProblem::weights() const {
  std::vector<double> w;
  w.reserve(criteria.size());
  for (const auto& c : criteria) w.push_back(c.weight);
  return w;
}

std::vector<Direction> DecisionProblem::directions() const {
  std::vector<Direction> d;
  d.reserve(criteria.size());
  for (const auto& c : criteria) d.push_back(c.direction);
  return d;
}

DecisionProblem make_problem(std::string name, std::vector<Criterion> criteria,
                             std::vector<std::string> alternatives,
                             const std::vector<std::vector<double>>& rows) {
  if (rows.size() != alternatives.size())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(rows.size()) + " value rows for " +
                    std::to_string(alternatives.size()) + " alternatives");
  Matrix values(rows.size(), criteria.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != criteria.size())
      throw Error(ErrorKind::DimensionMismatch,
                  "row '" + alternatives[i] + "' has " + std::to_string(rows[i].size()) +
                      " values for " + std::to_string(criteria.size()) + " criteria");
    for (std::size_t j = 0; j < criteria.size(); ++j) values(i, j) = rows[i][j];
  }
  return {std::move(name), std::move(criteria), std::move(alternatives), std::move(values)};
}

DecisionProblem validate_problem(const DecisionProblem& problem) {
  check_shape(problem);
  check_values(problem);

  std::set<std::string> seen;
  for (const auto& c : problem.criteria) {
    if (!seen.insert(c.name).second)
      throw Error(ErrorKind::DuplicateName, "criterion '" + c.name + "' appears twice");
    if (!std::isfinite(c.weight) || c.weight <= 0.0)
      throw Error(ErrorKind::NonPositiveWeight,
                  "criterion '" + c.name + "' has weight " + std::to_string(c.weight));
  }
  seen.clear();
  for (const auto& a : problem.alternatives)
    if (!seen.insert(a).second)
      throw Error(ErrorKind::DuplicateName, "alternative '" + a + "' appears twice");

  check_weight_sum(problem.weights());
  return problem;
}

DecisionProblem with_weights(const DecisionProblem& problem, std::span<const double> weights) {
  if (weights.size() != problem.criteria.size())
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(weights.size()) + " weights for " +
                    std::to_string(problem.criteria.size()) + " criteria");
  for (double w : weights)
    if (!std::isfinite(w) || w < 0.0)
      throw Error(ErrorKind::NonPositiveWeight, "negative weight " + std::to_string(w));
  check_weight_sum(weights);
  DecisionProblem out = problem;
  for (std::size_t j = 0; j < weights.size(); ++j) out.criteria[j].weight = weights[j];
  return out;
}

void require_rankable(const DecisionProblem& problem) {
  check_shape(problem);
  check_values(problem);
  const auto w = problem.weights();
  for (double x : w)
    if (!std::isfinite(x) || x < 0.0)
      throw Error(ErrorKind::NonPositiveWeight, "negative weight " + std::to_string(x));
  check_weight_sum(w);
}

DecisionProblem select_alternatives(const DecisionProblem& problem,
                                    std::span<const std::size_t> keep) {
  DecisionProblem out;
  out.name = problem.name;
  out.criteria = problem.criteria;
  for (std::size_t i : keep) {
    if (i >= problem.alternatives.size())
      throw Error(ErrorKind::IndexMismatch, "alternative index " + std::to_string(i));
    out.alternatives.push_back(problem.alternatives[i]);
  }
  out.values = problem.values.select_rows(keep);
  return out;
}

std::vector<std::size_t> RankVector::order() const {
  std::vector<std::size_t> idx(ranks.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
  return idx;
}

std::size_t RankVector::best() const {
  const auto it = std::min_element(ranks.begin(), ranks.end());
  return static_cast<std::size_t>(std::distance(ranks.begin(), it));
}

RankVector ranks_from_scores(std::span<const double> scores, Better better) {
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (!std::isfinite(scores[i]))
      throw Error(ErrorKind::NonFiniteScore, "score #" + std::to_string(i) + " is not finite");

  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return better == Better::Higher ? scores[a] > scores[b] : scores[a] < scores[b];
  });

  RankVector out;
  out.scores.assign(scores.begin(), scores.end());
  out.better = better;
  out.ranks.assign(scores.size(), 0);

  std::size_t pos = 0;
  while (pos < idx.size()) {
    // A group is anchored at its best score so near-equal chains don't merge.
    const double lead = scores[idx[pos]];
    std::size_t end = pos + 1;
    while (end < idx.size() && std::abs(scores[idx[end]] - lead) <= kTieTolerance) ++end;
    std::vector<std::size_t> group(idx.begin() + static_cast<std::ptrdiff_t>(pos),
                                   idx.begin() + static_cast<std::ptrdiff_t>(end));
    for (std::size_t i : group) out.ranks[i] = static_cast<int>(pos + 1);
    if (group.size() > 1) {
      std::sort(group.begin(), group.end());
      out.ties.push_back(std::move(group));
    }
    pos = end;
  }
  return out;
}

}  // namespace madm

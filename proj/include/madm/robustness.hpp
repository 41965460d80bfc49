#ifndef MADM_ROBUSTNESS_HPP
#define MADM_ROBUSTNESS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "madm/core_model.hpp"
#include "madm/ranking.hpp"

namespace madm {

// ---------------------------------------------------------------------------
// Weight sensitivity
// ---------------------------------------------------------------------------

/// Compensation coefficients for shifting the most important weight by dx:
/// alpha_s = 1, alpha_c = w_c / (1 - w_s), dx in [-w_s, 1 - w_s].
struct ElasticityVector {
  std::size_t most_important = 0;
  std::vector<double> alpha;
  double delta_lower = 0.0;
  double delta_upper = 0.0;
};

/// Most important criterion = largest weight, lowest index on ties.
/// Throws DegenerateWeights when w_s == 1.
ElasticityVector elasticity_coefficients(std::span<const double> weights);

struct WeightScenario {
  std::size_t index = 0;  // 1-based
  double delta_x = 0.0;
  std::vector<double> weights;
};

inline constexpr std::size_t kDefaultScenarioCount = 21;
inline constexpr double kNegativeWeightClamp = 1e-12;

/// `count` evenly spaced dx values over [-w_s, 1 - w_s], both ends included.
/// w'_s = w_s + dx, w'_c = w_c - dx * alpha_c; negatives within 1e-12 are
/// clamped to zero, larger ones throw InvalidParameter.
std::vector<WeightScenario> weight_scenarios(std::span<const double> weights,
                                             std::size_t count = kDefaultScenarioCount);

// ---------------------------------------------------------------------------
// Rank correlation
// ---------------------------------------------------------------------------

/// Fractional ranks: a tie group sharing competition rank r with k members
/// gets r + (k - 1) / 2.
std::vector<double> average_ranks(const RankVector& ranking);

/// Spearman coefficient as the Pearson correlation of average ranks.
/// Throws LengthMismatch (sizes differ or m < 2) and ZeroVariance.
double spearman(const RankVector& a, const RankVector& b);

struct WindowSummary {
  std::size_t first = 0;  // 1-based, inclusive
  std::size_t last = 0;
  std::vector<std::optional<double>> mean_scc;  // per variant
};

struct SuiteError {
  std::size_t variant = 0;
  std::size_t scenario = 0;  // 1-based
  std::string message;
};

struct ScenarioSuiteReport {
  std::vector<MethodVariant> variants;
  ElasticityVector elasticity;
  std::vector<WeightScenario> scenarios;
  std::vector<RankVector> baseline;                                // [variant]
  std::vector<std::vector<std::optional<RankVector>>> rankings;    // [variant][scenario]
  std::vector<std::vector<std::optional<double>>> scc_vs_base;     // [variant][scenario]
  /// [scenario][variant a][variant b]; SCC between two variants' rankings.
  std::vector<std::vector<std::vector<std::optional<double>>>> cross_scc;
  std::vector<WindowSummary> windows;
  std::vector<SuiteError> errors;
};

/// Scenario windows 1..5 and 6..count (clipped to count).
std::vector<std::pair<std::size_t, std::size_t>> default_windows(std::size_t count);

/// Re-ranks the problem under every scenario for every variant and correlates
/// each ranking with that variant's original-weights ranking. Per-scenario
/// failures land in `errors`; a failing baseline throws.
ScenarioSuiteReport sensitivity_suite(const DecisionProblem& problem,
                                      std::span<const MethodVariant> variants,
                                      std::size_t count = kDefaultScenarioCount);

/// Same, over caller-supplied scenarios and windows.
ScenarioSuiteReport sensitivity_suite(
    const DecisionProblem& problem, std::span<const MethodVariant> variants,
    std::vector<WeightScenario> scenarios,
    std::span<const std::pair<std::size_t, std::size_t>> windows);

// ---------------------------------------------------------------------------
// Dynamic decision matrix
// ---------------------------------------------------------------------------

/// Pairs (a, b) of indices into `prev` where a ranked strictly ahead of b in
/// `prev` and b strictly ahead of a in `next`. `next[k]` ranks the alternative
/// `surviving[k]`. Throws IndexMismatch.
std::vector<std::pair<std::size_t, std::size_t>> detect_rank_reversal(
    const RankVector& prev, const RankVector& next, std::span<const std::size_t> surviving);

struct ReversalEvent {
  std::size_t stage = 0;   // stage at which the new order was observed
  std::size_t ahead = 0;   // original alternative index that was ahead before
  std::size_t behind = 0;  // original alternative index that overtook it
};

struct DynamicStage {
  std::vector<std::size_t> surviving;       // original alternative indices
  std::optional<RankVector> ranking;        // aligned with `surviving`
  std::optional<std::size_t> removed;       // original index eliminated next
  bool tie_at_worst = false;
  std::optional<std::string> error;
};

struct DynamicTrajectory {
  MethodVariant variant;
  std::vector<DynamicStage> stages;         // stage 0 = full problem
  std::vector<ReversalEvent> reversals;
  bool top_stable = false;
  std::optional<std::size_t> initial_winner;
};

struct DynamicReport {
  std::vector<std::string> alternatives;
  std::vector<DynamicTrajectory> trajectories;  // one per variant
};

/// Repeatedly removes each variant's worst-ranked alternative and re-ranks
/// until two remain. Ties at the bottom remove the highest index. Throws
/// TooFewAlternatives when m < 3.
DynamicReport dynamic_suite(const DecisionProblem& problem,
                            std::span<const MethodVariant> variants);

}  // namespace madm

#endif  // MADM_ROBUSTNESS_HPP

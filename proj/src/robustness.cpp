#include "madm/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "madm/error.hpp"

namespace madm {

ElasticityVector elasticity_coefficients(std::span<const double> weights) {
  if (weights.empty()) throw Error(ErrorKind::DimensionMismatch, "no weights");
  for (double w : weights)
    if (!std::isfinite(w) || w < 0.0)
      throw Error(ErrorKind::NonPositiveWeight, "negative weight " + std::to_string(w));
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(std::abs(total - 1.0) <= kWeightSumTolerance))
    throw Error(ErrorKind::WeightSumViolation, "weights sum to " + std::to_string(total));

  ElasticityVector out;
  out.most_important = static_cast<std::size_t>(
      std::distance(weights.begin(), std::max_element(weights.begin(), weights.end())));
  const double ws = weights[out.most_important];
  const double rest = 1.0 - ws;
  if (rest <= kNegativeWeightClamp)
    throw Error(ErrorKind::DegenerateWeights,
                "most important criterion carries the whole weight; nothing to compensate");

  out.alpha.resize(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j)
    out.alpha[j] = j == out.most_important ? 1.0 : weights[j] / rest;
  out.delta_lower = -ws;
  out.delta_upper = rest;
  return out;
}

std::vector<WeightScenario> weight_scenarios(std::span<const double> weights, std::size_t count) {
  if (count < 2)
    throw Error(ErrorKind::InvalidParameter,
                "scenario count must be at least 2, got " + std::to_string(count));
  const auto el = elasticity_coefficients(weights);
  const double span = el.delta_upper - el.delta_lower;

  std::vector<WeightScenario> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    WeightScenario sc;
    sc.index = k + 1;
    sc.delta_x = k + 1 == count ? el.delta_upper
                                : el.delta_lower + span * static_cast<double>(k) /
                                                       static_cast<double>(count - 1);
    sc.weights.resize(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j) {
      double w = j == el.most_important ? weights[j] + sc.delta_x
                                        : weights[j] - sc.delta_x * el.alpha[j];
      if (w < 0.0) {
        if (w < -kNegativeWeightClamp)
          throw Error(ErrorKind::InvalidParameter,
                      "scenario " + std::to_string(sc.index) + " drives weight " +
                          std::to_string(j) + " to " + std::to_string(w));
        w = 0.0;
      }
      sc.weights[j] = w;
    }
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<double> average_ranks(const RankVector& ranking) {
  std::vector<double> out(ranking.ranks.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int r = ranking.ranks[i];
    const auto shared = std::count(ranking.ranks.begin(), ranking.ranks.end(), r);
    out[i] = static_cast<double>(r) + static_cast<double>(shared - 1) / 2.0;
  }
  return out;
}

double spearman(const RankVector& a, const RankVector& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::LengthMismatch, "rank vectors of length " + std::to_string(a.size()) +
                                               " and " + std::to_string(b.size()));
  if (a.size() < 2) throw Error(ErrorKind::LengthMismatch, "need at least 2 ranked items");

  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(ra.size());
  const double mean_a = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mean_b = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double cov = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean_a;
    const double db = rb[i] - mean_b;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0)
    throw Error(ErrorKind::ZeroVariance, "a rank vector is entirely tied");
  return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

std::vector<std::pair<std::size_t, std::size_t>> default_windows(std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t head = std::min<std::size_t>(5, count);
  out.emplace_back(1, head);
  if (count > head) out.emplace_back(head + 1, count);
  return out;
}

ScenarioSuiteReport sensitivity_suite(const DecisionProblem& problem,
                                      std::span<const MethodVariant> variants,
                                      std::size_t count) {
  auto scenarios = weight_scenarios(problem.weights(), count);
  const auto windows = default_windows(count);
  return sensitivity_suite(problem, variants, std::move(scenarios), windows);
}

ScenarioSuiteReport sensitivity_suite(
    const DecisionProblem& problem, std::span<const MethodVariant> variants,
    std::vector<WeightScenario> scenarios,
    std::span<const std::pair<std::size_t, std::size_t>> windows) {
  const auto base = validate_problem(problem);

  ScenarioSuiteReport rep;
  rep.variants.assign(variants.begin(), variants.end());
  rep.elasticity = elasticity_coefficients(base.weights());
  rep.scenarios = std::move(scenarios);

  const std::size_t nv = rep.variants.size();
  const std::size_t ns = rep.scenarios.size();
  for (const auto& v : rep.variants) rep.baseline.push_back(rank_with(base, v));

  rep.rankings.assign(nv, std::vector<std::optional<RankVector>>(ns));
  rep.scc_vs_base.assign(nv, std::vector<std::optional<double>>(ns));
  rep.cross_scc.assign(ns, std::vector<std::vector<std::optional<double>>>(
                               nv, std::vector<std::optional<double>>(nv)));

  for (std::size_t s = 0; s < ns; ++s) {
    const auto& sc = rep.scenarios[s];
    for (std::size_t v = 0; v < nv; ++v) {
      try {
        const auto scenario_problem = with_weights(base, sc.weights);
        rep.rankings[v][s] = rank_with(scenario_problem, rep.variants[v]);
        rep.scc_vs_base[v][s] = spearman(rep.baseline[v], *rep.rankings[v][s]);
      } catch (const Error& e) {
        rep.errors.push_back({v, sc.index, e.what()});
      }
    }
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b) {
        if (!rep.rankings[a][s] || !rep.rankings[b][s]) continue;
        try {
          rep.cross_scc[s][a][b] = spearman(*rep.rankings[a][s], *rep.rankings[b][s]);
        } catch (const Error&) {
          // Undefined cross correlations stay empty; the per-variant errors
          // above already record the cause when a ranking is fully tied.
        }
      }
  }

  for (const auto& [first, last] : windows) {
    WindowSummary w{first, last, std::vector<std::optional<double>>(nv)};
    for (std::size_t v = 0; v < nv; ++v) {
      double sum = 0.0;
      std::size_t n = 0;
      for (std::size_t s = 0; s < ns; ++s) {
        const auto idx = rep.scenarios[s].index;
        if (idx < first || idx > last || !rep.scc_vs_base[v][s]) continue;
        sum += *rep.scc_vs_base[v][s];
        ++n;
      }
      if (n > 0) w.mean_scc[v] = sum / static_cast<double>(n);
    }
    rep.windows.push_back(std::move(w));
  }
  return rep;
}

std::vector<std::pair<std::size_t, std::size_t>> detect_rank_reversal(
    const RankVector& prev, const RankVector& next, std::span<const std::size_t> surviving) {
  if (next.size() != surviving.size())
    throw Error(ErrorKind::IndexMismatch, "next ranking has " + std::to_string(next.size()) +
                                              " entries for " +
                                              std::to_string(surviving.size()) + " survivors");
  std::vector<int> next_rank(prev.size(), 0);
  for (std::size_t k = 0; k < surviving.size(); ++k) {
    const std::size_t id = surviving[k];
    if (id >= prev.size() || next_rank[id] != 0)
      throw Error(ErrorKind::IndexMismatch,
                  "survivor index " + std::to_string(id) + " is out of range or repeated");
    next_rank[id] = next.ranks[k];
  }

  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto order = prev.order();
  for (std::size_t x = 0; x < order.size(); ++x) {
    const std::size_t a = order[x];
    if (next_rank[a] == 0) continue;
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const std::size_t b = order[y];
      if (next_rank[b] == 0) continue;
      if (prev.ranks[a] < prev.ranks[b] && next_rank[b] < next_rank[a]) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

DynamicTrajectory run_trajectory(const DecisionProblem& problem, const MethodVariant& variant) {
  DynamicTrajectory traj;
  traj.variant = variant;

  std::vector<std::size_t> alive(problem.alternative_count());
  std::iota(alive.begin(), alive.end(), std::size_t{0});

  while (true) {
    DynamicStage stage;
    stage.surviving = alive;
    try {
      stage.ranking = rank_with(select_alternatives(problem, alive), variant);
    } catch (const Error& e) {
      stage.error = e.what();
      traj.stages.push_back(std::move(stage));
      break;
    }

    const std::size_t k = traj.stages.size();
    if (k > 0) {
      const auto& prev = traj.stages.back();
      // Survivors expressed as positions within the previous stage.
      std::vector<std::size_t> local;
      for (std::size_t id : alive)
        local.push_back(static_cast<std::size_t>(
            std::find(prev.surviving.begin(), prev.surviving.end(), id) -
            prev.surviving.begin()));
      for (const auto& [a, b] : detect_rank_reversal(*prev.ranking, *stage.ranking, local))
        traj.reversals.push_back({k, prev.surviving[a], prev.surviving[b]});
    }

    if (alive.size() > 2) {
      const auto& ranks = stage.ranking->ranks;
      const int worst_rank = *std::max_element(ranks.begin(), ranks.end());
      std::size_t worst = 0;
      std::size_t tied = 0;
      for (std::size_t i = 0; i < ranks.size(); ++i)
        if (ranks[i] == worst_rank) {
          worst = i;  // last match = highest index
          ++tied;
        }
      stage.tie_at_worst = tied > 1;
      stage.removed = alive[worst];
      traj.stages.push_back(std::move(stage));
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(worst));
    } else {
      traj.stages.push_back(std::move(stage));
      break;
    }
  }

  const auto& first = traj.stages.front();
  if (first.ranking) {
    const std::size_t winner = first.surviving[first.ranking->best()];
    traj.initial_winner = winner;
    traj.top_stable = std::all_of(traj.stages.begin(), traj.stages.end(), [&](const auto& st) {
      if (!st.ranking) return false;
      const auto pos = std::find(st.surviving.begin(), st.surviving.end(), winner);
      return st.ranking->ranks[static_cast<std::size_t>(pos - st.surviving.begin())] == 1;
    });
  }
  return traj;
}

}  // namespace

DynamicReport dynamic_suite(const DecisionProblem& problem,
                            std::span<const MethodVariant> variants) {
  const auto base = validate_problem(problem);
  if (base.alternative_count() < 3)
    throw Error(ErrorKind::TooFewAlternatives,
                "dynamic analysis needs at least 3 alternatives, got " +
                    std::to_string(base.alternative_count()));
  DynamicReport rep;
  rep.alternatives = base.alternatives;
  for (const auto& v : variants) rep.trajectories.push_back(run_trajectory(base, v));
  return rep;
}

}  // namespace madm

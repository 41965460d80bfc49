#include <charconv>
#include <cmath>

#include "madm/workbench.hpp"

namespace madm::workbench {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return rows;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json normalized_to_json(const NormalizedMatrix& nm) {
  return {{"scheme", to_string(nm.scheme)},
          {"values", matrix_to_json(nm.values)},
          {"higher_is_better", nm.higher_is_better},
          {"warnings", nm.warnings}};
}

json variant_to_json(const MethodVariant& v) {
  json out = {{"label", v.label()}, {"method", to_string(v.method)}, {"scheme", to_string(v.scheme)}};
  if (v.method == Method::Vikor) out["strategy_weight"] = v.strategy_weight;
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

json rank_vector_to_json(const RankVector& ranking) {
  return {{"ranks", ranking.ranks},
          {"scores", ranking.scores},
          {"better", ranking.better == Better::Higher ? "higher" : "lower"},
          {"ties", ranking.ties}};
}

json topsis_to_json(const TopsisOutcome& o) {
  return {{"method", "topsis"},
          {"normalized", normalized_to_json(o.normalized)},
          {"weighted", matrix_to_json(o.weighted)},
          {"pis", o.pis},
          {"nis", o.nis},
          {"d_plus", o.d_plus},
          {"d_minus", o.d_minus},
          {"closeness", o.closeness},
          {"ranking", rank_vector_to_json(o.ranking)}};
}

json vikor_to_json(const VikorOutcome& o) {
  return {{"method", "vikor"},
          {"normalized", normalized_to_json(o.normalized)},
          {"f_star", o.f_star},
          {"f_minus", o.f_minus},
          {"s", o.s},
          {"r", o.r},
          {"strategy_weight", o.strategy_weight},
          {"q", o.q},
          {"ranking", rank_vector_to_json(o.ranking)}};
}

json sensitivity_to_json(const ScenarioSuiteReport& rep) {
  json variants = json::array();
  for (const auto& v : rep.variants) variants.push_back(variant_to_json(v));

  json scenarios = json::array();
  for (const auto& s : rep.scenarios)
    scenarios.push_back({{"index", s.index}, {"delta_x", s.delta_x}, {"weights", s.weights}});

  json baseline = json::array();
  for (const auto& b : rep.baseline) baseline.push_back(rank_vector_to_json(b));

  json rankings = json::array();
  json scc = json::array();
  for (std::size_t v = 0; v < rep.variants.size(); ++v) {
    json rrow = json::array();
    json srow = json::array();
    for (std::size_t s = 0; s < rep.scenarios.size(); ++s) {
      rrow.push_back(rep.rankings[v][s] ? json(rep.rankings[v][s]->ranks) : json(nullptr));
      srow.push_back(optional_number(rep.scc_vs_base[v][s]));
    }
    rankings.push_back(std::move(rrow));
    scc.push_back(std::move(srow));
  }

  json cross = json::array();
  for (const auto& per_scenario : rep.cross_scc) {
    json m = json::array();
    for (const auto& row : per_scenario) {
      json r = json::array();
      for (const auto& x : row) r.push_back(optional_number(x));
      m.push_back(std::move(r));
    }
    cross.push_back(std::move(m));
  }

  json windows = json::array();
  for (const auto& w : rep.windows) {
    json means = json::array();
    for (const auto& m : w.mean_scc) means.push_back(optional_number(m));
    windows.push_back({{"first", w.first}, {"last", w.last}, {"mean_scc", means}});
  }

  json errors = json::array();
  for (const auto& e : rep.errors)
    errors.push_back({{"variant", e.variant}, {"scenario", e.scenario}, {"message", e.message}});

  return {{"variants", variants},
          {"elasticity",
           {{"most_important", rep.elasticity.most_important},
            {"alpha", rep.elasticity.alpha},
            {"delta_lower", rep.elasticity.delta_lower},
            {"delta_upper", rep.elasticity.delta_upper}}},
          {"scenarios", scenarios},
          {"baseline", baseline},
          {"ranks", rankings},
          {"scc_vs_base", scc},
          {"cross_scc", cross},
          {"windows", windows},
          {"errors", errors}};
}

json dynamic_to_json(const DynamicReport& rep) {
  json trajectories = json::array();
  for (const auto& t : rep.trajectories) {
    json stages = json::array();
    for (std::size_t k = 0; k < t.stages.size(); ++k) {
      const auto& st = t.stages[k];
      json s = {{"stage", k}, {"surviving", st.surviving}, {"tie_at_worst", st.tie_at_worst}};
      s["ranking"] = st.ranking ? rank_vector_to_json(*st.ranking) : json(nullptr);
      s["removed"] = st.removed ? json(*st.removed) : json(nullptr);
      if (st.error) s["error"] = *st.error;
      stages.push_back(std::move(s));
    }
    json reversals = json::array();
    for (const auto& r : t.reversals)
      reversals.push_back({{"stage", r.stage}, {"ahead", r.ahead}, {"behind", r.behind}});
    trajectories.push_back({{"variant", variant_to_json(t.variant)},
                            {"stages", stages},
                            {"reversals", reversals},
                            {"top_stable", t.top_stable},
                            {"initial_winner", t.initial_winner ? json(*t.initial_winner)
                                                                : json(nullptr)}});
  }
  return {{"alternatives", rep.alternatives}, {"trajectories", trajectories}};
}

json make_report(std::string_view kind, const DecisionProblem& problem, json payload) {
  return {{"format_version", kReportFormatVersion},
          {"kind", kind},
          {"problem", problem_to_json(problem)},
          {"payload", std::move(payload)}};
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

std::string scenario_csv(const ScenarioSuiteReport& rep) {
  std::string out = "scenario,method,scc\n";
  for (std::size_t s = 0; s < rep.scenarios.size(); ++s)
    for (std::size_t v = 0; v < rep.variants.size(); ++v) {
      out += std::to_string(rep.scenarios[s].index) + "," + rep.variants[v].label() + ",";
      if (rep.scc_vs_base[v][s]) out += format_number(*rep.scc_vs_base[v][s]);
      out += "\n";
    }
  return out;
}

std::string dynamic_csv(const DynamicReport& rep) {
  std::string out = "method,stage,alternative,rank,removed\n";
  for (const auto& t : rep.trajectories)
    for (std::size_t k = 0; k < t.stages.size(); ++k) {
      const auto& st = t.stages[k];
      if (!st.ranking) continue;
      for (std::size_t i = 0; i < st.surviving.size(); ++i) {
        const std::size_t id = st.surviving[i];
        out += t.variant.label() + "," + std::to_string(k) + "," + rep.alternatives[id] + "," +
               std::to_string(st.ranking->ranks[i]) + "," +
               (st.removed == id ? "1" : "0") + "\n";
      }
    }
  return out;
}

}  // namespace madm::workbench

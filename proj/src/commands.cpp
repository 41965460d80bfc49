#include "madm/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "madm/error.hpp"

namespace madm::cli {

namespace {

/// Flag values outside their documented range.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

workbench::FileFormat input_format(const std::string& text) {
  const auto f = workbench::parse_format(text);
  if (!f) throw UsageError("--input-format must be auto, json or csv");
  return *f;
}

std::vector<MethodVariant> variants_from(const std::vector<std::string>& methods) {
  if (methods.empty()) return default_variants();
  std::vector<MethodVariant> out;
  for (const auto& m : methods) {
    const auto v = parse_variant(m);
    if (!v) throw UsageError("unknown method variant '" + m + "' (expected e.g. topsis:log)");
    out.push_back(*v);
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

std::filesystem::path companion(const std::filesystem::path& out, const char* suffix) {
  auto p = out;
  p.replace_extension(suffix);
  return p;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    body();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

void print_rank_table(std::ostream& out, const DecisionProblem& p, const RankVector& rv,
                      const std::string& score_name) {
  out << std::left << std::setw(6) << "rank" << std::setw(16) << "alternative" << score_name << "\n";
  for (std::size_t i : rv.order())
    out << std::left << std::setw(6) << rv.ranks[i] << std::setw(16) << p.alternatives[i]
        << fixed(rv.scores[i]) << "\n";
}

}  // namespace

int cmd_rank(const RankOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto method = parse_method(opts.method);
    if (!method) throw UsageError("--method must be topsis or vikor");
    const auto scheme = parse_scheme(opts.norm);
    if (!scheme) throw UsageError("--norm must be vector, log, minmax or sum");
    if (!(opts.strategy_weight >= 0.0 && opts.strategy_weight <= 1.0))
      throw UsageError("--v must lie in [0, 1]");
    if (opts.format != "json" && opts.format != "csv")
      throw UsageError("--format must be json or csv");

    const auto problem = workbench::load_problem(opts.problem, input_format(opts.input_format));

    nlohmann::json payload;
    RankVector ranking;
    std::string csv = "alternative";
    if (*method == Method::Topsis) {
      const auto o = topsis(problem, *scheme);
      payload = workbench::topsis_to_json(o);
      ranking = o.ranking;
      csv += ",d_plus,d_minus,closeness,rank\n";
      for (std::size_t i = 0; i < problem.alternative_count(); ++i)
        csv += problem.alternatives[i] + "," + workbench::format_number(o.d_plus[i]) + "," +
               workbench::format_number(o.d_minus[i]) + "," +
               workbench::format_number(o.closeness[i]) + "," + std::to_string(o.ranking.ranks[i]) +
               "\n";
      print_rank_table(out, problem, ranking, "CC");
    } else {
      const auto o = vikor(problem, *scheme, opts.strategy_weight);
      payload = workbench::vikor_to_json(o);
      ranking = o.ranking;
      csv += ",s,r,q,rank\n";
      for (std::size_t i = 0; i < problem.alternative_count(); ++i)
        csv += problem.alternatives[i] + "," + workbench::format_number(o.s[i]) + "," +
               workbench::format_number(o.r[i]) + "," + workbench::format_number(o.q[i]) + "," +
               std::to_string(o.ranking.ranks[i]) + "\n";
      print_rank_table(out, problem, ranking, "Q");
    }

    if (opts.out) {
      if (opts.format == "json")
        write_file(*opts.out, workbench::dump_report(workbench::make_report("rank", problem, payload)));
      else
        write_file(*opts.out, csv);
    }
  });
}

int cmd_sensitivity(const SensitivityOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.scenarios < 2) throw UsageError("--scenarios must be at least 2");
    const auto variants = variants_from(opts.methods);
    const auto problem = workbench::load_problem(opts.problem, input_format(opts.input_format));
    const auto rep = sensitivity_suite(problem, variants, static_cast<std::size_t>(opts.scenarios));

    out << "most important criterion: " << problem.criteria[rep.elasticity.most_important].name
        << "  dx in [" << fixed(rep.elasticity.delta_lower, 3) << ", "
        << fixed(rep.elasticity.delta_upper, 3) << "]\n";
    out << std::left << std::setw(10) << "window";
    for (const auto& v : variants) out << std::setw(16) << v.label();
    out << "\n";
    for (const auto& w : rep.windows) {
      out << std::left << std::setw(10) << (std::to_string(w.first) + "-" + std::to_string(w.last));
      for (const auto& m : w.mean_scc) out << std::setw(16) << (m ? fixed(*m, 3) : std::string("n/a"));
      out << "\n";
    }
    if (!rep.errors.empty()) out << rep.errors.size() << " scenario evaluation(s) failed; see report\n";

    if (opts.out)
      write_file(*opts.out, workbench::dump_report(workbench::make_report(
                                "sensitivity", problem, workbench::sensitivity_to_json(rep))));
    const auto csv_path = opts.csv ? opts.csv : (opts.out ? std::optional(companion(*opts.out, ".scc.csv"))
                                                         : std::nullopt);
    if (csv_path) write_file(*csv_path, workbench::scenario_csv(rep));
  });
}

int cmd_dynamic(const DynamicOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto variants = variants_from(opts.methods);
    const auto problem = workbench::load_problem(opts.problem, input_format(opts.input_format));
    const auto rep = dynamic_suite(problem, variants);

    out << std::left << std::setw(16) << "method" << std::setw(8) << "stages" << std::setw(11)
        << "reversals" << std::setw(10) << "winner" << "top-1 stable\n";
    for (const auto& t : rep.trajectories) {
      out << std::left << std::setw(16) << t.variant.label() << std::setw(8) << t.stages.size() - 1
          << std::setw(11) << t.reversals.size() << std::setw(10)
          << (t.initial_winner ? rep.alternatives[*t.initial_winner] : std::string("-"))
          << (t.top_stable ? "yes" : "no") << "\n";
      for (const auto& r : t.reversals)
        out << "    stage " << r.stage << ": " << rep.alternatives[r.behind] << " overtook "
            << rep.alternatives[r.ahead] << "\n";
    }

    if (opts.out)
      write_file(*opts.out, workbench::dump_report(workbench::make_report(
                                "dynamic", problem, workbench::dynamic_to_json(rep))));
    const auto csv_path = opts.csv ? opts.csv
                                   : (opts.out ? std::optional(companion(*opts.out, ".stages.csv"))
                                               : std::nullopt);
    if (csv_path) write_file(*csv_path, workbench::dynamic_csv(rep));
  });
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto problem = workbench::load_problem(opts.problem, input_format(opts.input_format));
    const auto variants = default_variants();

    nlohmann::json outcomes = nlohmann::json::array();
    std::vector<RankVector> rankings;
    for (const auto& v : variants) {
      if (v.method == Method::Topsis) {
        const auto o = topsis(problem, v.scheme);
        outcomes.push_back(workbench::topsis_to_json(o));
        rankings.push_back(o.ranking);
      } else {
        const auto o = vikor(problem, v.scheme, v.strategy_weight);
        outcomes.push_back(workbench::vikor_to_json(o));
        rankings.push_back(o.ranking);
      }
    }

    std::vector<std::vector<std::optional<double>>> scc(variants.size(),
                                                        std::vector<std::optional<double>>(variants.size()));
    for (std::size_t a = 0; a < variants.size(); ++a)
      for (std::size_t b = 0; b < variants.size(); ++b) {
        try {
          scc[a][b] = spearman(rankings[a], rankings[b]);
        } catch (const Error&) {
        }
      }

    out << std::left << std::setw(16) << "alternative";
    for (const auto& v : variants) out << std::setw(16) << v.label();
    out << "\n";
    for (std::size_t i = 0; i < problem.alternative_count(); ++i) {
      out << std::left << std::setw(16) << problem.alternatives[i];
      for (const auto& r : rankings) out << std::setw(16) << r.ranks[i];
      out << "\n";
    }
    out << "\nSpearman correlation between rankings\n" << std::left << std::setw(16) << "";
    for (const auto& v : variants) out << std::setw(16) << v.label();
    out << "\n";
    for (std::size_t a = 0; a < variants.size(); ++a) {
      out << std::left << std::setw(16) << variants[a].label();
      for (const auto& x : scc[a]) out << std::setw(16) << (x ? fixed(*x, 3) : std::string("n/a"));
      out << "\n";
    }

    if (opts.out) {
      nlohmann::json labels = nlohmann::json::array();
      for (const auto& v : variants) labels.push_back(v.label());
      nlohmann::json matrix = nlohmann::json::array();
      for (const auto& row : scc) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x ? nlohmann::json(*x) : nlohmann::json(nullptr));
        matrix.push_back(std::move(r));
      }
      write_file(*opts.out,
                 workbench::dump_report(workbench::make_report(
                     "compare", problem,
                     {{"variants", labels}, {"outcomes", outcomes}, {"scc", matrix}})));
    }
  });
}

}  // namespace madm::cli

// Command-line front end: rank, sensitivity, dynamic, compare.

#include <iostream>

#include <CLI11.hpp>

#include "madm/commands.hpp"

int main(int argc, char** argv) {
  using namespace madm::cli;

  CLI::App app{"Multi-attribute ranking workbench (TOPSIS / VIKOR)"};
  app.require_subcommand(1);

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank alternatives with one method");
  rank_cmd->add_option("problem", rank.problem, "Problem file (.json or .csv)")->required();
  rank_cmd->add_option("--method", rank.method, "topsis | vikor")->capture_default_str();
  rank_cmd->add_option("--norm", rank.norm, "vector | log | minmax | sum")->capture_default_str();
  rank_cmd->add_option("--v", rank.strategy_weight, "VIKOR strategy weight in [0, 1]")
      ->capture_default_str();
  rank_cmd->add_option("--out", rank.out, "Report output path");
  rank_cmd->add_option("--format", rank.format, "Report format: json | csv")->capture_default_str();
  rank_cmd->add_option("--input-format", rank.input_format, "auto | json | csv")->capture_default_str();

  SensitivityOptions sens;
  auto* sens_cmd = app.add_subcommand("sensitivity", "Weight-sensitivity scenarios with Spearman correlation");
  sens_cmd->add_option("problem", sens.problem, "Problem file")->required();
  sens_cmd->add_option("--scenarios", sens.scenarios, "Number of scenarios (>= 2)")->capture_default_str();
  sens_cmd->add_option("--methods", sens.methods, "Variants, e.g. topsis:log vikor:vector")
      ->delimiter(',');
  sens_cmd->add_option("--out", sens.out, "Report output path");
  sens_cmd->add_option("--csv", sens.csv, "Plot-ready SCC table (default: <out>.scc.csv)");
  sens_cmd->add_option("--input-format", sens.input_format, "auto | json | csv")->capture_default_str();

  DynamicOptions dyn;
  auto* dyn_cmd = app.add_subcommand("dynamic", "Eliminate the worst alternative stage by stage");
  dyn_cmd->add_option("problem", dyn.problem, "Problem file")->required();
  dyn_cmd->add_option("--methods", dyn.methods, "Variants, e.g. topsis:log vikor:vector")->delimiter(',');
  dyn_cmd->add_option("--out", dyn.out, "Report output path");
  dyn_cmd->add_option("--csv", dyn.csv, "Stage table (default: <out>.stages.csv)");
  dyn_cmd->add_option("--input-format", dyn.input_format, "auto | json | csv")->capture_default_str();

  CompareOptions cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Run TOPSIS/VIKOR with vector and log normalization side by side");
  cmp_cmd->add_option("problem", cmp.problem, "Problem file")->required();
  cmp_cmd->add_option("--out", cmp.out, "Report output path");
  cmp_cmd->add_option("--input-format", cmp.input_format, "auto | json | csv")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*rank_cmd) return cmd_rank(rank, std::cout, std::cerr);
  if (*sens_cmd) return cmd_sensitivity(sens, std::cout, std::cerr);
  if (*dyn_cmd) return cmd_dynamic(dyn, std::cout, std::cerr);
  return cmd_compare(cmp, std::cout, std::cerr);
}

#ifndef MADM_COMMANDS_HPP
#define MADM_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "madm/workbench.hpp"

namespace madm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

struct RankOptions {
  std::filesystem::path problem;
  std::string method = "topsis";
  std::string norm = "vector";
  double strategy_weight = kDefaultStrategyWeight;
  std::optional<std::filesystem::path> out;
  std::string format = "json";
  std::string input_format = "auto";
};

struct SensitivityOptions {
  std::filesystem::path problem;
  int scenarios = static_cast<int>(kDefaultScenarioCount);
  std::vector<std::string> methods;  // empty = default variants
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> csv;  // defaults to <out stem>.scc.csv
  std::string input_format = "auto";
};

struct DynamicOptions {
  std::filesystem::path problem;
  std::vector<std::string> methods;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> csv;  // defaults to <out stem>.stages.csv
  std::string input_format = "auto";
};

struct CompareOptions {
  std::filesystem::path problem;
  std::optional<std::filesystem::path> out;
  std::string input_format = "auto";
};

// Each command prints its table to `out`, diagnostics to `err`, and returns
// 0 on success, 2 on input/validation errors, 1 on anything else.
int cmd_rank(const RankOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sensitivity(const SensitivityOptions& opts, std::ostream& out, std::ostream& err);
int cmd_dynamic(const DynamicOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace madm::cli

#endif  // MADM_COMMANDS_HPP

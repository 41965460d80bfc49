#ifndef MADM_WORKBENCH_HPP
#define MADM_WORKBENCH_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "madm/core_model.hpp"
#include "madm/ranking.hpp"
#include "madm/robustness.hpp"

namespace madm::workbench {

enum class FileFormat { Auto, Json, Csv };

std::optional<FileFormat> parse_format(std::string_view text) noexcept;

/// Structured problem document:
///   {"name": ..., "criteria": [{"name", "direction": "max"|"min", "weight"}],
///    "alternatives": [{"name", "values": [...]}]}
/// Structural problems throw ParseError with a JSON path; the parsed problem
/// then goes through validate_problem.
DecisionProblem parse_problem_json(std::string_view text);

/// CSV problem: every row starts with a label cell.
///   row 1: label, criterion names
///   row 2: label, "max"/"min" per criterion
///   row 3: label, weights
///   rows 4+: alternative name, values
DecisionProblem parse_problem_csv(std::string_view text);

/// Reads and parses a problem file. Auto picks by extension, then by content.
/// Errors are rethrown with the file path prefixed.
DecisionProblem load_problem(const std::filesystem::path& path,
                             FileFormat format = FileFormat::Auto);

nlohmann::json problem_to_json(const DecisionProblem& problem);
std::string emit_problem_json(const DecisionProblem& problem);
std::string emit_problem_csv(const DecisionProblem& problem);

inline constexpr int kReportFormatVersion = 1;

nlohmann::json rank_vector_to_json(const RankVector& ranking);
nlohmann::json topsis_to_json(const TopsisOutcome& outcome);
nlohmann::json vikor_to_json(const VikorOutcome& outcome);
nlohmann::json sensitivity_to_json(const ScenarioSuiteReport& report);
nlohmann::json dynamic_to_json(const DynamicReport& report);

/// {"format_version", "kind", "problem", "payload"}; no timestamps so equal
/// inputs give byte-identical files.
nlohmann::json make_report(std::string_view kind, const DecisionProblem& problem,
                           nlohmann::json payload);

/// Report text as written to disk (2-space indent, trailing newline).
std::string dump_report(const nlohmann::json& report);

/// Flat "scenario,method,scc" table; empty scc cell for undefined entries.
std::string scenario_csv(const ScenarioSuiteReport& report);
/// Flat "method,stage,alternative,rank,removed" table.
std::string dynamic_csv(const DynamicReport& report);

/// Shortest round-trip text of a double (17 significant digits at most).
std::string format_number(double value);

}  // namespace madm::workbench

#endif  // MADM_WORKBENCH_HPP

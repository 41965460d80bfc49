#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "madm/error.hpp"
#include "madm/workbench.hpp"

namespace madm::workbench {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

Direction parse_direction(std::string_view text, const std::string& where) {
  if (text == "max") return Direction::Benefit;
  if (text == "min") return Direction::Cost;
  parse_fail(where, "direction must be \"max\" or \"min\", got \"" + std::string(text) + "\"");
}

std::string_view direction_text(Direction d) { return d == Direction::Benefit ? "max" : "min"; }

double parse_number(std::string_view text, const std::string& where) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto* begin = t.data();
  const auto* end = t.data() + t.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc{} || ptr != end)
    parse_fail(where, "not a number: \"" + t + "\"");
  return value;
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(path, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(trim(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(trim(cell));
  return cells;
}

std::string csv_cell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::optional<FileFormat> parse_format(std::string_view text) noexcept {
  if (text == "auto") return FileFormat::Auto;
  if (text == "json") return FileFormat::Json;
  if (text == "csv") return FileFormat::Csv;
  return std::nullopt;
}

DecisionProblem parse_problem_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    const auto line = 1 + std::count(upto.begin(), upto.end(), '\n');
    parse_fail("line " + std::to_string(line), e.what());
  }
  if (!doc.is_object()) parse_fail("$", "document must be an object");

  try {
    DecisionProblem p;
    p.name = doc.value("name", std::string{});

    const auto& crits = require(doc, "criteria", "$");
    if (!crits.is_array()) parse_fail("$.criteria", "must be an array");
    for (std::size_t j = 0; j < crits.size(); ++j) {
      const std::string path = "$.criteria[" + std::to_string(j) + "]";
      const auto& c = crits[j];
      Criterion crit;
      crit.name = require(c, "name", path).get<std::string>();
      crit.direction =
          parse_direction(require(c, "direction", path).get<std::string>(), path + ".direction");
      const auto& w = require(c, "weight", path);
      if (!w.is_number()) parse_fail(path + ".weight", "must be a number");
      crit.weight = w.get<double>();
      p.criteria.push_back(std::move(crit));
    }

    const auto& alts = require(doc, "alternatives", "$");
    if (!alts.is_array()) parse_fail("$.alternatives", "must be an array");
    p.values = Matrix(alts.size(), p.criteria.size());
    for (std::size_t i = 0; i < alts.size(); ++i) {
      const std::string path = "$.alternatives[" + std::to_string(i) + "]";
      const auto& a = alts[i];
      auto name = require(a, "name", path).get<std::string>();
      const auto& vals = require(a, "values", path);
      if (!vals.is_array()) parse_fail(path + ".values", "must be an array");
      if (vals.size() != p.criteria.size())
        parse_fail(path + ".values", "row '" + name + "' has " + std::to_string(vals.size()) +
                                         " values for " + std::to_string(p.criteria.size()) +
                                         " criteria");
      for (std::size_t j = 0; j < vals.size(); ++j) {
        if (!vals[j].is_number())
          parse_fail(path + ".values[" + std::to_string(j) + "]", "must be a number");
        p.values(i, j) = vals[j].get<double>();
      }
      p.alternatives.push_back(std::move(name));
    }
    return validate_problem(p);
  } catch (const json::exception& e) {
    parse_fail("$", e.what());
  }
}

DecisionProblem parse_problem_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    rows.emplace_back(line_no, split_csv_line(line));
  }
  if (rows.size() < 3) parse_fail("csv", "expected header, direction and weight rows");

  const auto loc = [](std::size_t ln, std::size_t field) {
    return "line " + std::to_string(ln) + ", field " + std::to_string(field + 1);
  };

  const auto& [name_line, names] = rows[0];
  if (names.size() < 2) parse_fail("line " + std::to_string(name_line), "no criterion columns");
  const std::size_t n = names.size() - 1;

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [ln, cells] = rows[r];
    if (cells.size() != n + 1) {
      const std::string who = r >= 3 ? "row '" + cells.front() + "'" : "row";
      parse_fail("line " + std::to_string(ln), who + " has " + std::to_string(cells.size() - 1) +
                                                   " values for " + std::to_string(n) +
                                                   " criteria");
    }
  }

  DecisionProblem p;
  for (std::size_t j = 0; j < n; ++j) {
    Criterion c;
    c.name = names[j + 1];
    c.direction = parse_direction(rows[1].second[j + 1], loc(rows[1].first, j + 1));
    c.weight = parse_number(rows[2].second[j + 1], loc(rows[2].first, j + 1));
    p.criteria.push_back(std::move(c));
  }
  p.values = Matrix(rows.size() - 3, n);
  for (std::size_t r = 3; r < rows.size(); ++r) {
    const auto& [ln, cells] = rows[r];
    p.alternatives.push_back(cells[0]);
    for (std::size_t j = 0; j < n; ++j) p.values(r - 3, j) = parse_number(cells[j + 1], loc(ln, j + 1));
  }
  return validate_problem(p);
}

DecisionProblem load_problem(const std::filesystem::path& path, FileFormat format) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();

  if (format == FileFormat::Auto) {
    const auto ext = path.extension().string();
    if (ext == ".json") {
      format = FileFormat::Json;
    } else if (ext == ".csv") {
      format = FileFormat::Csv;
    } else {
      const auto first = text.find_first_not_of(" \t\r\n");
      format = first != std::string::npos && text[first] == '{' ? FileFormat::Json : FileFormat::Csv;
    }
  }
  try {
    return format == FileFormat::Json ? parse_problem_json(text) : parse_problem_csv(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

json problem_to_json(const DecisionProblem& problem) {
  json crits = json::array();
  for (const auto& c : problem.criteria)
    crits.push_back({{"name", c.name}, {"direction", direction_text(c.direction)}, {"weight", c.weight}});
  json alts = json::array();
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    const auto row = problem.values.row(i);
    alts.push_back({{"name", problem.alternatives[i]},
                    {"values", std::vector<double>(row.begin(), row.end())}});
  }
  return {{"name", problem.name}, {"criteria", crits}, {"alternatives", alts}};
}

std::string emit_problem_json(const DecisionProblem& problem) {
  return problem_to_json(problem).dump(2) + "\n";
}

std::string emit_problem_csv(const DecisionProblem& problem) {
  std::string out = "criterion";
  for (const auto& c : problem.criteria) out += "," + csv_cell(c.name);
  out += "\ndirection";
  for (const auto& c : problem.criteria) out += "," + std::string(direction_text(c.direction));
  out += "\nweight";
  for (const auto& c : problem.criteria) out += "," + format_number(c.weight);
  out += "\n";
  for (std::size_t i = 0; i < problem.alternatives.size(); ++i) {
    out += csv_cell(problem.alternatives[i]);
    for (double x : problem.values.row(i)) out += "," + format_number(x);
    out += "\n";
  }
  return out;
}

}  // namespace madm::workbench

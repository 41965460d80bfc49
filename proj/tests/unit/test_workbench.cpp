#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "madm/commands.hpp"
#include "madm/error.hpp"
#include "madm/workbench.hpp"
#include "support/sample_problems.hpp"

namespace madm {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kData{MADM_DATA_DIR};

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("madm_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }
  static std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

ErrorKind load_error(const fs::path& p) {
  try {
    workbench::load_problem(p);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error loading " << p;
  return ErrorKind::IndexMismatch;
}

// --- Loading ---------------------------------------------------------------

TEST(LoadProblem, ExampleOne) {
  for (const char* file : {"example1.json", "example1.csv"}) {
    const auto p = workbench::load_problem(kData / file);
    EXPECT_EQ(p.alternative_count(), 4u);
    EXPECT_EQ(p.criterion_count(), 5u);
    double sum = 0;
    for (double w : p.weights()) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-6);
    EXPECT_EQ(p.values, testing::example1().values);
  }
}

TEST(LoadProblem, ExampleTwoHasTwoCostCriteria) {
  for (const char* file : {"example2.json", "example2.csv"}) {
    const auto p = workbench::load_problem(kData / file);
    EXPECT_EQ(p.alternative_count(), 8u);
    EXPECT_EQ(p.criterion_count(), 6u);
    EXPECT_EQ(p.criteria[2].direction, Direction::Cost);
    EXPECT_EQ(p.criteria[3].direction, Direction::Cost);
    EXPECT_EQ(p.criteria[0].direction, Direction::Benefit);
    EXPECT_EQ(p.values, testing::example2().values);
  }
}

TEST_F(TempDir, ShortCsvRowIsParseErrorNamingTheRow) {
  const auto p = write("short.csv",
                       "criterion,C1,C2,C3,C4,C5\ndirection,max,max,max,max,max\n"
                       "weight,0.2,0.2,0.2,0.2,0.2\nA1,1,2,3,4,5\nA2,1,2,3,4\n");
  try {
    workbench::load_problem(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("A2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
  }
}

TEST_F(TempDir, ShortJsonRowIsParseErrorNamingTheRow) {
  const auto p = write("short.json", R"({"name":"s","criteria":[
      {"name":"a","direction":"max","weight":0.5},{"name":"b","direction":"min","weight":0.5}],
      "alternatives":[{"name":"x","values":[1,2]},{"name":"shorty","values":[1]}]})");
  try {
    workbench::load_problem(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("shorty"), std::string::npos);
  }
}

TEST_F(TempDir, MalformedInputs) {
  EXPECT_EQ(load_error(write("bad.json", "{\"criteria\": [")), ErrorKind::ParseError);
  EXPECT_EQ(load_error(write("dir.csv", "c,a,b\ndirection,max,up\nweight,0.5,0.5\nx,1,2\ny,3,4\n")),
            ErrorKind::ParseError);
  EXPECT_EQ(load_error(write("num.csv", "c,a,b\ndirection,max,min\nweight,0.5,half\nx,1,2\ny,3,4\n")),
            ErrorKind::ParseError);
  EXPECT_EQ(load_error(dir_ / "missing.json"), ErrorKind::ParseError);
}

TEST_F(TempDir, ValidationErrorsPassThroughWithFileContext) {
  const auto p = write("zero.csv", "c,a,b\ndirection,max,min\nweight,0.5,0.5\nx,0,2\ny,3,4\n");
  try {
    workbench::load_problem(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveValue);
    EXPECT_NE(std::string(e.what()).find("zero.csv"), std::string::npos);
  }
}

TEST_F(TempDir, AutoFormatSniffsContent) {
  const auto p = write("problem.txt", workbench::emit_problem_json(testing::example1()));
  EXPECT_EQ(workbench::load_problem(p), testing::example1());
}

TEST_F(TempDir, EmitThenLoadIsIdentity) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0.001, 1e6);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const std::size_t m = 2 + static_cast<std::size_t>(trial % 4);
    std::vector<Criterion> crits;
    for (std::size_t j = 0; j < n; ++j)
      crits.push_back({"c, \"" + std::to_string(j), j % 2 ? Direction::Cost : Direction::Benefit,
                       j + 1 < n ? 1.0 / static_cast<double>(n) : 0.0});
    double rest = 1.0;
    for (std::size_t j = 0; j + 1 < n; ++j) rest -= crits[j].weight;
    crits.back().weight = rest;
    std::vector<std::string> alts;
    std::vector<std::vector<double>> rows(m, std::vector<double>(n));
    for (std::size_t i = 0; i < m; ++i) {
      alts.push_back("alt " + std::to_string(i));
      for (auto& x : rows[i]) x = u(rng);
    }
    auto problem = make_problem("random " + std::to_string(trial), crits, alts, rows);
    EXPECT_EQ(workbench::load_problem(write("p.json", workbench::emit_problem_json(problem))), problem);
    problem.name.clear();  // the CSV form has no name slot
    EXPECT_EQ(workbench::load_problem(write("p.csv", workbench::emit_problem_csv(problem))), problem);
  }
}

TEST(FormatNumber, RoundTripsAndKeepsPrecision) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_EQ(std::stod(workbench::format_number(x)), x);
  }
  EXPECT_EQ(workbench::format_number(0.1), "0.1");
}

// --- Reports ----------------------------------------------------------------

TEST(Report, TopsisNumbersSurviveReparse) {
  const auto o = topsis(testing::example2(), NormalizationScheme::Logarithmic);
  const auto text = workbench::dump_report(
      workbench::make_report("rank", testing::example2(), workbench::topsis_to_json(o)));
  const auto doc = json::parse(text);
  EXPECT_EQ(doc["format_version"], workbench::kReportFormatVersion);
  const auto cc = doc["payload"]["closeness"].get<std::vector<double>>();
  for (std::size_t i = 0; i < cc.size(); ++i) EXPECT_NEAR(cc[i], o.closeness[i], 1e-12);
  const auto w = doc["payload"]["weighted"];
  for (std::size_t i = 0; i < o.weighted.rows(); ++i)
    for (std::size_t j = 0; j < o.weighted.cols(); ++j)
      EXPECT_NEAR(w[i][j].get<double>(), o.weighted(i, j), 1e-12);
  EXPECT_EQ(doc["payload"]["ranking"]["ranks"].get<std::vector<int>>(), o.ranking.ranks);
}

TEST(Report, VikorAndSuitesSerialize) {
  const auto v = vikor(testing::example1(), NormalizationScheme::Vector);
  const auto vj = workbench::vikor_to_json(v);
  EXPECT_EQ(vj["q"].get<std::vector<double>>(), v.q);
  EXPECT_EQ(vj["strategy_weight"].get<double>(), 0.5);

  const auto variants = default_variants();
  const auto s = sensitivity_suite(testing::example2(), variants, 21);
  const auto sj = workbench::sensitivity_to_json(s);
  EXPECT_EQ(sj["scc_vs_base"].size(), 4u);
  EXPECT_EQ(sj["scc_vs_base"][0].size(), 21u);
  EXPECT_EQ(sj["scenarios"][20]["weights"].size(), 6u);

  const auto d = dynamic_suite(testing::example1(), variants);
  const auto dj = workbench::dynamic_to_json(d);
  EXPECT_EQ(dj["trajectories"].size(), 4u);
  EXPECT_EQ(dj["trajectories"][2]["reversals"].size(), d.trajectories[2].reversals.size());
}

TEST(Report, CsvCompanions) {
  const auto variants = default_variants();
  const auto s = sensitivity_suite(testing::example2(), variants, 21);
  const auto csv = workbench::scenario_csv(s);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 4 * 21);
  EXPECT_EQ(csv.rfind("scenario,method,scc\n", 0), 0u);

  const auto d = dynamic_suite(testing::example1(), variants);
  const auto dcsv = workbench::dynamic_csv(d);
  // Each trajectory: 4 + 3 + 2 rows.
  EXPECT_EQ(std::count(dcsv.begin(), dcsv.end(), '\n'), 1 + 4 * 9);
}

// --- Commands --------------------------------------------------------------

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename Opts, typename Fn>
Run run(Fn fn, const Opts& opts) {
  std::ostringstream out, err;
  const int code = fn(opts, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> printed_order(const std::string& table) {
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string rank, name;
    row >> rank >> name;
    names.push_back(name);
  }
  return names;
}

TEST_F(TempDir, RankVikorVectorExampleOne) {
  cli::RankOptions o;
  o.problem = kData / "example1.json";
  o.method = "vikor";
  o.norm = "vector";
  o.out = dir_ / "r.json";
  const auto r = run(cli::cmd_rank, o);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(printed_order(r.out), (std::vector<std::string>{"A3", "A1", "A2", "A4"}));
  const auto doc = json::parse(slurp(*o.out));
  EXPECT_EQ(doc["kind"], "rank");
  EXPECT_EQ(doc["payload"]["ranking"]["ranks"].get<std::vector<int>>(), (std::vector<int>{2, 3, 1, 4}));
}

TEST_F(TempDir, RankTopsisLogExampleTwo) {
  cli::RankOptions o;
  o.problem = kData / "example2.csv";
  o.method = "topsis";
  o.norm = "log";
  o.out = dir_ / "r.csv";
  o.format = "csv";
  const auto r = run(cli::cmd_rank, o);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(printed_order(r.out).front(), "A5");
  EXPECT_EQ(slurp(*o.out).rfind("alternative,d_plus,d_minus,closeness,rank\n", 0), 0u);
}

TEST(Commands, FlagRangeErrorsExitTwo) {
  cli::RankOptions o;
  o.problem = kData / "example1.json";
  o.method = "vikor";
  o.strategy_weight = 1.5;
  const auto r = run(cli::cmd_rank, o);
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("--v"), std::string::npos);

  cli::SensitivityOptions s;
  s.problem = kData / "example1.json";
  s.scenarios = 1;
  EXPECT_EQ(run(cli::cmd_sensitivity, s).code, cli::kExitInput);

  cli::RankOptions bad_norm;
  bad_norm.problem = kData / "example1.json";
  bad_norm.norm = "cubic";
  EXPECT_EQ(run(cli::cmd_rank, bad_norm).code, cli::kExitInput);
}

TEST_F(TempDir, UnwritableOutputIsInternalError) {
  cli::RankOptions o;
  o.problem = kData / "example1.json";
  o.out = dir_ / "no" / "such" / "dir" / "r.json";
  EXPECT_EQ(run(cli::cmd_rank, o).code, cli::kExitInternal);
}

TEST_F(TempDir, SensitivityWritesWeightTableAndCsv) {
  cli::SensitivityOptions o;
  o.problem = kData / "example1.json";
  o.out = dir_ / "sens.json";
  const auto r = run(cli::cmd_sensitivity, o);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(slurp(*o.out));
  const auto& sc = doc["payload"]["scenarios"];
  ASSERT_EQ(sc.size(), 21u);
  EXPECT_NEAR(sc[0]["weights"][4].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(sc[20]["weights"][4].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(fs::exists(dir_ / "sens.scc.csv"));
}

TEST_F(TempDir, SensitivityExampleTwoEmitsFourByTwentyOne) {
  cli::SensitivityOptions o;
  o.problem = kData / "example2.json";
  o.out = dir_ / "sens.json";
  ASSERT_EQ(run(cli::cmd_sensitivity, o).code, 0);
  const auto doc = json::parse(slurp(*o.out));
  EXPECT_EQ(doc["payload"]["scc_vs_base"].size(), 4u);
  for (const auto& row : doc["payload"]["scc_vs_base"]) EXPECT_EQ(row.size(), 21u);
}

TEST_F(TempDir, SensitivityMethodSelection) {
  cli::SensitivityOptions o;
  o.problem = kData / "example2.json";
  o.methods = {"vikor:log", "topsis:minmax"};
  o.out = dir_ / "sens.json";
  ASSERT_EQ(run(cli::cmd_sensitivity, o).code, 0);
  const auto doc = json::parse(slurp(*o.out));
  EXPECT_EQ(doc["payload"]["variants"][1]["label"], "topsis:minmax");

  o.methods = {"promethee"};
  EXPECT_EQ(run(cli::cmd_sensitivity, o).code, cli::kExitInput);
}

TEST_F(TempDir, DynamicExampleOneSummary) {
  cli::DynamicOptions o;
  o.problem = kData / "example1.json";
  o.out = dir_ / "dyn.json";
  const auto r = run(cli::cmd_dynamic, o);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(slurp(*o.out));
  for (const auto& t : doc["payload"]["trajectories"]) {
    const auto label = t["variant"]["label"].get<std::string>();
    if (label == "vikor:vector") EXPECT_GE(t["reversals"].size(), 1u);
    if (label == "topsis:log") EXPECT_EQ(t["reversals"].size(), 0u);
  }
  EXPECT_TRUE(fs::exists(dir_ / "dyn.stages.csv"));
  EXPECT_NE(r.out.find("topsis:log"), std::string::npos);
}

TEST_F(TempDir, DynamicExampleTwoWinner) {
  cli::DynamicOptions o;
  o.problem = kData / "example2.json";
  o.out = dir_ / "dyn.json";
  ASSERT_EQ(run(cli::cmd_dynamic, o).code, 0);
  const auto doc = json::parse(slurp(*o.out));
  for (const auto& t : doc["payload"]["trajectories"]) {
    EXPECT_EQ(t["initial_winner"].get<std::size_t>(), 4u);
    EXPECT_EQ(t["stages"].size(), 7u);
  }
}

TEST_F(TempDir, DynamicRejectsTwoAlternatives) {
  const auto p = write("two.csv", "c,a\ndirection,max\nweight,1\nx,3\ny,4\n");
  cli::DynamicOptions o;
  o.problem = p;
  EXPECT_EQ(run(cli::cmd_dynamic, o).code, cli::kExitInput);
}

TEST_F(TempDir, CompareExamples) {
  cli::CompareOptions o;
  o.problem = kData / "example1.json";
  o.out = dir_ / "cmp1.json";
  ASSERT_EQ(run(cli::cmd_compare, o).code, 0);
  auto doc = json::parse(slurp(*o.out));
  const auto ranks = [&](std::size_t k) {
    return doc["payload"]["outcomes"][k]["ranking"]["ranks"].get<std::vector<int>>();
  };
  EXPECT_EQ(ranks(0), ranks(1));  // TOPSIS vector vs log

  o.problem = kData / "example2.json";
  o.out = dir_ / "cmp2.json";
  const auto r = run(cli::cmd_compare, o);
  ASSERT_EQ(r.code, 0);
  doc = json::parse(slurp(*o.out));
  EXPECT_EQ(ranks(2), ranks(3));  // VIKOR vector vs log
  // TOPSIS schemes differ exactly by swapping the 4th/5th and 6th/7th places.
  const auto tv = ranks(0);
  const auto tl = ranks(1);
  std::vector<int> swapped(tv);
  for (auto& x : swapped) {
    if (x == 4) x = 5; else if (x == 5) x = 4; else if (x == 6) x = 7; else if (x == 7) x = 6;
  }
  EXPECT_EQ(swapped, tl);
  EXPECT_EQ(doc["payload"]["scc"].size(), 4u);
  EXPECT_NE(r.out.find("Spearman"), std::string::npos);
}

TEST_F(TempDir, ReportsAreByteIdenticalAcrossRuns) {
  cli::SensitivityOptions o;
  o.problem = kData / "example2.json";
  o.out = dir_ / "a.json";
  ASSERT_EQ(run(cli::cmd_sensitivity, o).code, 0);
  o.out = dir_ / "b.json";
  ASSERT_EQ(run(cli::cmd_sensitivity, o).code, 0);
  EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "b.json"));
  EXPECT_EQ(slurp(dir_ / "a.scc.csv"), slurp(dir_ / "b.scc.csv"));
}

TEST_F(TempDir, BinaryExitCodes) {
  const std::string cli = MADM_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " > " + (dir_ / "o.txt").string() + " 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("rank " + (kData / "example1.json").string() + " --method vikor"), 0);
  EXPECT_EQ(status("rank " + (kData / "example1.json").string() + " --method vikor --v 1.5"), 2);
  EXPECT_EQ(status("rank --help"), 0);
  EXPECT_EQ(status("rank"), 2);
  EXPECT_EQ(status("sensitivity " + (kData / "example1.json").string() + " --scenarios 1"), 2);
}

}  // namespace
}  // namespace madm

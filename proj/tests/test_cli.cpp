#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "optonet/calc.hpp"
#include "optonet/commands.hpp"
#include "optonet/dataset.hpp"
#include "optonet/error.hpp"
#include "optonet/figures.hpp"
#include "optonet/scenario.hpp"

using namespace optonet;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + OPTONET_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p) != nullptr) r.out += buf.data();
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("optonet_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string scenario(const std::string& name) {
  return (bundled_data_dir() / "scenarios" / (name + ".json")).string();
}

Dataset sample() {
  Dataset d;
  d.name = "sample";
  d.columns = {{"i", ColumnType::integer}, {"x", ColumnType::real}, {"label", ColumnType::text}};
  d.add_row({std::int64_t{1}, 1.5e-6, std::string("a")});
  d.add_row({std::int64_t{-7}, std::numeric_limits<double>::quiet_NaN(), std::string("b c")});
  d.add_row({std::int64_t{0}, std::numeric_limits<double>::infinity(), std::string("")});
  d.add_row({std::int64_t{3}, 0.1 + 0.2, std::string("z")});
  d.provenance = {{"dataset", "sample"}};
  return d;
}

void expect_same(const Dataset& a, const Dataset& b) {
  ASSERT_EQ(a.rows.size(), b.rows.size());
  ASSERT_EQ(a.columns.size(), b.columns.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    for (std::size_t j = 0; j < a.columns.size(); ++j) EXPECT_TRUE(same_cell(a.rows[i][j], b.rows[i][j])) << i << ',' << j;
  }
}

}  // namespace

TEST(Dataset, CsvRoundTripIsExact) {
  const auto d = sample();
  const auto text = to_csv(d);
  EXPECT_EQ(text.substr(0, text.find('\n')), "i,x,label");
  EXPECT_EQ(text.find('\r'), std::string::npos);
  expect_same(d, parse_csv(text, d));
}

TEST(Dataset, JsonRoundTripIsExact) {
  const auto d = sample();
  const auto back = dataset_from_json(to_json(d));
  EXPECT_EQ(back.name, "sample");
  expect_same(d, back);
}

TEST(Dataset, RealFormatting) {
  EXPECT_EQ(format_real(1.5e-6), "1.5e-06");
  EXPECT_EQ(format_real(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_real(-std::numeric_limits<double>::infinity()), "-inf");
  for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, -2.5}) EXPECT_EQ(parse_real(format_real(v)), v);
}

TEST(Calc, ArgumentsAndErrors) {
  EXPECT_NEAR(calc("eq6", parse_calc_args({"--n", "1e6", "--L=3"})).value("degree"), 199.4, 0.1);
  EXPECT_THROW(calc("eq6", {{"n", 1e6}}), UsageError);
  EXPECT_THROW(calc("nope", {}), UsageError);
  EXPECT_THROW(calc("eq6", {{"n", 1e6}, {"L", 3.0}, {"bogus", 1.0}}), UsageError);
  EXPECT_THROW(parse_calc_args({"--n"}), UsageError);
  EXPECT_THROW(parse_calc_args({"--n", "abc"}), UsageError);
  try {
    calc("eq6", {{"n", 1e6}});
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("L"), std::string::npos);
  }
}

TEST(Calc, EveryFormulaRunsOnDefaults) {
  for (const auto& f : calc_formulas()) {
    std::map<std::string, double> args;
    bool all_defaulted = true;
    for (const auto& p : f.params) {
      if (p.required) all_defaulted = false;
    }
    if (!all_defaulted) continue;
    const auto r = calc(f.name, args);
    EXPECT_FALSE(r.outputs.empty()) << f.name;
    EXPECT_TRUE(r.to_json().contains("outputs")) << f.name;
  }
}

TEST(Scenario, UnknownKeysAndMultipleProblems) {
  auto j = nlohmann::json::parse(R"({"duration_s": -1, "colour": 3,
      "graph": {"kind": "explicit", "n": 2, "edges": [[0, 1]]},
      "neuron": {"threshold": "high"}})");
  try {
    (void)parse_scenario(j);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_GE(e.problems().size(), 3u);
    std::string all;
    for (const auto& p : e.problems()) all += p + "\n";
    EXPECT_NE(all.find("colour"), std::string::npos);
  }
}

TEST(Scenario, AssignmentsOverrideValues) {
  auto j = nlohmann::json::parse(R"({"a": {"b": 1}})");
  apply_assignment(j, "a.b=2.5");
  apply_assignment(j, "a.c.d=true");
  apply_assignment(j, "name=hello");
  EXPECT_EQ(j["a"]["b"], 2.5);
  EXPECT_EQ(j["a"]["c"]["d"], true);
  EXPECT_EQ(j["name"], "hello");
  EXPECT_THROW(apply_assignment(j, "novalue"), UsageError);
  EXPECT_THROW(apply_assignment(j, "=3"), UsageError);

  ScenarioOverrides o;
  o.seed = 99;
  o.assignments = {"neuron.threshold=2"};
  const auto sc = load_scenario(scenario("two-synapse-coincidence"), o);
  EXPECT_EQ(sc.config.seed, 99u);
  EXPECT_EQ(sc.config.neuron_defaults.threshold, 2.0);
}

TEST(Scenario, BundledScenariosParse) {
  for (const auto& e : fs::directory_iterator(bundled_data_dir() / "scenarios")) {
    EXPECT_NO_THROW((void)load_scenario(e.path())) << e.path();
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("calc eq1 --nph 7 --etad 0.7").code, 0);
  EXPECT_EQ(cli("calc eq6 --n 1e6").code, 2);
  EXPECT_EQ(cli("calc nosuch").code, 2);
  EXPECT_EQ(cli("--bogus-flag").code, 2);
  EXPECT_EQ(cli("figure nosuch").code, 2);
  EXPECT_EQ(cli("simulate").code, 2);

  const auto dir = scratch("bad");
  std::ofstream(dir / "bad.json") << R"({"duration_s": 1e-3, "graph": {"kind": "fanout", "targets": 2}, "wat": 1})";
  const auto r = cli("simulate --config " + (dir / "bad.json").string() + " --out " + dir.string());
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find("wat"), std::string::npos);
  std::ofstream(dir / "broken.json") << "{not json";
  EXPECT_EQ(cli("simulate --config " + (dir / "broken.json").string()).code, 3);
  EXPECT_EQ(cli("simulate --config " + (dir / "missing.json").string()).code, 3);
}

TEST(Cli, CalcOutputFormats) {
  const auto text = cli("calc squid --ic 300e-6");
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("w_sq = "), std::string::npos);
  const auto js = cli("calc squid --ic 300e-6 --format json");
  ASSERT_EQ(js.code, 0) << js.out;
  const auto j = nlohmann::json::parse(js.out);
  EXPECT_EQ(j["formula"], "squid");
}

TEST(Cli, CoincidenceScenarioFiresOnce) {
  const auto dir = scratch("coincidence");
  const auto r = cli("simulate --config " + scenario("two-synapse-coincidence") + " --out " + dir.string());
  ASSERT_EQ(r.code, 0) << r.out;
  const auto ledger = nlohmann::json::parse(slurp(dir / "ledger.json"));
  EXPECT_EQ(ledger["spike_counts"][2], 1);
  Dataset schema;
  schema.columns = {{"neuron_id", ColumnType::integer}, {"time_s", ColumnType::real}};
  const auto spikes = parse_csv(slurp(dir / "spikes.csv"), schema);
  std::size_t from_two = 0;
  for (const auto& row : spikes.rows) from_two += std::get<std::int64_t>(row[0]) == 2;
  EXPECT_EQ(from_two, 1u);
  const auto prov = nlohmann::json::parse(slurp(dir / "spikes.provenance.json"));
  EXPECT_EQ(prov["artifact_version"], std::string(artifact_version));
  EXPECT_TRUE(prov.contains("parameters"));
}

TEST(Cli, PoissonLinkWithinThreeSigma) {
  const auto dir = scratch("poisson");
  ASSERT_EQ(cli("simulate --config " + scenario("poisson-link") + " --out " + dir.string()).code, 0);
  const auto rep = nlohmann::json::parse(slurp(dir / "ledger.json"))["synapse_report"];
  const double det = rep["detections"].get<double>();
  const double n = det + rep["misses"].get<double>();
  EXPECT_EQ(n, 1e5);
  EXPECT_LT(std::abs(det / n - 0.99), 3.0 * std::sqrt(0.99 * 0.01 / n));
}

TEST(Cli, SimulationIsByteIdenticalOnRerun) {
  const auto a = scratch("rerun_a"), b = scratch("rerun_b");
  for (const auto& dir : {a, b}) {
    ASSERT_EQ(cli("simulate --config " + scenario("stdp-er") + " --out " + dir.string()).code, 0);
  }
  EXPECT_EQ(slurp(a / "spikes.csv"), slurp(b / "spikes.csv"));
  EXPECT_EQ(slurp(a / "ledger.json"), slurp(b / "ledger.json"));
  EXPECT_FALSE(slurp(a / "spikes.csv").empty());

  const auto c = scratch("rerun_c");
  ASSERT_EQ(cli("simulate --seed 2 --config " + scenario("stdp-er") + " --out " + c.string()).code, 0);
  EXPECT_NE(slurp(a / "spikes.csv"), slurp(c / "spikes.csv"));
}

TEST(Cli, FiguresWriteDatasets) {
  const auto dir = scratch("figures");
  for (const auto& id : figure_ids()) {
    const auto r = cli("figure " + id + " --out " + dir.string());
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(dir / (id + ".csv"))) << id;
    EXPECT_TRUE(fs::exists(dir / (id + ".provenance.json"))) << id;
  }
  ASSERT_EQ(cli("figure fig7 --format json --out " + dir.string()).code, 0);
  const auto d = dataset_from_json(nlohmann::json::parse(slurp(dir / "fig7.json")));
  EXPECT_FALSE(d.rows.empty());
  EXPECT_EQ(cli("figure fig7 --set nonsense=1 --out " + dir.string()).code, 2);
}

TEST(Cli, ValidateEq6Passes) {
  const auto r = cli("validate-eq6 --n 1000 --k 20 --seeds 5");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("yes"), std::string::npos);
}

TEST(Cli, MembenchReportsUnknowns) {
  const auto r = cli("membench");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("> 10^11 updates"), std::string::npos);
  EXPECT_NE(r.out.find("unknown"), std::string::npos);
  EXPECT_EQ(cli("membench --set fanin=0.5").code, 3);
  EXPECT_EQ(cli("membench --set colour=1").code, 2);
}

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "liouville/cli/cli.hpp"

namespace liouville::cli {
namespace {

namespace fs = std::filesystem;

int invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "liouville-lab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return main_entry(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("liouville_cli_" + name); }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(CliParsing, Lists) {
  EXPECT_EQ(parse_reals("8, 16,32"), (std::vector<double>{8, 16, 32}));
  EXPECT_EQ(parse_ints("4,8"), (std::vector<int>{4, 8}));
  const auto pts = parse_points("-0.25,0;0.25,0");
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].x, -0.25);
  EXPECT_THROW(parse_points("1,2,3"), ConfigError);
  EXPECT_THROW(parse_reals("1,x"), ConfigError);
}

TEST(CliParsing, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(validate(c));
  c.mu = 2.5;
  EXPECT_THROW(validate(c), ConfigError);
  c.mu = 1.0;
  c.n = 100;
  EXPECT_THROW(validate(c), ConfigError);
  c.n = 4096;
  EXPECT_THROW(validate(c), ConfigError);
  c.n = 64;
  c.experiment = "nope";
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(CliParsing, ConfigFile) {
  const fs::path p = scratch("cfg.txt");
  std::ofstream(p) << "# comment\nexperiment = rigged\nmu=0.5\nks=4,8\nn=256\n";
  RunConfig c;
  apply_config_file(p.string(), c, {"mu"});
  EXPECT_EQ(c.experiment, "rigged");
  EXPECT_EQ(c.mu, 1.0);
  EXPECT_EQ(c.ks, (std::vector<int>{4, 8}));
  EXPECT_EQ(c.n.value(), 256);
  std::ofstream(p) << "unknown=1\n";
  EXPECT_THROW(apply_config_file(p.string(), c), ConfigError);
  EXPECT_THROW(apply_config_file("/nonexistent/cfg", c), ConfigError);
}

TEST(CliEmit, HeaderOnlyForEmptyReport) {
  EXPECT_EQ(to_csv(ExperimentReport{}), "experiment,param_name,param_value,quantity,value,target,tolerance,pass\n");
  EXPECT_EQ(to_json(ExperimentReport{}), "[]\n");
}

TEST(CliEmit, QuantizationRow) {
  ExperimentReport rep;
  rep.id = "quantization";
  rep.info("delta", "8", "mass_BR", 24.0, 8.0 * 3.14159265358979323846);
  const std::string csv = to_csv(rep);
  EXPECT_EQ(line_count(csv), 2u);
  EXPECT_NE(csv.find("quantization,delta,8,mass_BR,24,25.132741,inf,true\n"), std::string::npos);
}

TEST(CliEmit, JsonMirrorsCsv) {
  ExperimentReport rep;
  rep.id = "x";
  rep.check("a", "1", "q", 1.0, 1.0, 0.1);
  rep.info("a", "2", "r", std::nan(""));
  rep.at_most("a", "3", "s", 2.0, 1.0);
  const auto arr = nlohmann::json::parse(to_json(rep));
  ASSERT_TRUE(arr.is_array());
  EXPECT_EQ(arr.size(), line_count(to_csv(rep)) - 1);
  EXPECT_EQ(arr[1]["value"], "nan");
  EXPECT_EQ(arr[0]["quantity"], "q");
  EXPECT_EQ(arr[3]["pass"], false);
}

TEST(CliEmit, UnwritablePath) {
  EXPECT_THROW(emit_report(ExperimentReport{}, Format::Csv, "/nonexistent/dir/out.csv"), ConfigError);
}

TEST(CliRun, ExitCodes) {
  EXPECT_EQ(invoke({"--mu", "2.5"}), kExitConfig);
  EXPECT_EQ(invoke({"--experiment", "bogus"}), kExitConfig);
  EXPECT_EQ(invoke({"--n", "100"}), kExitConfig);
  EXPECT_EQ(invoke({"--out", "/nonexistent/dir/x.csv", "--deltas", "8,16", "--n", "256"}), kExitConfig);
  EXPECT_EQ(invoke({"--inject-fault", "other"}), kExitConfig);
}

TEST(CliRun, QuantizationDefaultsPass) {
  const fs::path out = scratch("quant.csv");
  EXPECT_EQ(invoke({"--experiment", "quantization", "--mu", "1", "--out", out.string()}), kExitPass);
  const std::string csv = slurp(out);
  EXPECT_NE(csv.find("quantization,deltas,extrapolated,mass_BR,"), std::string::npos);
}

TEST(CliRun, DeterministicOutput) {
  const fs::path a = scratch("det_a.csv"), b = scratch("det_b.csv");
  for (const auto& p : {a, b}) {
    invoke({"--experiment", "quantization", "--deltas", "8,16", "--n", "256", "--seed", "5", "--out", p.string()});
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(CliRun, FaultInjectionFailsOracle) {
  const fs::path clean = scratch("verify.csv"), broken = scratch("verify_fault.json");
  EXPECT_EQ(invoke({"--experiment", "verify-core", "--out", clean.string()}), kExitPass);
  EXPECT_EQ(invoke({"--experiment", "verify-core", "--inject-fault", "kernel", "--format", "json", "--out",
                    broken.string()}),
            kExitTolerance);
  const auto arr = nlohmann::json::parse(slurp(broken));
  bool oracle_failed = false;
  for (const auto& row : arr) {
    const std::string q = row["quantity"];
    if (q.rfind("oracle_rel_dev", 0) == 0 && !row["pass"].get<bool>()) oracle_failed = true;
  }
  EXPECT_TRUE(oracle_failed);
}

TEST(CliRun, ConfigFileWithCommandLineOverride) {
  const fs::path cfg = scratch("run.cfg"), out = scratch("run.csv");
  std::ofstream(cfg) << "experiment=quantization\ndeltas=8,16\nn=256\nmu=2.5\n";
  EXPECT_EQ(invoke({"--config", cfg.string(), "--out", out.string()}), kExitConfig);
  EXPECT_EQ(invoke({"--config", cfg.string(), "--mu", "1", "--out", out.string()}), kExitPass);
}

TEST(CliTool, BinaryRuns) {
  const fs::path out = scratch("tool.csv");
  const std::string cmd = std::string(LIOUVILLE_LAB_EXE) + " --mu 2.5 --out " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitConfig);
}

}  // namespace
}  // namespace liouville::cli

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using abkm::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / fs::path("abkm_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

}  // namespace

TEST(CliGolden, MatchesCheckedInFiles) {
  const fs::path golden = ABKM_GOLDEN_DIR;
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"table1"}, "table1.csv"},
      {{"profile"}, "profile_alpha_half.csv"},
      {{"profile", "--alpha", "-0.3333333333333333"}, "profile_alpha_third.csv"},
      {{"rcrit", "--alpha", "-0.5", "--both"}, "rcrit_alpha_half.csv"},
      {{"rcrit", "--alpha", "-0.3333333333333333", "--both"}, "rcrit_alpha_third.csv"},
  };
  for (const auto& [args, file] : cases) {
    const auto r = call(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, slurp(golden / file)) << file;
  }
}

TEST(CliTable1, RatiosAtPrintedPrecision) {
  const auto r = call({"table1", "--no-header"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[0], "alpha,n,element,ratio,ab_effect");
  EXPECT_EQ(rows[1], "-1,1,H,-1.0,no");
  EXPECT_EQ(rows[5], "-0.2,5,B,0.276,yes");
  EXPECT_EQ(rows[9], "-0.111111,9,F,0.21,yes");
  EXPECT_EQ(rows[13], "-0.00847458,118,Og,0.018,yes");
}

TEST(CliTable1, JsonFormat) {
  const auto r = call({"table1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 13u);
  EXPECT_EQ(doc[1]["element"], "He");
  EXPECT_TRUE(doc[1]["ab_effect"].get<bool>());
  EXPECT_FALSE(doc[0]["ab_effect"].get<bool>());
}

TEST(CliProfile, HorizontalLineAndRadians) {
  const auto r = call({"profile", "--rk", "0.5", "--angle-unit", "rad", "--no-header"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 181u);
  EXPECT_EQ(rows[0], "theta_rad,rk,ratio");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_TRUE(rows[i].ends_with(",0.5,-0.5")) << rows[i];
}

TEST(CliProfile, ValidationErrors) {
  EXPECT_EQ(call({"profile", "--theta-step-deg", "0"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"profile", "--rk", "-1"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"profile", "--format", "xml"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"profile", "--alpha", "-0.5", "--alpha", "-0.4"}).code, abkm::cli::kValidation);
}

TEST(CliSimulate, MirroredResidualStaysAtRoundoff) {
  const auto r = call({"simulate", "--format", "json", "--record-every", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_GT(doc.size(), 2u);
  for (const auto& row : doc) {
    EXPECT_LT(row["phase_diff_residual"].get<double>(), 1e-10);
    const double theta1 = row["theta_1"];
    EXPECT_NEAR(row["phase_2"].get<double>() - row["phase_1"].get<double>(), theta1, 1e-10);
  }
  EXPECT_LT(doc.back()["theta_1"].get<double>(), 3.14159265358979);
}

TEST(CliSimulate, NBodyAndHalfPhase) {
  const auto n = call({"simulate", "--model", "n", "--theta-dots", "1,-1,0.5", "--theta0s", "0,0,0",
                       "--t-end", "0.5", "--no-header"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_EQ(lines(n.out)[0], "t,theta_1,theta_2,theta_3,phase_1,phase_2,phase_3,order_r");
  const auto h = call({"simulate", "--model", "half", "--t-end", "0.5", "--no-header"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(call({"simulate", "--model", "general", "--theta-dots", "1,-1,2", "--theta0s", "0,0,0"}).code,
            abkm::cli::kValidation);
  EXPECT_EQ(call({"simulate", "--model", "warp"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"simulate", "--theta-dots", "1,2", "--theta0s", "0"}).code, abkm::cli::kValidation);
}

TEST(CliSimulate, NonFinitePhaseIsNumericalFailure) {
  const auto r = call({"simulate", "--alpha", "1e308", "--theta-dot", "10", "--dt", "0.01", "--t-end", "0.1"});
  EXPECT_EQ(r.code, abkm::cli::kNumerical);
  EXPECT_NE(r.err.find("t=0.01"), std::string::npos) << r.err;
}

TEST(CliRcrit, ModesAndErrors) {
  const auto closed = call({"rcrit", "--alpha", "-0.5", "--closed", "--no-header"});
  ASSERT_EQ(closed.code, 0) << closed.err;
  EXPECT_EQ(closed.out, "alpha,rk_crit_closed_form\n-0.5,0.5\n");
  EXPECT_EQ(call({"rcrit", "--alpha", "-0.5", "--no-header"}).out,
            "alpha,rk_crit_closed_form,rk_crit_scan,discrepancy\n-0.5,0.5,0.5,0\n");
  const auto scan = call({"rcrit", "scan", "--alpha", "-0.25", "--format", "json"});
  ASSERT_EQ(scan.code, 0) << scan.err;
  const auto doc = nlohmann::json::parse(scan.out);
  EXPECT_FALSE(doc.contains("rk_crit_closed_form"));
  const auto both = nlohmann::json::parse(call({"rcrit", "--alpha", "-0.25", "--format", "json"}).out);
  EXPECT_NEAR(doc["rk_crit_scan"].get<double>(), both["rk_crit_closed_form"].get<double>(), 1e-6);
  EXPECT_LT(both["discrepancy"].get<double>(), 1e-6);
  EXPECT_EQ(call({"rcrit", "--alpha", "-0.5", "sideways"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"rcrit"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"rcrit", "--alpha", "0"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"rcrit", "--alpha", "0.3"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"rcrit", "--alpha", "-0.5", "--scan", "--rk-lo", "0.6", "--rk-hi", "0.7"}).code,
            abkm::cli::kSearch);
}

TEST(CliSync, JsonByDefault) {
  const auto r = call({"sync", "--alpha", "-0.1", "--theta-dot", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["k"].get<double>(), 2.0);
  EXPECT_NEAR(doc["k_critical"].get<double>(), 0.4, 1e-15);
  EXPECT_TRUE(doc["synchronizes"].get<bool>());
  const auto edge = nlohmann::json::parse(call({"sync", "--alpha", "-0.5", "--theta-dot", "1"}).out);
  EXPECT_TRUE(edge["synchronizes"].get<bool>());
  const auto off = nlohmann::json::parse(call({"sync", "--alpha", "0.75", "--theta-dot", "-2"}).out);
  EXPECT_FALSE(off["synchronizes"].get<bool>());
  EXPECT_EQ(call({"sync", "--alpha", "-0.1", "--theta-dot", "0"}).code, abkm::cli::kValidation);
}

TEST(CliWavefunction, IntegerAlphaHasNoScatteredWave) {
  const auto r = call({"wavefunction", "--alpha", "-1", "--rk", "0.5", "--theta", "0,1.5", "--no-header"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[1].ends_with(",0")) << rows[1];
  EXPECT_TRUE(rows[2].ends_with(",0")) << rows[2];
  EXPECT_EQ(call({"wavefunction", "--alpha", "-0.5", "--rk", "0.5", "--theta", "3.141592653589793"}).code,
            abkm::cli::kValidation);
}

TEST(CliIo, OutputFileAndErrors) {
  TempDir dir;
  const auto target = dir / "t.csv";
  ASSERT_EQ(call({"table1", "-o", target.string()}).code, 0);
  EXPECT_EQ(slurp(target), call({"table1"}).out);
  EXPECT_EQ(call({"table1", "--out", (dir / "missing" / "t.csv").string()}).code, abkm::cli::kIo);
  EXPECT_EQ(call({"table1", "--config", (dir / "nope.cfg").string()}).code, abkm::cli::kIo);
}

TEST(CliConfig, FileValuesAndFlagOverride) {
  TempDir dir;
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# window for the -1/3 family\nalpha = -0.5\nrk=0.5\ntheta_max_deg = 10\nno-header = true\n";
  const auto from_file = call({"profile", "--config", cfg.string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(lines(from_file.out).size(), 12u);
  EXPECT_EQ(lines(from_file.out)[0], "theta_deg,rk,ratio");
  const auto overridden = call({"profile", "--config", cfg.string(), "--rk", "0.2"});
  ASSERT_EQ(overridden.code, 0) << overridden.err;
  EXPECT_TRUE(lines(overridden.out)[1].starts_with("0,0.2,"));

  std::ofstream(dir / "bad.cfg") << "velocity = 3\n";
  EXPECT_EQ(call({"profile", "--config", (dir / "bad.cfg").string()}).code, abkm::cli::kValidation);
  std::ofstream(dir / "garbled.cfg") << "just words\n";
  EXPECT_EQ(call({"profile", "--config", (dir / "garbled.cfg").string()}).code, abkm::cli::kValidation);
}

TEST(CliConfig, Parser) {
  std::istringstream in("# comment\n\n a_b = 1 # trailing\nc=x y\n");
  const auto kv = abkm::cli::parse_config(in);
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv[0], std::make_pair(std::string("a-b"), std::string("1")));
  EXPECT_EQ(kv[1], std::make_pair(std::string("c"), std::string("x y")));
}

TEST(CliCommon, Determinism) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"simulate", "--model", "n", "--theta-dots", "1,-1,0.3", "--theta0s", "0,0,0.2"},
        std::vector<std::string>{"profile", "--alpha", "-0.25"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
}

TEST(CliCommon, UsageErrors) {
  EXPECT_EQ(call({}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"frobnicate"}).code, abkm::cli::kValidation);
  EXPECT_EQ(call({"--help"}).code, 0);
}

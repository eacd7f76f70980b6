#include "hassett/cli.hpp"
#include "hassett/hassett.hpp"
#include "hassett/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hassett {
namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "hassett");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("hassett_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& contents) const {
    const auto p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string basis_text(const IntMatrix& basis) {
  std::ostringstream os;
  write_basis(os, basis);
  return os.str();
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"witness", "--d1", "12"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "yaml", "ambient"}).code, kExitUsage);
  EXPECT_EQ(run({"admissible", "--max", "6"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--max", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, InvalidDiscriminantIsUsageError) {
  const CliResult r = run({"witness", "--d1", "10", "--d2", "12"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("usage error"), std::string::npos);
  EXPECT_NE(r.err.find("d > 6"), std::string::npos);
  EXPECT_EQ(run({"rational-loci", "--d", "6"}).code, kExitUsage);
  EXPECT_EQ(run({"triple", "--d1", "14", "--d2", "4"}).code, kExitUsage);
}

TEST(Cli, Ambient) {
  const CliResult r = run({"ambient", "--check"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("signature: (21,2,0)"), std::string::npos);
  EXPECT_NE(r.out.find("primitive abs_det: 3"), std::string::npos);

  const Json doc = Json::parse(run({"--format", "json", "ambient", "--check"}).out);
  EXPECT_EQ(doc["report"]["primitive"]["rank"], 22);
  EXPECT_EQ(doc["report"]["primitive"]["even"], true);
}

TEST(Cli, AdmissibleStarOnly) {
  const CliResult r = run({"admissible", "--max", "40", "--star-only"});
  ASSERT_EQ(r.code, kExitPass);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "d star admissible");
  std::vector<int> ds;
  std::vector<int> admissible;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    int d;
    std::string star, adm;
    fields >> d >> star >> adm;
    EXPECT_EQ(star, "true");
    ds.push_back(d);
    if (adm == "true") admissible.push_back(d);
  }
  EXPECT_EQ(ds, (std::vector<int>{8, 12, 14, 18, 20, 24, 26, 30, 32, 36, 38}));
  EXPECT_EQ(admissible, (std::vector<int>{14, 26, 38}));
}

TEST(Cli, AdmissibleFullListingJson) {
  const Json doc = Json::parse(run({"--format", "json", "admissible", "--max", "10"}).out);
  ASSERT_EQ(doc["report"]["rows"].size(), 10u);
  EXPECT_EQ(doc["report"]["rows"][7]["d"], 8);
  EXPECT_EQ(doc["report"]["rows"][7]["star"], true);
  EXPECT_EQ(doc["report"]["rows"][5]["star"], false);
}

TEST(Cli, WitnessJsonDocument) {
  const CliResult r = run({"--format", "json", "witness", "--d1", "14", "--d2", "26"});
  ASSERT_EQ(r.code, kExitPass);
  const Json doc = Json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "command", "inputs", "ambient_convention", "report"}));
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["command"], "witness");
  EXPECT_EQ(doc["report"]["det_m"], "121");
  EXPECT_EQ(doc["report"]["expected_det"], "121");
  EXPECT_EQ(doc["report"]["kind"], "pair-witness");
  EXPECT_EQ(doc["report"]["pass"], true);
  EXPECT_EQ(doc["report"]["sub_reports"].size(), 2u);
}

TEST(Cli, TripleText) {
  const CliResult r = run({"triple", "--d1", "14", "--d2", "26"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("min_norm: 3"), std::string::npos);
  EXPECT_NE(r.out.find("codimension: 3"), std::string::npos);
}

TEST(Cli, RationalLoci) {
  const CliResult r = run({"--format", "json", "rational-loci", "--d", "12"});
  ASSERT_EQ(r.code, kExitPass);
  const Json doc = Json::parse(r.out);
  const auto& reports = doc["report"]["reports"];
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0]["det_m"], "56");
  EXPECT_EQ(reports[1]["det_m"], "104");
  EXPECT_EQ(reports[2]["det_m"], "152");
  EXPECT_EQ(doc["report"]["determinants_distinct"], true);
}

TEST(Cli, VerifyFiles) {
  TempDir dir;
  const auto good = dir.write("good.txt", "# (12,18) witness\n" + basis_text(pair_witness(12, 18).lattice.basis()));
  const CliResult pass = run({"verify", good});
  EXPECT_EQ(pass.code, kExitPass) << pass.err;
  EXPECT_NE(pass.out.find("user-supplied"), std::string::npos);

  IntMatrix doubled = AmbientLattice::h_squared().transpose() * 2;
  const CliResult fail = run({"verify", dir.write("double.txt", basis_text(doubled))});
  EXPECT_EQ(fail.code, kExitFail);
  EXPECT_NE(fail.out.find("saturated_in_L: false"), std::string::npos);

  std::string narrow = "1 23\n";
  for (int i = 0; i < 22; ++i) narrow += "0 ";
  const CliResult width = run({"verify", dir.write("narrow.txt", narrow + "\n")});
  EXPECT_EQ(width.code, kExitUsage);
  EXPECT_NE(width.err.find("width error"), std::string::npos);

  const CliResult parse = run({"verify", dir.write("junk.txt", "1 23\nnot numbers\n")});
  EXPECT_EQ(parse.code, kExitUsage);
  EXPECT_NE(parse.err.find("parse error"), std::string::npos);

  IntMatrix dependent(2, kAmbientRank);
  dependent.row(0) = AmbientLattice::h_squared().transpose();
  dependent.row(1) = AmbientLattice::h_squared().transpose() * 3;
  const CliResult rank = run({"verify", dir.write("dependent.txt", basis_text(dependent))});
  EXPECT_EQ(rank.code, kExitUsage);
  EXPECT_NE(rank.err.find("rank error"), std::string::npos);

  EXPECT_EQ(run({"verify", dir.path("missing.txt")}).code, kExitUsage);
}

TEST(Cli, BasisRoundTripsThroughVerify) {
  TempDir dir;
  const Json witness = Json::parse(run({"--format", "json", "witness", "--d1", "20", "--d2", "24"}).out);
  const Json& basis = witness["report"]["basis"];
  IntMatrix m(static_cast<Eigen::Index>(basis.size()), kAmbientRank);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Integer::parse(basis[i][j].get<std::string>());

  const Json verified = Json::parse(run({"--format", "json", "verify", dir.write("w.txt", basis_text(m))}).out);
  EXPECT_EQ(verified["report"]["gram"], witness["report"]["gram"]);
  EXPECT_EQ(verified["report"]["det_m"], witness["report"]["det_m"]);
  EXPECT_EQ(verified["report"]["pass"], true);
  EXPECT_EQ(verified["report"]["kind"], "user-supplied");
}

TEST(Cli, SweepIsDeterministic) {
  const CliResult a = run({"--format", "json", "sweep", "--max", "60", "--jobs", "1"});
  const CliResult b = run({"--format", "json", "sweep", "--max", "60", "--jobs", "4"});
  const CliResult c = run({"--format", "json", "sweep", "--max", "60", "--jobs", "1"});
  ASSERT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(run({"sweep", "--max", "60", "--jobs", "0"}).code, kExitPass);
}

TEST(Cli, OutputFile) {
  TempDir dir;
  const auto target = dir.path("out.json");
  const CliResult r = run({"--format", "json", "--output", target, "witness", "--d1", "12", "--d2", "18"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  const Json doc = Json::parse(in);
  EXPECT_EQ(doc["report"]["det_m"], "72");
}

TEST(Cli, ExitCodeTracksPass) {
  for (auto d1 : star_values(40)) {
    for (auto d2 : star_values(40)) {
      const CliResult r = run({"--format", "json", "witness", "--d1", std::to_string(d1), "--d2", std::to_string(d2)});
      const bool pass = Json::parse(r.out)["report"]["pass"];
      EXPECT_EQ(r.code, pass ? kExitPass : kExitFail);
    }
  }
}

}  // namespace
}  // namespace hassett

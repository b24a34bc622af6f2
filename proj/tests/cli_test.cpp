#include "qvira/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qvira {
namespace {

namespace fs = std::filesystem;

struct CommandResult {
  int code;
  std::string out;
  std::string err;
};

CommandResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qvira_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  fs::path dir_;
};

const fs::path kGolden = QVIRA_GOLDEN_DIR;

TEST_F(CliTest, Bracket) {
  const CommandResult r = invoke({"bracket", "t[1,1]", "t[2,0]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(q^2 - 1)*t[3,1]\n");
  EXPECT_EQ(invoke({"bracket", "t[1,0]", "t[-1,0]"}).out, "0\n");
}

TEST_F(CliTest, BracketParseErrorsExitTwo) {
  const CommandResult r = invoke({"bracket", "t[1,", "t[2,0]"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("expected"), std::string::npos);
  EXPECT_EQ(invoke({"bracket", "t[0,0]", "t[1,0]"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"validate"}).code, 2);
  EXPECT_EQ(invoke({"gen-table", "--family", "I", "--h", "1", "--j", "1", "--k", "1", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"gen-table", "--family", "V", "--h", "1", "--j", "1", "--k", "1"}).code, 2);
  EXPECT_EQ(invoke({"gen-table", "--family", "I", "--h", "1", "--j", "1", "--k", "1", "--mode", "numeric"}).code, 2);
  EXPECT_EQ(invoke({"gen-table", "--family", "I", "--h", "1", "--j", "1", "--k", "1", "--mode", "numeric", "--q", "1",
                 "--a-val", "3"}).code,
            2);
  EXPECT_EQ(invoke({"classify", path("missing.vlq")}).code, 2);
  EXPECT_EQ(invoke({"classify", write("bad.vlq", "vlq-table 1\nmode\n")}).code, 2);
}

TEST_F(CliTest, GenTableMatchesGolden) {
  const CommandResult r = invoke({"gen-table", "--family", "II", "--a", "a", "--h", "1", "--j", "1", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(kGolden / "family_ii_1_1_1.vlq"));
  const CommandResult n = invoke({"gen-table", "--family", "IV", "--h", "1", "--j", "1", "--k", "1", "--mode", "numeric", "--q", "2",
                     "--a-val", "3"});
  EXPECT_EQ(n.code, 0);
  EXPECT_EQ(n.out, slurp(kGolden / "family_iv_numeric_1_1_1.vlq"));
}

TEST_F(CliTest, GenTableWritesFileAndIsDeterministic) {
  const std::vector<std::string> args = {"gen-table", "--family", "III", "--h", "3", "--j", "3", "--k", "6", "-o",
                                         path("t3.vlq")};
  ASSERT_EQ(invoke(args).code, 0);
  const std::string first = slurp(path("t3.vlq"));
  ASSERT_EQ(invoke(args).code, 0);
  EXPECT_EQ(slurp(path("t3.vlq")), first);

  const CommandResult c = invoke({"classify", path("t3.vlq")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "verdict: IsoClass\norientation: Reverse\na: a\nexact-family: III\n");
  EXPECT_EQ(invoke({"validate", path("t3.vlq")}).code, 0);
  EXPECT_EQ(invoke({"irreducible", path("t3.vlq")}).out, "Irreducible\n");
  const CommandResult rel = invoke({"relations", path("t3.vlq")});
  EXPECT_EQ(rel.code, 0);
  EXPECT_NE(rel.out.find("b: (1)/(q)\n"), std::string::npos);
  EXPECT_EQ(rel.out.find("fail"), std::string::npos);
}

TEST_F(CliTest, BrokenTableGivesNegativeVerdicts) {
  ASSERT_EQ(invoke({"gen-table", "--family", "I", "--h", "3", "--j", "3", "--k", "6", "-o", path("t1.vlq")}).code, 0);
  std::string text = slurp(path("t1.vlq"));
  const std::string line = "f 0 1 0 a\n";
  const auto at = text.find(line);
  ASSERT_NE(at, std::string::npos);
  text.replace(at, line.size(), "f 0 1 0 a + 1\n");
  const std::string broken = write("broken.vlq", text);

  const CommandResult v = invoke({"validate", broken});
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(v.out.rfind("invalid: ", 0), 0U);
  EXPECT_NE(v.out.find("lhs="), std::string::npos);
  EXPECT_NE(v.out.find("rhs="), std::string::npos);
  const CommandResult c = invoke({"classify", broken});
  EXPECT_EQ(c.code, 1);
  EXPECT_NE(c.out.find("reason: BracketRelation"), std::string::npos);
}

TEST_F(CliTest, IrreducibleOnZeroTable) {
  const std::string zero =
      write("zero.vlq", "vlq-table 1\nmode symbolic\nk-range 0 1\ndims 11\nh-range -1 1\nj-range -1 1\n");
  const CommandResult r = invoke({"irreducible", zero});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "Reducible at degree 0 (up)\n");
}

TEST_F(CliTest, CheckAxioms) {
  const CommandResult r = invoke({"check-axioms", "--family", "IV", "--a", "q + a", "--bound", "1", "--kmax", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "checked: 320\nfailures: 0\n");
  EXPECT_EQ(invoke({"check-axioms", "--family", "I", "--a", "0"}).code, 2);
}

}  // namespace
}  // namespace qvira

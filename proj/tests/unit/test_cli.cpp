#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "polysurj/parser.hpp"
#include "polysurj/report.hpp"

namespace polysurj::cli {
namespace {

namespace fs = std::filesystem;

class CliRun : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("polysurj_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int exec(RunConfig config) {
    out_.str("");
    err_.str("");
    return run(config, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kCubic = "# cubic along a line\nn = 2\np1 = x^3 - x\np2 = y\n";

TEST_F(CliRun, AnalyzeCubicIsSurjective) {
  RunConfig c;
  c.input = write("cubic.txt", kCubic);
  EXPECT_EQ(exec(c), kDecisive);
  EXPECT_NE(out_.str().find("[degree-product] Surjective"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("[odd-fiber-parity] OddFiberParity"), std::string::npos);
}

TEST_F(CliRun, AnalyzeJsonParsesBack) {
  RunConfig c;
  c.input = write("cubic.txt", kCubic);
  c.format = Format::Json;
  c.samples = 3;
  c.seed = 17;
  ASSERT_EQ(exec(c), kDecisive);
  const auto certs = certificates_from_json(out_.str());
  ASSERT_EQ(certs.size(), 5u);
  EXPECT_EQ(certs[0].verdict, Certificate::Verdict::Surjective);
  EXPECT_NE(out_.str().find("\"first_surjective\": \"degree-product\""), std::string::npos);
  EXPECT_NE(out_.str().find("\"samples\""), std::string::npos);

  // Same seed, same report.
  const std::string first = out_.str();
  ASSERT_EQ(exec(c), kDecisive);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliRun, FiberCountsThree) {
  RunConfig c;
  c.command = Command::Fiber;
  c.input = write("cubic.txt", kCubic);
  c.target = std::vector<Rational>{0, 0};
  EXPECT_EQ(exec(c), kDecisive);
  EXPECT_NE(out_.str().find("count 3, parity Odd"), std::string::npos) << out_.str();
}

TEST_F(CliRun, FiberRejectsThreeVariables) {
  RunConfig c;
  c.command = Command::Fiber;
  c.input = write("three.txt", "n = 3\np1 = x\np2 = y\np3 = z\n");
  EXPECT_EQ(exec(c), kInputError);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(CliRun, InputErrors) {
  RunConfig c;
  c.input = write("broken.txt", "n = 2\np1 = x +\np2 = y\n");
  EXPECT_EQ(exec(c), kInputError);
  EXPECT_NE(err_.str().find("broken.txt:2:"), std::string::npos) << err_.str();

  c.input = (dir_ / "missing.txt").string();
  EXPECT_EQ(exec(c), kInputError);

  c.input = "builtin:nope";
  EXPECT_EQ(exec(c), kInputError);

  c.input = write("cubic.txt", kCubic);
  c.target = std::vector<Rational>{1, 2, 3};
  EXPECT_EQ(exec(c), kInputError);
}

TEST_F(CliRun, InconclusiveOnlyExitsTwo) {
  // Three variables: only-zero questions cannot be settled exactly, and no
  // gate fails outright.
  RunConfig c;
  c.input = write("cyclic.txt", "n = 3\np1 = x^3 + y\np2 = y^3 + z\np3 = z^3 + x\n");
  EXPECT_EQ(exec(c), kInconclusive) << out_.str();
}

TEST_F(CliRun, Leadform) {
  RunConfig c;
  c.command = Command::Leadform;
  c.input = write("cubic.txt", kCubic);
  EXPECT_EQ(exec(c), kDecisive);
  EXPECT_NE(out_.str().find("x^3"), std::string::npos);
  EXPECT_NE(out_.str().find("OnlyZero"), std::string::npos);
}

TEST_F(CliRun, NecessaryChecks) {
  RunConfig c;
  c.command = Command::Necessary;
  c.input = write("circle.txt", "n = 2\np1 = x^2 + y^2\np2 = y\n");
  EXPECT_EQ(exec(c), kDecisive);
  EXPECT_NE(out_.str().find("TheoremViolatedOrHypothesisFails"), std::string::npos) << out_.str();

  c.input = write("column.txt", "n = 2\np1 = x\np2 = y\ng11 = x^3\ng12 = 0\ng21 = x + y\ng22 = 1\n");
  c.necessary = NecessaryCheck::Column;
  c.column = 1;
  EXPECT_EQ(exec(c), kDecisive);
  EXPECT_NE(out_.str().find("TheoremViolatedOrHypothesisFails"), std::string::npos) << out_.str();

  c.column = 3;
  EXPECT_EQ(exec(c), kInputError);
}

TEST_F(CliRun, PinchukCheck) {
  RunConfig c;
  c.command = Command::Pinchuk;
  c.pinchuk_check = true;
  c.output_path = (dir_ / "pinchuk.txt").string();
  EXPECT_EQ(exec(c), kDecisive);
  const std::string text = out_.str();
  EXPECT_NE(text.find("x^11*y^8"), std::string::npos) << text;
  EXPECT_NE(text.find("x^12*y^7"), std::string::npos);
  EXPECT_NE(text.find("x^29*y^20"), std::string::npos);
  EXPECT_NE(text.find("NecessaryConditionHolds"), std::string::npos);
  std::ifstream in(c.output_path);
  std::stringstream body;
  body << in.rdbuf();
  const ProblemSpec spec = parse_problem_file(body.str());
  EXPECT_EQ(total_degree(spec.map[1]), Degree(25));
}

TEST_F(CliRun, EmitWritesParsableProblem) {
  RunConfig c;
  c.command = Command::Emit;
  c.input = "cubic-shear";
  c.output_path = (dir_ / "shear.txt").string();
  EXPECT_EQ(exec(c), kDecisive);
  std::ifstream in(c.output_path);
  std::stringstream body;
  body << in.rdbuf();
  const ProblemSpec spec = parse_problem_file(body.str());
  EXPECT_EQ(render(spec.map[0]), "y^3 + x");
}

TEST(ParseTarget, Values) {
  EXPECT_EQ(parse_target("1/2, -3"), (std::vector<Rational>{Rational(1, 2), -3}));
  EXPECT_THROW(parse_target("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_target(""), std::invalid_argument);
}

}  // namespace
}  // namespace polysurj::cli

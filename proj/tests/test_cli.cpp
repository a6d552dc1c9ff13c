#include "commands.hpp"

#include <leafkernel/reference_table.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

using namespace leaf::cli;

namespace {

struct RunResult {
  int status;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LEAFKERNEL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string capture(int (*fn)(const OutputSpec&, std::ostream&), const OutputSpec& spec) {
  std::ostringstream os;
  fn(spec, os);
  return os.str();
}

OutputSpec with(Format f, int precision = 6) { return {f, precision, {}}; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Eval, Examples) {
  std::ostringstream a, b, c;
  EXPECT_EQ(cmd_eval(3, Function::sleaf, 0.5, {}, a), kExitOk);
  EXPECT_EQ(a.str(), "0.499443\n");
  cmd_eval(3, Function::sleaf, 0.0, {}, b);
  EXPECT_EQ(b.str(), "0.000000\n");
  cmd_eval(1, Function::arcsleaf, 1.0, {}, c);
  EXPECT_EQ(c.str(), "1.570796\n");
}

TEST(Eval, NoNegativeZero) {
  std::ostringstream os;
  cmd_eval(1, Function::sleaf, -1e-9, {}, os);
  EXPECT_EQ(os.str(), "0.000000\n");
}

TEST(Eval, JsonAndCsv) {
  std::ostringstream j, c;
  cmd_eval(3, Function::cleaf, 0.5, with(Format::json), j);
  const auto doc = nlohmann::json::parse(j.str());
  EXPECT_EQ(doc["fn"], "cleaf");
  EXPECT_DOUBLE_EQ(doc["value"].get<double>(), 0.707632);
  cmd_eval(3, Function::cleaf, 0.5, with(Format::csv), c);
  EXPECT_EQ(lines(c.str()).at(0), "n,fn,x,value");
}

TEST(Eval, Errors) {
  std::ostringstream os;
  EXPECT_THROW(cmd_eval(3, Function::arcsleaf, 2.0, {}, os), leaf::domain_error);
  EXPECT_THROW(cmd_eval(3, Function::sleaf, 0.5, with(Format::pretty, 0), os), usage_error);
  EXPECT_THROW(parse_function("tan"), usage_error);
  EXPECT_THROW(parse_format("xml"), usage_error);
  EXPECT_THROW(parse_suite("everything"), usage_error);
}

TEST(Table, DefaultsReproduceReferenceTable) {
  std::ostringstream os;
  EXPECT_EQ(cmd_table(3, 0.0, 4.1, 0.1, with(Format::csv), os), kExitOk);
  const auto rows = lines(os.str());
  ASSERT_EQ(rows.size(), 43u);
  EXPECT_EQ(rows[0], "l,sleaf,cleaf");
  EXPECT_EQ(rows[25], "2.4,0.028651,-0.998770");
  for (std::size_t i = 0; i < leaf::kReferenceTable.size(); ++i) {
    const auto& ref = leaf::kReferenceTable[i];
    double l, s, c;
    ASSERT_EQ(std::sscanf(rows[i + 1].c_str(), "%lf,%lf,%lf", &l, &s, &c), 3);
    EXPECT_NEAR(l, ref.l, 1e-12);
    EXPECT_NEAR(s, ref.sleaf, leaf::kReferenceTableTolerance);
    EXPECT_NEAR(c, ref.cleaf, leaf::kReferenceTableTolerance);
  }
}

TEST(Table, SingleRow) {
  std::ostringstream os;
  cmd_table(3, 0.0, 0.0, 0.1, with(Format::csv), os);
  EXPECT_EQ(os.str(), "l,sleaf,cleaf\n0.0,0.000000,1.000000\n");
}

TEST(Table, BadGrid) {
  std::ostringstream os;
  EXPECT_THROW(cmd_table(3, 0.0, 1.0, 0.0, {}, os), usage_error);
  EXPECT_THROW(cmd_table(3, 0.0, 1.0, -0.1, {}, os), usage_error);
  EXPECT_THROW(cmd_table(3, 1.0, 0.0, 0.1, {}, os), usage_error);
}

TEST(Table, JsonRoundTrip) {
  std::ostringstream os;
  cmd_table(3, 0.0, 4.1, 0.1, with(Format::json), os);
  const auto doc = nlohmann::json::parse(os.str());
  ASSERT_EQ(doc.size(), 42u);
  EXPECT_DOUBLE_EQ(doc[24]["l"].get<double>(), 2.4);
  EXPECT_DOUBLE_EQ(doc[24]["cleaf"].get<double>(), -0.99877);
}

TEST(Constants, Pretty) {
  const auto text = capture(cmd_constants, {});
  EXPECT_NE(text.find("period(1) = 6.283185"), std::string::npos);
  EXPECT_NE(text.find("period(2) = 5.244115"), std::string::npos);
  EXPECT_NE(text.find("period(3) = 4.857301"), std::string::npos);
}

TEST(Constants, JsonRoundTrip) {
  const auto doc = nlohmann::json::parse(capture(cmd_constants, with(Format::json, 12)));
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_NEAR(doc[2]["period"].get<double>(), 4.857301295775, 1e-12);
  EXPECT_EQ(doc[0]["n"], 1);
}

TEST(Verify, IdentitiesIncludeWorkedExample) {
  std::ostringstream os;
  EXPECT_EQ(cmd_verify(leaf::verify::Suite::identities, {}, os), kExitOk);
  EXPECT_NE(os.str().find("[PASS] sleaf3_add_squared(0.2,0.3) = 0.2494431"), std::string::npos);
}

TEST(Verify, SymbolicReportsZeroResidual) {
  std::ostringstream os;
  EXPECT_EQ(cmd_verify(leaf::verify::Suite::symbolic, {}, os), kExitOk);
  EXPECT_NE(os.str().find("numerator_l1 == numerator_l2: residual 0 terms"), std::string::npos);
}

TEST(Verify, OracleIncludesPeriodMatch) {
  std::ostringstream os;
  EXPECT_EQ(cmd_verify(leaf::verify::Suite::oracle, {}, os), kExitOk);
  EXPECT_NE(os.str().find("[PASS] period(3) quadrature vs ODE"), std::string::npos);
}

TEST(Verify, JsonIsDeterministic) {
  std::ostringstream a, b;
  cmd_verify(leaf::verify::Suite::all, with(Format::json), a);
  cmd_verify(leaf::verify::Suite::all, with(Format::json), b);
  EXPECT_EQ(a.str(), b.str());
  const auto doc = nlohmann::json::parse(a.str());
  EXPECT_TRUE(doc["passed"].get<bool>());
  for (const auto& c : doc["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["check"];
}

TEST(Process, ExitCodes) {
  EXPECT_EQ(run_cli("eval --n 3 --fn sleaf 0.5").output, "0.499443\n");
  EXPECT_EQ(run_cli("eval --n 3 --fn sleaf 0.5").status, kExitOk);
  EXPECT_EQ(run_cli("table --step 0").status, kExitUsage);
  EXPECT_EQ(run_cli("eval --fn tan 0.5").status, kExitUsage);
  EXPECT_EQ(run_cli("eval --n 3 --fn arcsleaf 3").status, kExitUsage);
  EXPECT_EQ(run_cli("frobnicate").status, kExitUsage);
  EXPECT_EQ(run_cli("").status, kExitUsage);
  EXPECT_EQ(run_cli("--help").status, kExitOk);
  EXPECT_EQ(run_cli("verify symbolic").status, kExitOk);
}

TEST(Process, TableDefaults) {
  const auto r = run_cli("table --format csv");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(lines(r.output).size(), 43u);
  EXPECT_NE(r.output.find("2.4,0.028651,-0.998770"), std::string::npos);
}

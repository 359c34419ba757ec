#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "starconf/cli.hpp"

using namespace starconf;
using namespace starconf::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST(Cli, VerifyLurothOverRationals) {
  const auto r = run({"verify", "--d", "4", "--l", "5", "--field", "rational", "--trials", "1", "--paper-forms"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("lower bound:   13"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("CERTIFIED"), std::string::npos);
}

TEST(Cli, VerifyEmptyPair) {
  const auto r = run({"verify", "--d", "3", "--l", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("EMPTY"), std::string::npos);
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "--d", "5", "--l", "6", "--format", "json", "--seed", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lower_bound"], 17);
  EXPECT_EQ(j["theorem_value"], 17);
  EXPECT_EQ(j["field"], "prime");
  EXPECT_EQ(j["prime"], kDefaultPrime);
  EXPECT_EQ(j["seeds"].size(), 3U);
}

TEST(Cli, SweepCsvIsDeterministic) {
  const std::vector<std::string> args{"sweep", "--lmax", "6", "--dmax", "7", "--format", "csv", "--seed", "3"};
  const auto a = run(args);
  auto parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const auto b = run(parallel);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "d,l,field,lower_bound,theorem_value,min_upper_bound,verdict,seed,elapsed_ms");
  EXPECT_NE(a.out.find("4,5,GF(1073741789),13,13,13,CERTIFIED"), std::string::npos) << a.out;
  EXPECT_EQ(a.out.find("GAP"), std::string::npos);
}

TEST(Cli, VerifySevenLines) {
  const auto r = run({"verify", "--d", "7", "--l", "7", "--prime", "1073741789", "--trials", "3", "--seed", "42"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("lower bound:   28"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("CERTIFIED"), std::string::npos);
}

TEST(Cli, SweepTableIncludesFiveLineQuartics) {
  const auto r = run({"sweep", "--dmax", "4", "--lmax", "6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("4   5   13"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("GAP=0"), std::string::npos);
}

TEST(Cli, SweepEmptyRange) {
  EXPECT_EQ(run({"sweep", "--dmax", "4", "--lmax", "6", "--lmin", "7"}).code, kUsage);
  EXPECT_EQ(run({"sweep", "--dmax", "4", "--dmin", "5", "--lmax", "6"}).code, kUsage);
}

TEST(Cli, SweepLimits) {
  EXPECT_EQ(run({"sweep", "--lmax", "11", "--dmax", "12"}).code, kUsage);
  EXPECT_EQ(run({"sweep", "--lmax", "4", "--dmax", "16"}).code, kUsage);
}

TEST(Cli, PaperExamples) {
  const auto r = run({"paper-examples"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  const auto items = paper_examples();
  EXPECT_EQ(items.size(), 5U);
  for (const auto& i : items) EXPECT_TRUE(i.pass()) << i.id;
}

TEST(Cli, PnPlaneRowsReportLurothRefutation) {
  const auto r = run({"pn", "--n", "2", "--lmax", "5", "--dmax", "5", "--format", "csv"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("2,4,5,13,14,REFUTED"), std::string::npos) << r.out;
}

TEST(Cli, PnRejectsSmallN) {
  const auto r = run({"pn", "--n", "1", "--dmax", "4", "--lmax", "4"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HilbertTable) {
  const auto r = run({"hilbert", "--l", "6", "--tmax", "6", "--paper-forms", "--field", "rational"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos) << r.out;
}

TEST(Cli, FormsFileAndExport) {
  const auto forms = temp_path("starconf_forms.txt");
  const auto exported = temp_path("starconf_export.json");
  {
    std::ofstream f(forms);
    f << "# five lines\nx0\nx1\nx2\nx0 + x1 + x2\nx0 + 2*x1 + 3*x2\n";
  }
  const auto r = run({"verify", "--d", "4", "--forms-file", forms, "--field", "rational", "--trials", "1", "--export-config",
                      exported});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("lower bound:   13"), std::string::npos) << r.out;
  std::ifstream in(exported);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["points"].size(), 10U);
  std::remove(forms.c_str());
  std::remove(exported.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"verify"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--d", "4", "--l", "5", "--prime", "100"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--d", "4", "--l", "5", "--field", "rational", "--prime", "7"}).code, kUsage);
  EXPECT_EQ(run({"verify", "--d", "4", "--l", "5", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(run({"bogus"}).code, kUsage);
}

TEST(Cli, ReadFormsSkipsCommentsAndRejectsNonlinear) {
  std::istringstream ok("x0\n\n# comment\nx1 - x2\n");
  EXPECT_EQ(read_forms(RationalField{}, ok).size(), 2U);
  std::istringstream bad("x0^2\n");
  EXPECT_THROW(read_forms(RationalField{}, bad), DomainError);
}

TEST(Cli, SmallPrimeFromFlag) {
  const auto r = run({"verify", "--d", "2", "--l", "3", "--prime", "101", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["prime"], 101);
}

TEST(Cli, PrimeFromEnvironment) {
  ::setenv("STARCONFIG_PRIME", "1000003", 1);
  const auto r = run({"verify", "--d", "2", "--l", "3", "--format", "json"});
  ::unsetenv("STARCONFIG_PRIME");
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["prime"], 1000003);
}

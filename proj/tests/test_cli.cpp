#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtoda/cli/app.hpp"

using gtoda::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

gtoda::Report parse(const std::string& text) {
  return gtoda::report_from_json(nlohmann::ordered_json::parse(text));
}

}  // namespace

TEST(Cli, SerreAtFivePasses) {
  const auto r = run({"verify", "serre", "--n", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rep = parse(r.out);
  EXPECT_FALSE(rep.records.empty());
  for (const auto& rec : rep.records) EXPECT_TRUE(rec.pass) << rec.id;
}

TEST(Cli, SerreRankBelowThreeIsUsageError) {
  const auto r = run({"verify", "serre", "--n", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("3 <= N"), std::string::npos);
}

TEST(Cli, BadFlagsAreUsageErrors) {
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"frobnicate", "serre"}).code, 2);
  EXPECT_EQ(run({"verify", "serre", "--n", "five"}).code, 2);
  EXPECT_EQ(run({"verify", "nothing", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"eval", "wave", "--x", "0.1"}).code, 2);                      // no --gamma
  EXPECT_EQ(run({"eval", "wave", "--gamma", "0.7", "--x", "0.1,0.2"}).code, 2);  // wrong length
  EXPECT_EQ(run({"eval", "wave", "--gamma", "0.7", "--x", "0", "--grid-L", "1", "--grid-step", "0.3"}).code, 2);
  EXPECT_EQ(run({"check", "toda", "--gamma", "0.7", "--x", "0", "--gauge", "sideways"}).code, 2);
  EXPECT_EQ(run({"verify", "serre", "--n", "4", "--format", "csv"}).code, 2);
}

TEST(Cli, TodaRankOneAtReferencePoint) {
  const auto r = run({"check", "toda", "--rank", "1", "--gamma", "0.7", "--c", "1.0", "--x", "-0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = parse(r.out);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].expected, "0.74");
  EXPECT_LT(*rep.records[0].residual, 1e-4);
}

TEST(Cli, StatedWhittakerCharacterFailsWithExitOne) {
  const auto r = run({"verify", "whittaker", "--n", "1"});
  EXPECT_EQ(r.code, 1);
  const auto rep = parse(r.out);
  EXPECT_GT(rep.failures(), 0u);
  EXPECT_EQ(run({"verify", "whittaker", "--n", "1", "--reference", "derived"}).code, 0);
}

TEST(Cli, GustafsonRowLengths) {
  // Repeated --lower accumulates to two values: wrong length for k = 1.
  EXPECT_EQ(run({"check", "gustafson", "--k", "1", "--lower=0.4", "--upper=-0.5,0.9", "--lower=-0.7"}).code, 2);
  EXPECT_EQ(run({"check", "gustafson", "--k", "3", "--lower=0.4,0.1,0.2", "--upper=-0.5,0.9,1,2"}).code, 2);
}

TEST(Cli, BudgetRefusalIsEvaluationFailure) {
  const auto r = run({"eval", "wave", "--rank", "3", "--gamma", "0.3,0.7,1.1", "--x", "0,0,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("required evaluations"), std::string::npos);
  const auto rep = parse(r.out);
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_FALSE(rep.records[0].pass);
}

TEST(Cli, WaveScanCsv) {
  const auto r = run({"eval", "wave", "--gamma", "0.7", "--scan-from", "-2", "--scan-to", "2", "--scan-points", "9",
                      "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x1,re,im,err");
  double prev = -1e300;
  int rows = 0;
  while (std::getline(in, line)) {
    double x, re, im, err;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &x, &re, &im, &err), 4) << line;
    EXPECT_GT(x, prev);
    EXPECT_LT(std::abs(im), err);
    prev = x;
    ++rows;
  }
  EXPECT_EQ(rows, 9);
}

TEST(Cli, RankTwoCsvHeader) {
  const auto r = run({"eval", "wave", "--gamma", "0.6,1.1", "--x", "0.2,-0.4", "--route", "gustafson", "--format",
                      "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x1,x2,re,im,err");
}

TEST(Cli, ConfigFilePrecedence) {
  const std::string path = testing::TempDir() + "gtoda_cfg.toml";
  {
    std::ofstream f(path);
    f << "gamma = [0.7]\nc = 1.3\nx = [0.4]\n";
  }
  const auto from_file = parse(run({"eval", "wave", "--config", path}).out);
  const auto overridden = parse(run({"eval", "wave", "--config", path, "--c", "1.0"}).out);
  const auto plain = parse(run({"eval", "wave", "--gamma", "0.7", "--c", "1.3", "--x", "0.4"}).out);
  EXPECT_EQ(from_file.records, plain.records);
  EXPECT_NE(overridden.records, plain.records);
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args{"check", "gustafson", "--k", "1", "--lower=0.4", "--upper=-0.5,0.9"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonRoundTrip) {
  const auto r = run({"verify", "cartan", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = parse(r.out);
  EXPECT_EQ(gtoda::dump_report(rep), r.out);
  gtoda::Report timed = rep;
  timed.wall_time = 1.25;
  timed.warnings.push_back("w");
  timed.records.at(0).residual = 0.1 + 0.2;
  EXPECT_EQ(parse(gtoda::dump_report(timed)), timed);
}

TEST(Cli, EmptyReportIsValidJson) {
  gtoda::Report empty;
  empty.command = "nothing";
  const auto j = nlohmann::ordered_json::parse(gtoda::dump_report(empty));
  EXPECT_TRUE(j.at("records").is_array());
  EXPECT_TRUE(j.at("records").empty());
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(parse(gtoda::dump_report(empty)), empty);
}

TEST(Cli, OutputFile) {
  const std::string path = testing::TempDir() + "gtoda_out.json";
  const auto r = run({"check", "a8", "--m", "3", "--samples", "5", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(parse(ss.str()).records.size(), 3u);
  EXPECT_EQ(run({"check", "a8", "--out", "/nonexistent/dir/x.json"}).code, 1);
}

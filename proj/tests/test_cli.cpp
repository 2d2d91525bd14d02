#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dyer/io.hpp"

namespace dyer {
namespace {

const std::filesystem::path kCorpus = DYER_CORPUS;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return (kCorpus / (name + ".json")).string(); }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, GrowthPlain) {
  const Outcome r = run({"growth", corpus("z4")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + 2*t + t^2\n");
}

TEST(Cli, GrowthFormatsDenoteSameFunction) {
  for (const std::string method : {"auto", "subset", "amalgam", "cross-check"}) {
    const Outcome json = run({"growth", corpus("mixed_triangle"), "--method", method, "--format", "json"});
    ASSERT_EQ(json.code, 0);
    const RationalFunction f = rational_function_from_json(json.out);
    EXPECT_EQ(run({"growth", corpus("mixed_triangle"), "--method", method}).out, format_plain(f) + "\n");
    EXPECT_EQ(run({"growth", corpus("mixed_triangle"), "--format", "latex"}).out, format_latex(f) + "\n");
  }
  EXPECT_NE(run({"growth", corpus("z"), "--format", "json"}).out.find("\"method\":\"spherical\""), std::string::npos);
}

TEST(Cli, SpheresWithOracle) {
  const Outcome r = run({"spheres", corpus("f2"), "-n", "3", "--verify-oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 4 12 36\noracle: MATCH\n");
  const Outcome u = run({"spheres", corpus("h3"), "-n", "3", "--verify-oracle"});
  EXPECT_EQ(u.code, 3);
  EXPECT_EQ(run({"spheres", corpus("h3"), "-n", "3"}).code, 0);
}

TEST(Cli, Euler) {
  EXPECT_EQ(run({"euler", corpus("z"), "--method", "both"}).out, "0 (both methods agree)\n");
  EXPECT_EQ(run({"euler", corpus("f2"), "--method", "growth"}).out, "-1\n");
  EXPECT_EQ(run({"euler", corpus("a3"), "--method", "recursive"}).out, "1/24\n");
  EXPECT_EQ(run({"euler", corpus("a3")}).out, "1/24 (both methods agree)\n");
}

TEST(Cli, Classify) {
  const Outcome r = run({"classify", corpus("d4")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("spherical: yes"), std::string::npos);
  EXPECT_NE(r.out.find("D4"), std::string::npos);
  EXPECT_NE(run({"classify", corpus("affine_a2")}).out.find("spherical: no"), std::string::npos);
}

TEST(Cli, PdAndBx) {
  EXPECT_EQ(run({"pd", corpus("a2")}).out, "t^3\n");
  EXPECT_EQ(run({"pd", corpus("f2")}).code, 3);
  EXPECT_EQ(run({"bxseries", corpus("a2"), "--subset", "s1"}).out, "t + t^2\n");
  EXPECT_EQ(run({"bxseries", corpus("a2"), "--subset", "s1,s2"}).out, "1\n");
  EXPECT_EQ(run({"bxseries", corpus("f2"), "--subset", ""}).out, "0\n");
  EXPECT_EQ(run({"bxseries", corpus("a2"), "--subset", "zz"}).code, 1);
}

TEST(Cli, InvalidInput) {
  const std::string bad = temp_file("dyer_bad.json", R"({"vertices": [{"name": "x", "order": 3}, {"name": "y", "order": 2}],
      "edges": [{"ends": ["x", "y"], "label": 3}]})");
  const Outcome r = run({"growth", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("x"), std::string::npos);
  EXPECT_EQ(run({"growth", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"growth", corpus("z"), "--method", "fast"}).code, 1);
  EXPECT_EQ(run({"spheres", corpus("z")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CheckWholeCorpus) {
  std::vector<std::string> args{"check"};
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus)) {
    if (entry.path().extension() == ".json") {
      args.push_back(entry.path().string());
      ++files;
    }
  }
  EXPECT_GE(files, 25u);
  const Outcome r = run(args);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, RunChecksFlagsBrokenInvariant) {
  cli::CheckReport report;
  report.lines.push_back({"x", "ok", ""});
  report.lines.push_back({"y", "skipped", ""});
  EXPECT_TRUE(report.passed());
  report.lines.push_back({"z", "FAIL", ""});
  EXPECT_FALSE(report.passed());
}

}  // namespace
}  // namespace dyer

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hurwitz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HURWITZ_TEST_DATA) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, HurwitzText) {
  Result r = run({"hurwitz", "--sym", "4", "--mu", "4", "--nu", "4", "--tau", "1,1,2", "--order", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "gf: (-20b^2 + 1)/(576b^4 - 160b^2 + 4)"));
  EXPECT_TRUE(contains(r.out, "4  164    3936"));
}

TEST(Cli, HurwitzJson) {
  Result r = run({"hurwitz", "--sym", "4", "--mu", "4", "--nu", "4", "--tau", "2,1,1", "--order", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mu"], "4");
  EXPECT_EQ(j["tau"], "1,1,2");
  EXPECT_EQ(j["coeffs"], nlohmann::json::parse(R"(["1/4", "0", "5", "0", "164"])"));
  EXPECT_EQ(j["counts"], nlohmann::json::parse("[6, 0, 120, 0, 3936]"));
  hurwitz::RatFunc gf = hurwitz::json::ratfunc_from_json(j["gf"]);
  EXPECT_EQ(gf, hurwitz::RatFunc(hurwitz::Rational(3, 2)) *
                    hurwitz::RatFunc(hurwitz::Poly::of({1, 0, -20}), hurwitz::Poly::of({6, 0, -240, 0, 864})));
}

TEST(Cli, MatrixText) {
  Result r = run({"matrix", "--sym", "2", "--tau", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "tau: 2\nA:\n     1,1  2\n1,1  1    -b\n2    -b   1\n");
}

TEST(Cli, MatrixLatexAndInverse) {
  Result r = run({"matrix", "--sym", "3", "--tau", "1,2", "--inverse", "--format", "latex"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "1 & -3\\beta & 0 \\\\"));
  EXPECT_TRUE(contains(r.out, "\\frac{3\\beta^{2} - 1}{18\\beta^{2} - 2}"));
}

TEST(Cli, Classes) {
  Result r = run({"classes", "--sym", "3", "--structure-constants"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "order: 6"));
  EXPECT_TRUE(contains(r.out, "1,2    1,2    3       3"));
  Result j = run({"classes", "--group", data("frobenius21.json"), "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(nlohmann::json::parse(j.out)["classes"].size(), 5u);
}

TEST(Cli, OnePart) {
  Result r = run({"one-part", "--sym", "2", "--order", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["coeffs"], nlohmann::json::parse(R"(["1/2", "0", "1/2", "0"])"));
}

TEST(Cli, VerifyPasses) {
  Result r = run({"verify", "--sym", "3", "--max-r", "4"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "seed: 20240601"));
  EXPECT_TRUE(contains(r.out, "ok    one-part closed form"));
  EXPECT_TRUE(contains(r.out, "ok    h + b h'"));
  EXPECT_TRUE(contains(r.out, "all checks passed"));
  Result z = run({"verify", "--group", data("z3.json"), "--tau", "c1", "--seed", "5"});
  EXPECT_EQ(z.code, 0) << z.out;
  EXPECT_TRUE(contains(z.out, "seed: 5"));
}

TEST(Cli, DeterministicOutput) {
  std::vector<std::string> args{"present", "--genus", "2", "--leaves", "2", "--seed", "42", "--format", "json"};
  Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["seed"], 42);
  Result v1 = run({"verify", "--sym", "3", "--seed", "9"}), v2 = run({"verify", "--sym", "3", "--seed", "9"});
  EXPECT_EQ(v1.out, v2.out);
}

TEST(Cli, GraphCount) {
  Result r = run({"graph-count", "--sym", "2", "--genus", "2", "--boundary", "2;2", "--oracles"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "count: 16"));
  EXPECT_TRUE(contains(r.out, "presentation count: 16"));
  Result zero = run({"graph-count", "--sym", "2", "--genus", "2", "--boundary", "2", "--format", "json"});
  ASSERT_EQ(zero.code, 0) << zero.err;
  EXPECT_EQ(nlohmann::json::parse(zero.out)["count"], "0");
}

TEST(Cli, GraphCountFromFile) {
  Result p = run({"present", "--genus", "2", "--leaves", "2", "--format", "json"});
  ASSERT_EQ(p.code, 0);
  auto graph = nlohmann::json::parse(p.out)["graph"];
  hurwitz::json::GraphFile f = hurwitz::json::graph_from_json(graph);
  for (int e : f.graph.leaves()) graph["boundary"][std::to_string(e)] = "2";
  const std::string path = ::testing::TempDir() + "graph_s2.json";
  std::ofstream(path) << graph.dump();
  Result r = run({"graph-count", "--sym", "2", "--graph", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "count: 16"));
}

TEST(Cli, UsageErrors) {
  Result none = run({});
  EXPECT_EQ(none.code, 2);
  Result both = run({"classes", "--sym", "3", "--group", data("z3.json")});
  EXPECT_EQ(both.code, 2);
  EXPECT_TRUE(contains(both.err, "--sym"));
  Result label = run({"hurwitz", "--sym", "3", "--mu", "4", "--nu", "3", "--tau", "1,2"});
  EXPECT_EQ(label.code, 2);
  EXPECT_TRUE(contains(label.err, "--mu"));
  EXPECT_TRUE(contains(label.err, "'1,1,1' '1,2' '3'"));
  Result missing = run({"hurwitz", "--sym", "3", "--nu", "3", "--tau", "1,2"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(contains(missing.err, "--mu"));
  Result format = run({"classes", "--sym", "3", "--format", "xml"});
  EXPECT_EQ(format.code, 2);
  EXPECT_TRUE(contains(format.err, "--format"));
  Result file = run({"classes", "--group", data("nope.json")});
  EXPECT_EQ(file.code, 2);
  Result genus = run({"present", "--genus", "1", "--leaves", "0"});
  EXPECT_EQ(genus.code, 2);
}

TEST(Cli, ComputationalErrors) {
  Result cap = run({"classes", "--sym", "8"});
  EXPECT_EQ(cap.code, 1);
  Result magma = run({"classes", "--group", data("not_assoc.json")});
  EXPECT_EQ(magma.code, 1);
  EXPECT_TRUE(contains(magma.err, "associativity"));
  Result work = run({"graph-count", "--sym", "3", "--genus", "2", "--boundary", "1,2;1,2", "--oracles", "--work-cap", "10"});
  EXPECT_EQ(work.code, 1);
  EXPECT_TRUE(contains(work.err, "cap"));
}

TEST(Cli, WorkCapEnvironment) {
  std::vector<std::string> args{"graph-count", "--sym", "3", "--genus", "2", "--boundary", "1,2;1,2", "--oracles"};
  setenv("HURWITZ_WORK_CAP", "10", 1);
  Result capped = run(args);
  Result flag_wins = run({"graph-count", "--sym", "3", "--genus", "2", "--boundary", "1,2;1,2", "--oracles", "--work-cap", "100000000"});
  setenv("HURWITZ_WORK_CAP", "lots", 1);
  Result bad = run(args);
  unsetenv("HURWITZ_WORK_CAP");
  Result normal = run(args);
  EXPECT_EQ(capped.code, 1);
  EXPECT_EQ(flag_wins.code, 0) << flag_wins.err;
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(normal.code, 0) << normal.err;
}

TEST(Cli, Help) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "hurwitz"));
}

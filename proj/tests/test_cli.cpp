#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sgcolor/cli.hpp"
#include "sgcolor/graph_io.hpp"

using namespace sgcolor;

namespace {

const std::string kData = SGCOLOR_TEST_DATA;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "sgcolor_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST(Cli, ChiOnFatTriangle) {
  const CliRun r = run({"chi", data("fat_triangle_r1.sg")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["chi"], 3);
  EXPECT_EQ(doc["max_degree"], 2);
}

TEST(Cli, KoenigOnPositiveK4) {
  const CliRun r = run({"color", "--method", "koenig", data("k4_positive.sg")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["method"], "koenig");
  EXPECT_EQ(doc["palette"]["size"], 3);
  EXPECT_EQ(doc["edges"].size(), 6u);
  // The emitted document passes the verifier.
  const auto path = scratch("k4.json");
  write(path, r.out);
  const CliRun v = run({"verify", data("k4_positive.sg"), path.string()});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_NE(v.out.find("valid"), std::string::npos);
}

TEST(Cli, OutputIsByteStable) {
  const CliRun a = run({"color", data("fat_triangle_r2.sg")});
  const CliRun b = run({"color", data("fat_triangle_r2.sg"), "--seed", "7"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AutoPicksMethodByBalance) {
  EXPECT_EQ(nlohmann::json::parse(run({"color", data("k4_positive.sg")}).out)["method"], "koenig");
  EXPECT_EQ(nlohmann::json::parse(run({"color", data("neg_triangle.sg")}).out)["method"], "shannon");
}

TEST(Cli, ShannonResigningIsVerifiable) {
  const CliRun r = run({"color", "--method", "shannon", data("fat_triangle_r2.sg")});
  ASSERT_EQ(r.code, 0);
  const auto path = scratch("fat2.json");
  write(path, r.out);
  EXPECT_EQ(run({"verify", data("fat_triangle_r2.sg"), path.string()}).code, 0);
}

TEST(Cli, VerifyRejectsBrokenColoring) {
  const CliRun r = run({"color", data("k4_positive.sg")});
  auto doc = nlohmann::json::parse(r.out);
  doc["edges"][0]["colors"][0] = doc["edges"][1]["colors"][0];
  doc["edges"][0]["colors"][1] = doc["edges"][1]["colors"][1];
  const auto path = scratch("broken.json");
  write(path, doc.dump());
  const CliRun v = run({"verify", data("k4_positive.sg"), path.string()});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("invalid"), std::string::npos);
}

TEST(Cli, DotExport) {
  const auto path = scratch("neg.dot");
  const CliRun r = run({"color", data("neg_triangle.sg"), "--dot", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("graph G {"), std::string::npos);
  EXPECT_NE(text.str().find("style=dashed"), std::string::npos);
  EXPECT_NE(text.str().find("s_1"), std::string::npos);
}

TEST(Cli, BalanceReportsWitness) {
  const CliRun r = run({"balance", data("neg_triangle.sg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("unbalanced\n", 0), 0u);
  for (const char* v : {"a", "b", "c"}) EXPECT_NE(r.out.find(v), std::string::npos);
  EXPECT_EQ(run({"balance", data("k4_positive.sg")}).out.rfind("balanced\n", 0), 0u);
}

TEST(Cli, LayersOneLinePerLayer) {
  const CliRun r = run({"layers", data("k4_positive.sg")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  const CliRun j = run({"layers", "--json", data("k4_positive.sg")});
  EXPECT_EQ(nlohmann::json::parse(j.out)["layers"].size(), 2u);
}

TEST(Cli, ResignAndEquiv) {
  const auto out = scratch("resigned.sg");
  const CliRun r = run({"resign", data("neg_triangle.sg"), "--at", "a,b", "-o", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const SignedGraph g = read_graph_file(out);
  EXPECT_EQ(g.edge(0).sign, Sign::kPositive);  // a b: both flipped
  EXPECT_EQ(g.edge(1).sign, Sign::kNegative);  // b c
  EXPECT_EQ(g.edge(2).sign, Sign::kPositive);  // c a
  EXPECT_EQ(run({"equiv", data("neg_triangle.sg"), out.string()}).out, "equivalent\n");
  const auto pos = scratch("pos_triangle.sg");
  write(pos, "e a b +\ne b c +\ne c a +\n");
  EXPECT_EQ(run({"equiv", data("neg_triangle.sg"), pos.string()}).out, "not equivalent\n");
  EXPECT_EQ(run({"equiv", data("neg_triangle.sg"), data("k4_positive.sg")}).code, 1);
}

TEST(Cli, ExitCodes) {
  const CliRun loop = run({"color", data("negative_loop.sg")});
  EXPECT_EQ(loop.code, 1);
  EXPECT_NE(loop.err.find("uncolorable"), std::string::npos);
  EXPECT_EQ(run({"chi", data("negative_loop.sg")}).code, 1);
  EXPECT_EQ(run({"color", "--method", "koenig", data("neg_triangle.sg")}).code, 1);
  EXPECT_EQ(run({"color", data("does_not_exist.sg")}).code, 2);
  EXPECT_EQ(run({"color", "--method", "vizing", data("k4_positive.sg")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const auto bad = scratch("bad.sg");
  write(bad, "e a\n");
  const CliRun parse = run({"layers", bad.string()});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("line 1"), std::string::npos);
  const auto big = scratch("big.sg");
  std::string text;
  for (int i = 0; i < 17; ++i) text += "e a b +\n";
  write(big, text);
  EXPECT_EQ(run({"chi", big.string()}).code, 1);
  EXPECT_EQ(run({"chi", big.string(), "--max-edges", "20"}).code, 0);
}

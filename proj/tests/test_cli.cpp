#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

/// Runs the CLI from the repository root; stderr goes to `err_file` if given.
Run run(const std::string& args, const std::string& err_file = "/dev/null") {
  const std::string cmd = std::string("cd '") + SYZ_SOURCE_DIR + "' && '" + SYZ_CLI + "' " + args + " 2>" + err_file;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct Case {
  std::string name;
  std::string args;
  int status;
};

std::vector<Case> golden_cases() {
  std::vector<Case> out;
  std::istringstream in(slurp(std::string(SYZ_SOURCE_DIR) + "/data/golden/cases.txt"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto a = line.find('|'), b = line.rfind('|');
    out.push_back({trim(line.substr(0, a)), trim(line.substr(a + 1, b - a - 1)), std::stoi(trim(line.substr(b + 1)))});
  }
  return out;
}

}  // namespace

TEST(Cli, GoldenOutputs) {
  const auto cases = golden_cases();
  ASSERT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    const auto r = run(c.args);
    EXPECT_EQ(r.status, c.status) << c.name;
    EXPECT_EQ(r.out, slurp(std::string(SYZ_SOURCE_DIR) + "/data/golden/" + c.name + ".out")) << c.name;
  }
}

TEST(Cli, LexBasisEndsWithPlaneCubic) {
  const auto r = run("--order lex gb data/twisted_cubic.id");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.rfind("g4 = x*z^2 - y^3\n"), std::string::npos);
}

TEST(Cli, JsonSchemaIsStable) {
  for (const std::string cmd : {"gb", "hilbert", "betti", "regularity", "inideal", "satdefect", "resolve"}) {
    const auto r = run("--json " + cmd + " data/twisted_cubic.id");
    ASSERT_EQ(r.status, 0) << cmd;
    const auto j = json::parse(r.out);
    for (const char* key : {"order", "field", "generators", "result", "timings"}) EXPECT_TRUE(j.contains(key)) << cmd;
    EXPECT_EQ(j["command"], cmd);
    EXPECT_EQ(j["field"], "QQ");
    EXPECT_EQ(j["generators"].size(), 3u);
  }
}

TEST(Cli, MemberJson) {
  const auto r = run("--json member --poly 'w*y - x*z' data/twisted_cubic.id");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out)["result"];
  EXPECT_EQ(j["member"], true);
  EXPECT_EQ(j["certificate"], json::array({"0", "1", "0"}));
}

TEST(Cli, HilbertJsonAndFieldOverride) {
  const auto r = run("--field Fp:7 --json hilbert --dmax 10 data/twisted_cubic.id");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["field"], "Fp:7");
  std::vector<long long> expected;
  for (int d = 0; d <= 10; ++d) expected.push_back(d == 0 ? 1 : 3 * d + 1);
  EXPECT_EQ(j["result"]["values"].get<std::vector<long long>>(), expected);
  EXPECT_EQ(j["result"]["numerator"], json::array({1, 0, -3, 2}));
}

TEST(Cli, FamilyJsonCarriesTExponents) {
  const auto r = run("--json degenerate --weight=-16,-4,-1,0 data/twisted_cubic.id");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out)["result"];
  EXPECT_EQ(j["flat"], true);
  const auto& terms = j["members"][0]["terms"];
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[1]["monomial"], "x*y");
  EXPECT_EQ(terms[1]["coeff"], "-1");
  EXPECT_EQ(terms[1]["t_exp"], 27);
}

TEST(Cli, OutputParsesBackAsInput) {
  const auto first = run("--order lex gb data/twisted_cubic.id");
  const auto again = run("--order lex gb - <<'EOF'\n" + first.out + "EOF\n");
  EXPECT_EQ(again.status, 0);
  EXPECT_EQ(again.out, first.out);
}

TEST(Cli, ErrorsGoToStderr) {
  const std::string err = testing::TempDir() + "syz_cli_err.txt";
  auto r = run("gb samples/bad.id", err);
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(slurp(err).find("line 3, column"), std::string::npos) << slurp(err);
  r = run("gb data/missing.id", err);
  EXPECT_EQ(r.status, 1);
  r = run("reduce data/twisted_cubic.id", err);
  EXPECT_EQ(r.status, 1);
  r = run("--field Fp:8 gb data/twisted_cubic.id", err);
  EXPECT_EQ(r.status, 1);
  r = run("eliminate --keep w,x data/twisted_cubic.id", err);
  EXPECT_EQ(r.status, 1);
  r = run("--help");
  EXPECT_EQ(r.status, 0);
}

TEST(Cli, DegreeCapStopsResolution) {
  const auto r = run("--degree-cap 2 regularity data/twisted_cubic.id");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.out, "incomplete\n");
}

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using Json = nlohmann::ordered_json;

struct CliRun {
  int code = -1;
  std::string out;
};

/// Runs the CLI with stderr discarded and returns its exit status and stdout.
CliRun qmh(const std::string& args) {
  const std::string cmd = std::string(QMH_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const std::string& args) {
  const CliRun r = qmh("--format json " + args);
  EXPECT_EQ(r.code, 0) << args;
  return Json::parse(r.out);
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(qmh("").code, 2);
  EXPECT_EQ(qmh("frobnicate").code, 2);
  EXPECT_EQ(qmh("betti --n 2 --format yaml").code, 2);
  EXPECT_EQ(qmh("--threads 0 betti --n 2").code, 2);
}

TEST(Cli, BettiFigureOne) {
  const CliRun r = qmh("betti --n 2 --character f-inv --group SL");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "SL: m=1..2: 2 2")) << r.out;
  const Json j = json_of("betti --n 2 --character f-inv");
  EXPECT_EQ(j.at("command"), "betti");
  const Json& tables = j.at("results").at("tables");
  ASSERT_EQ(tables.size(), 3u);
  EXPECT_EQ(tables[0].at("dims"), Json::parse(R"j({"1":2,"2":4,"3":2})j"));
  EXPECT_EQ(tables[2].at("group"), "SL");
  EXPECT_EQ(tables[2].at("dims"), Json::parse(R"j({"1":2,"2":2})j"));
}

TEST(Cli, BettiFigureTwoWithPublishedSolutions) {
  const Json j = json_of("betti --n 3 --character f-inv --group GL --solutions paper");
  EXPECT_EQ(j.at("results").at("tables")[0].at("dims"), Json::parse(R"j({"3":8,"4":25,"5":27,"6":11,"7":1})j"));
  const Json s = json_of("betti --n 3 --character f-inv --group SL --solutions paper");
  EXPECT_EQ(s.at("results").at("tables")[0].at("dims"), Json::parse(R"j({"3":8,"4":17,"5":10,"6":1})j"));
}

TEST(Cli, BettiTrivialAndCsv) {
  const Json j = json_of("betti --n 1 --character eps --group M");
  EXPECT_EQ(j.at("results").at("tables")[0].at("dims"), Json::parse(R"j({"0":1,"1":1})j"));
  const CliRun r = qmh("--format csv betti --n 2 --group M");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "group,m,dim\nM,1,2\nM,2,4\nM,3,2\n");
}

TEST(Cli, BettiErrors) {
  EXPECT_EQ(qmh("betti --n 3 --character 1,-1").code, 2);
  EXPECT_EQ(qmh("betti --n 2 --character nope").code, 2);
  EXPECT_EQ(qmh("betti --n 2 --character eta --group SL").code, 2);
  EXPECT_EQ(qmh("betti --n 4 --solutions paper").code, 2);
  EXPECT_EQ(qmh("betti --n 0").code, 2);
}

TEST(Cli, Classes) {
  const Json j = json_of("classes --n 2 --character f-inv --degree 1");
  EXPECT_EQ(j.at("results").at("classes"), Json::parse(R"j(["(x12)","(x21)"])j"));
  const Json top = json_of("classes --n 3 --character f-inv --degree 7");
  ASSERT_EQ(top.at("results").at("count"), 1);
  EXPECT_EQ(top.at("results").at("classes")[0], "(x11,x12,x21,x22,x23,x32,x33)");
  const Json none = json_of("classes --n 2 --character f-inv --degree 9");
  EXPECT_EQ(none.at("results").at("count"), 0);
  EXPECT_EQ(qmh("classes --n 2").code, 2);
}

TEST(Cli, OracleHochschild) {
  const Json j = json_of("oracle hochschild --n 1 --cols 2 --character eta --cap 4 --pmax 2");
  EXPECT_EQ(j.at("results").at("report").at("dims"), Json::parse("[1,2,1]"));
  const Json k = json_of("oracle hochschild --n 2 --character 1,-1 --cap 5 --pmax 3 --mode modp");
  EXPECT_EQ(k.at("results").at("report").at("dims"), Json::parse("[0,2,4,2]"));
  EXPECT_EQ(k.at("results").at("report").at("stable"), Json::parse("[true,true,true,true]"));
}

TEST(Cli, OracleExpect) {
  EXPECT_EQ(qmh("oracle hochschild --n 1 --cols 2 --character eta --cap 4 --pmax 2 --expect 1,2,1").code, 0);
  EXPECT_EQ(qmh("oracle hochschild --n 1 --cols 2 --character eta --cap 4 --pmax 2 --expect 1,2,2").code, 1);
  EXPECT_EQ(qmh("oracle hochschild --n 1 --cols 2 --character eta --cap 4 --pmax 2 --expect 1,x").code, 2);
}

TEST(Cli, OracleGuardsAndUsage) {
  EXPECT_EQ(qmh("oracle hochschild --n 2 --character f-inv --cap 4 --pmax 2 --max-nonzeros 10").code, 2);
  EXPECT_EQ(qmh("oracle hochschild --n 2 --character f-inv --mode fast").code, 2);
  EXPECT_EQ(qmh("oracle").code, 2);
  EXPECT_EQ(qmh("oracle homotopy").code, 2);
  EXPECT_EQ(qmh("oracle cylinder --demo no-such-demo").code, 2);
}

TEST(Cli, OracleCylinderAndTor) {
  const CliRun r = qmh("oracle cylinder --demo dual-numbers --pmax 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "PASS"));
  EXPECT_FALSE(contains(r.out, "FAIL"));
  const Json j = json_of("oracle cylinder --demo dual-numbers --pmax 3");
  EXPECT_EQ(j.at("results").at("status"), "PASS");
  for (const auto& c : j.at("results").at("checks")) EXPECT_EQ(c.at("over_Z"), c.at("over_P"));
  EXPECT_EQ(qmh("oracle tor --demo dual-numbers --pmax 3").code, 0);
}

TEST(Cli, Verify) {
  for (const std::string check : {"mpi --n 4", "central --n 3", "pbw --n 2 --degree 3", "scaling --n 3",
                                  "confluence --n 2"}) {
    const CliRun r = qmh("verify " + check);
    EXPECT_EQ(r.code, 0) << check;
    EXPECT_TRUE(contains(r.out, "PASS")) << check;
    EXPECT_FALSE(contains(r.out, "FAIL")) << check;
  }
  const Json j = json_of("verify central --n 2");
  EXPECT_EQ(j.at("results").at("checks")[0].at("status"), "PASS");
  EXPECT_EQ(qmh("verify").code, 2);
  EXPECT_EQ(qmh("verify nonsense").code, 2);
}

TEST(Cli, Compare) {
  const Json two = json_of("compare --n 2");
  for (const auto& c : two.at("results").at("comparisons")) EXPECT_EQ(c.at("status"), "PASS");
  const Json three = json_of("compare --n 3 --group M");
  const Json& c = three.at("results").at("comparisons")[0];
  EXPECT_EQ(c.at("status"), "DIVERGENT");
  EXPECT_EQ(c.at("diff"), Json::parse(R"j({"2":1,"3":3,"4":3,"5":1})j"));
  EXPECT_EQ(c.at("attributed_to"), Json::parse(R"j(["(0,2,0)"])j"));
  EXPECT_EQ(c.at("attribution_verified"), true);
  const CliRun four = qmh("compare --n 4");
  EXPECT_EQ(four.code, 0);
  EXPECT_TRUE(contains(four.out, "DIVERGENT"));
  EXPECT_EQ(qmh("compare --n 5").code, 2);
  EXPECT_EQ(qmh("compare").code, 2);
}

TEST(Cli, DeterministicAndOutputFile) {
  const std::string args = "--format json --seed 7 oracle hochschild --n 2 --character 1,-1 --cap 4 --pmax 2 --mode modp";
  const CliRun a = qmh(args), b = qmh(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto path = std::filesystem::temp_directory_path() / "qmh_cli_output.json";
  std::filesystem::remove(path);
  const CliRun c = qmh("--format json --output " + path.string() + " betti --n 2");
  EXPECT_EQ(c.code, 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(Json::parse(file.str()), Json::parse(c.out));
  std::filesystem::remove(path);
}

}  // namespace

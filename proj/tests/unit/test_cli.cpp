#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GLK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(GLK_FIXTURES) + "/" + name; }

std::string tmp(const std::string& name) { return ::testing::TempDir() + "glk_" + name; }

}  // namespace

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("lift simulate --help").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nice scan --curve 0,0,1,-1,0 --p 4 --limit 30").code, 2);
  EXPECT_EQ(run("purity window --p 5 --m 2 --k 1").code, 2);
  EXPECT_EQ(run("selmer ledger --chase bogus").code, 2);
  EXPECT_EQ(run("lift simulate --p 5 --k 2 --stages 0").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
}

TEST(Cli, DomainErrorsExitThree) {
  EXPECT_EQ(run("frob order --zeh-marschke --q 2").code, 3);
  EXPECT_EQ(run("frob order --zeh-marschke --q 367").code, 3);
}

TEST(Cli, InvalidLedgerExitsTwo) {
  const std::string path = tmp("bad_ledger.json");
  std::ofstream(path) << R"({"places":[{"label":"a","h0":1,"h0_dual":1,"h1":1,"h1_dual":1,"dimL":0}]})";
  EXPECT_EQ(run("selmer ledger " + path).code, 2);
}

TEST(Cli, FrobOrder) {
  const auto r = run("frob order --zeh-marschke --q 7");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["order"], 3);
  EXPECT_EQ(j["discriminant"], "19762701704603829016723456");
  EXPECT_EQ(j["manifest"]["command"], "frob order");
  const auto x = json::parse(run("frob order --poly 1,0,1 --q 3").out);
  EXPECT_EQ(x["order"], 2);
}

TEST(Cli, NiceScanCsvAndSummary) {
  const std::string csv = tmp("scan.csv"), sum = tmp("scan.json");
  const auto r = run("nice scan --curve 0,0,1,-1,0 --p 5 --m 1 --k 1 --limit 30 --out " + csv + " --summary " + sum);
  ASSERT_EQ(r.code, 0);
  std::ifstream in(csv);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(first, "2,true,true,3");
  const auto j = json::parse(std::ifstream(sum));
  EXPECT_EQ(j["oracle_density"], "1/4");
  EXPECT_EQ(j["scanned"], 9);
}

TEST(Cli, NiceScanFromTable) {
  const auto r = run("nice scan --table " + fixture("frob_table.json") + " --p 5 --m 2 --k 1 --limit 20");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2,true,true,3"), std::string::npos);
}

TEST(Cli, NiceDensity) {
  const auto j = json::parse(run("nice density --p 7 --k 1").out);
  EXPECT_EQ(j["density"], "2/9");
}

TEST(Cli, PurityWindowSingleAndBatch) {
  auto j = json::parse(run("purity window --p 5 --m 2 --k 1 --r 157 --trace 3").out);
  EXPECT_EQ(j["a"], 3);
  EXPECT_FALSE(j["infeasible"].get<bool>());
  j = json::parse(run("purity window --p 5 --m 2 --k 1 --r 29 --trace 12").out);
  EXPECT_TRUE(j["infeasible"].get<bool>());
  const auto b = run("purity window --p 5 --m 2 --k 1 --batch " + fixture("purity_batch.csv"));
  ASSERT_EQ(b.code, 0);
  const auto rows = json::parse(b.out)["results"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(rows[2]["infeasible"].get<bool>());
  EXPECT_EQ(rows[3]["a"], -1);
  EXPECT_FALSE(json::parse(b.out)["manifest"]["inputs"].empty());
}

TEST(Cli, Compatible) {
  const auto j = json::parse(run("compatible --r 101 --k 1 --c1 5,1,2 --c2 7,1,3").out);
  EXPECT_EQ(j["a"], 17);
}

TEST(Cli, SelmerLedgerFileAndChase) {
  auto j = json::parse(run("selmer ledger " + fixture("ledger_balanced.json")).out);
  EXPECT_EQ(j["difference"], 0);
  j = json::parse(run("selmer ledger --file " + fixture("ledger_n2_d1.json")).out);
  EXPECT_EQ(j["difference"], -3);
  j = json::parse(run("selmer ledger --chase L:2,1").out);
  EXPECT_EQ(j["chase"]["after"], -3);
  j = json::parse(run("selmer ledger --chase unram:4").out);
  EXPECT_EQ(j["chase"]["before"], -4);
  EXPECT_EQ(j["chase"]["after"], 0);
}

TEST(Cli, GrowthSchedule) {
  const auto j = json::parse(run("growth schedule --density 0.2 --stages 4 --epsilon 0.5").out);
  EXPECT_EQ(j["stages"][0]["f"], 149);
  EXPECT_EQ(j["exponents"], json({"2", "3/2", "5/4", "9/8"}));
  EXPECT_EQ(j["violation"]["status"], "violation");
  EXPECT_EQ(j["violation"]["first_checked_stage"], 3);
}

TEST(Cli, SimulateReproducibleApartFromTimestamp) {
  const std::string a = tmp("sim_a.json"), b = tmp("sim_b.json"), ev = tmp("sim_events.jsonl");
  ASSERT_EQ(run("lift simulate --p 5 --k 2 --stages 2 --seed 3 --out " + a + " --events " + ev).code, 0);
  ASSERT_EQ(run("lift simulate --p 5 --k 2 --stages 2 --seed 3 --out " + b).code, 0);
  auto ja = json::parse(std::ifstream(a)), jb = json::parse(std::ifstream(b));
  ja["manifest"].erase("timestamp");
  jb["manifest"].erase("timestamp");
  EXPECT_EQ(ja.dump(), jb.dump());
  std::ifstream events(ev);
  std::string line;
  int lines = 0;
  while (std::getline(events, line)) {
    EXPECT_NO_THROW((void)json::parse(line));
    ++lines;
  }
  EXPECT_GT(lines, 0);
}

TEST(Cli, SourceDateEpochPinsTimestamp) {
  const auto r = run("nice density --p 5 --k 1");
  const std::string cmd = "SOURCE_DATE_EPOCH=0 " + std::string(GLK_CLI_PATH) + " nice density --p 5 --k 1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_TRUE(pipe);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  EXPECT_EQ(json::parse(out)["manifest"]["timestamp"], "1970-01-01T00:00:00Z");
  EXPECT_EQ(r.code, 0);
}

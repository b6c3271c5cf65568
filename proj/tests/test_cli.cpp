#include <gtest/gtest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(HEATWG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
  const auto r = run(args);
  EXPECT_EQ(r.status, 0) << r.out;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, HaarEntryIsExact) {
  const auto j = run_json("moment --group O --N 2 --n 2 --haar --entry '1.1|1.1'");
  ASSERT_EQ(j["entries"].size(), 1u);
  EXPECT_DOUBLE_EQ(j["entries"][0]["value"].get<double>(), 0.5);
  EXPECT_EQ(j["entries"][0]["exact"].get<std::string>(), "1/2");
  EXPECT_EQ(j["method"].get<std::string>(), "haar");
}

TEST(Cli, UnitaryAtTimeZeroIsIdentity) {
  const auto j = run_json("moment --group U --N 2 --n 1 --m 1 --t 0");
  for (const auto& e : j["entries"]) {
    const bool diagonal = e["row"] == e["col"];
    EXPECT_NEAR(e["value"].get<double>(), diagonal ? 1.0 : 0.0, 1e-14);
  }
}

TEST(Cli, FormulaMatchesExponentialOracle) {
  const auto a = run_json("moment --group Sp --N 1 --n 2 --t 0.6 --method formula");
  const auto b = run_json("moment --group Sp --N 1 --n 2 --t 0.6 --method expm");
  EXPECT_EQ(b["method"].get<std::string>(), "expm-oracle");
  ASSERT_EQ(a["entries"].size(), b["entries"].size());
  for (std::size_t i = 0; i < a["entries"].size(); ++i)
    EXPECT_NEAR(a["entries"][i]["value"].get<double>(), b["entries"][i]["value"].get<double>(), 1e-12);
}

TEST(Cli, CsvOutput) {
  const auto r = run("moment --group O --N 3 --n 1 --t 1 --format csv --entry '2|2'");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("group,N,n,m,t,method,index,value,exact,stderr\n", 0), 0u);
  EXPECT_NE(r.out.find("O,3,1,0,"), std::string::npos);
}

TEST(Cli, RejectsOversizedTensor) {
  const auto r = run("moment --group O --N 4 --n 7 --t 1");
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("heatwg:"), std::string::npos);
}

TEST(Cli, RejectsBadEntry) {
  EXPECT_NE(run("moment --group O --N 2 --n 2 --t 1 --entry '1.3|1.1'").status, 0);
}

TEST(Cli, VerifySuite) {
  const auto r = run("verify --suite so-correction");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(run("verify --suite nonsense").status, 0);
}

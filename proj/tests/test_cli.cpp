#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(OTK_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(OTK_DATA_DIR) + "/" + name; }

TEST(Cli, HilbertOfTriangle) {
  auto r = run("hilbert --input " + data("triangle.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("OT: (1 + t)/(1 - t)^2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("SRind: (1 + t + t^2)/(1 - t)^2"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("validate --example k4").code, 0);
  EXPECT_EQ(run("tp1").code, 0);
  EXPECT_EQ(run("validate --input " + data("bad.json")).code, 3);
  EXPECT_EQ(run("verify-all --input " + data("not_unimodular.json")).code, 3);
  EXPECT_EQ(run("validate --input " + data("malformed.json")).code, 2);
  EXPECT_EQ(run("validate --input " + data("does_not_exist.json")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify-all --example triangle --skip nonsense").code, 2);
  EXPECT_EQ(run("hilbert --example triangle --input " + data("tp1.json")).code, 2);
}

TEST(Cli, VerifyAllJsonIsByteIdentical) {
  auto a = run("verify-all --example four --max-degree 3 --json -");
  auto b = run("verify-all --example four --max-degree 3 --json -");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["checks"].size(), 7u);
  for (const auto& c : j["checks"]) EXPECT_FALSE(c.contains("millis"));
}

TEST(Cli, TimingIsOptIn) {
  auto r = run("verify-all --example tp1 --max-degree 2 --timing --json -");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c.contains("millis"));
}

TEST(Cli, PsiReportJson) {
  auto r = run("psi-report --example tp1 --max-degree 3 --json -");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<long> kernel;
  for (const auto& p : j["psi"]["pieces"]) kernel.push_back(p["kernel_dimension"]);
  EXPECT_EQ(kernel, (std::vector<long>{0, 1, 2, 3}));
}

TEST(Cli, CircuitsJson) {
  auto r = run("circuits --example triangle --json -");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["circuits"].size(), 1u);
}

}  // namespace

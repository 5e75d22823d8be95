#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HGC_CLI_PATH) + " " + args + " 2>/dev/null";
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

std::string data(const std::string& name) { return std::string(HGC_TEST_DATA) + "/" + name; }

std::string first_data_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') return line;
  return "";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() / ("hgc_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  /// ap(10,3) and its container map, built through the tool.
  void build_ap10() {
    ASSERT_EQ(run("gen ap --n 10 --k 3 --out " + path("ap10.hg")).code, 0);
    ASSERT_EQ(run("containers --input " + path("ap10.hg") + " --p 1/4 --family min-size:6 --out " + path("ap10.json"))
                  .code,
              0);
  }

  fs::path dir;
};

}  // namespace

TEST_F(CliTest, GenHeaders) {
  auto ap = run("gen ap --n 5 --k 3");
  EXPECT_EQ(ap.code, 0);
  EXPECT_EQ(first_data_line(ap.out), "3 5 4");
  auto copies = run("gen copies --graph " + data("k3.el") + " --n 4");
  EXPECT_EQ(copies.code, 0);
  EXPECT_EQ(first_data_line(copies.out), "3 6 4");
  EXPECT_EQ(first_data_line(run("gen poly --n 10 --k 2 --r 2").out), "3 10 10");
  EXPECT_EQ(first_data_line(run("gen homothetic --n 3 --config '1;2'").out), "2 3 3");
  EXPECT_EQ(first_data_line(run("gen blowup --graph " + data("p3.el") + " --n 2").out), "2 8 8");
}

TEST_F(CliTest, BadInputExitsTwo) {
  EXPECT_EQ(run("gen ap --n 2 --k 3").code, 2);
  EXPECT_EQ(run("gen ap --k 3").code, 2);
  EXPECT_EQ(run("gen copies --graph " + path("missing.el") + " --n 4").code, 2);
  EXPECT_EQ(run("mc --n 5 --p 0.5 --delta 1/2").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
}

TEST_F(CliTest, CountAndDensity) {
  ASSERT_EQ(run("gen ap --n 5 --k 3 --out " + path("ap5.hg")).code, 0);
  auto brute = run("count brute --input " + path("ap5.hg") + " --m 3");
  EXPECT_EQ(brute.code, 0);
  EXPECT_NE(brute.out.find("\n3,6\n"), std::string::npos) << brute.out;
  auto threaded = run("count brute --input " + path("ap5.hg") + " --threads 3 --json");
  auto j = nlohmann::json::parse(threaded.out);
  EXPECT_EQ(j["counts"][4]["count"], "1");
  EXPECT_EQ(first_data_line(run("density --input " + path("ap5.hg") + " --s 4").out), "0/1");
  EXPECT_EQ(first_data_line(run("density --input " + path("ap5.hg") + " --s 5").out), "1/1");
}

TEST_F(CliTest, TwoDensity) {
  EXPECT_EQ(run("m2 --graph " + data("c4.el")).out, "3/2\n");
  EXPECT_EQ(run("m2 --graph " + data("k3.el")).out, "2/1\n");
}

TEST_F(CliTest, FreshMapVerifies) {
  build_ap10();
  auto v = run("verify --input " + path("ap10.hg") + " --containers " + path("ap10.json") + " --json");
  EXPECT_EQ(v.code, 0) << v.out;
  auto j = nlohmann::json::parse(v.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["witnesses"], 278);
}

TEST_F(CliTest, BoundDominatesBrute) {
  build_ap10();
  auto brute = nlohmann::json::parse(run("count brute --input " + path("ap10.hg") + " --json").out);
  auto bound = nlohmann::json::parse(
      run("count bound --input " + path("ap10.hg") + " --containers " + path("ap10.json") + " --json").out);
  ASSERT_EQ(brute["counts"].size(), bound["counts"].size());
  for (std::size_t m = 0; m < brute["counts"].size(); ++m)
    EXPECT_LE(std::stoull(brute["counts"][m]["count"].get<std::string>()),
              std::stoull(bound["counts"][m]["count"].get<std::string>()));
}

TEST_F(CliTest, FullFamilyContainersAreProper) {
  ASSERT_EQ(run("gen ap --n 9 --k 3 --out " + path("ap9.hg")).code, 0);
  ASSERT_EQ(run("containers --input " + path("ap9.hg") + " --p 1/3 --family min-size:9 --out " + path("m.json")).code,
            0);
  auto j = nlohmann::json::parse(slurp(path("m.json")));
  for (const auto& r : j["records"]) EXPECT_LT(r["container"].size(), 9u);
}

TEST_F(CliTest, OverstatedEpsilonIsRejected) {
  ASSERT_EQ(run("gen ap --n 10 --k 3 --out " + path("ap10.hg")).code, 0);
  EXPECT_EQ(run("containers --input " + path("ap10.hg") + " --p 1/4 --family min-size:6 --eps 1/2").code, 2);
  EXPECT_EQ(run("containers --input " + path("ap10.hg") + " --p 1/4 --family min-size:5").code, 2);
}

TEST_F(CliTest, FaultInjectionExitsOne) {
  build_ap10();
  auto original = nlohmann::ordered_json::parse(slurp(path("ap10.json")));

  auto widened = original;
  for (auto& r : widened["records"])
    if (r["fingerprint"].size() == 2) {
      r["container"] = nlohmann::ordered_json::array({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
      break;
    }
  std::ofstream(path("widened.json")) << widened.dump();
  EXPECT_EQ(run("verify --input " + path("ap10.hg") + " --containers " + path("widened.json")).code, 1);

  auto trimmed = original;
  for (auto& r : trimmed["records"])
    if (r["fingerprint"].size() >= 2) {
      r["fingerprint"].erase(r["fingerprint"].size() - 1);
      break;
    }
  std::ofstream(path("trimmed.json")) << trimmed.dump();
  auto t = run("verify --input " + path("ap10.hg") + " --containers " + path("trimmed.json"));
  EXPECT_EQ(t.code, 1) << t.out;
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  build_ap10();
  std::string first_map = slurp(path("ap10.json"));
  ASSERT_EQ(run("containers --input " + path("ap10.hg") + " --p 1/4 --family min-size:6 --out " + path("again.json"))
                .code,
            0);
  EXPECT_EQ(slurp(path("again.json")), first_map);
  for (const std::string& cmd :
       std::vector<std::string>{"gen ap --n 11 --k 3", "mc --n 12 --p 1/2 --delta 1/1 --trials 50 --seed 9 --json",
        "count brute --input " + path("ap10.hg"), "verify --input " + path("ap10.hg") + " --containers " +
                                                   path("ap10.json") + " --json"}) {
    auto a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

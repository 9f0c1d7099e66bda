#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "sqtile/sqtile.hpp"

using namespace sqtile;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run sqtile_cli(const std::string& args) {
  const std::string cmd = std::string(SQTILE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sqtile_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name), std::ios::binary) << content;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, Decide) {
  auto r = sqtile_cli("decide 3 7");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "not tileable (row3)\n");
  r = sqtile_cli("decide 10 10");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("tileable", 0), 0u);
  EXPECT_EQ(sqtile_cli("decide 0 5").status, 2);
  EXPECT_EQ(sqtile_cli("decide 5").status, 2);
  EXPECT_EQ(sqtile_cli("decide 7 20").out, "tileable (large_theorem)\n");
}

TEST_F(CliTest, SolveThenVerify) {
  auto r = sqtile_cli("solve 5 6 -o " + path("a.txt"));
  EXPECT_EQ(r.status, 0);
  const auto text = oracle::slurp(path("a.txt"));
  EXPECT_EQ(parse_tiling(text).placements.size(), 5u);
  r = sqtile_cli("verify " + path("a.txt"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "VALID\n");

  EXPECT_EQ(sqtile_cli("solve 5 6").out, text);
}

TEST_F(CliTest, SolveNoTiling) {
  const auto r = sqtile_cli("solve 2 3");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "no tiling\n");
  EXPECT_EQ(sqtile_cli("solve 2 3 --engine construct").status, 1);
}

TEST_F(CliTest, SolveConstructLarge) {
  auto r = sqtile_cli("solve 41 57 --engine construct -o " + path("big.txt"));
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(verify(parse_tiling(oracle::slurp(path("big.txt")))).valid());
  EXPECT_EQ(sqtile_cli("verify " + path("big.txt")).out, "VALID\n");
}

TEST_F(CliTest, SolveMinSideAndNodeLimit) {
  auto r = sqtile_cli("solve 6 9 --min-side 3 -o " + path("k3.txt"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(sqtile_cli("verify --min-side 3 " + path("k3.txt")).status, 0);
  EXPECT_EQ(sqtile_cli("solve 4 5 --min-side 3").status, 1);
  EXPECT_EQ(sqtile_cli("solve 13 8 --node-limit 2").status, 3);
  EXPECT_EQ(sqtile_cli("solve 5 6 --engine construct --min-side 3").status, 2);
  EXPECT_EQ(sqtile_cli("solve 5 6 --engine magic").status, 2);
}

TEST_F(CliTest, VerifyFailures) {
  auto r = sqtile_cli("verify " + write("o.txt", "tiling 3 3\n0 0 3\n1 0 2\n"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.rfind("OVERLAP", 0), 0u);

  r = sqtile_cli("verify --min-side 2 " + write("s.txt", "tiling 1 2\n0 0 1\n1 0 1\n"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.rfind("SIDE_TOO_SMALL", 0), 0u);

  r = sqtile_cli("verify " + write("u.txt", "tiling 4 4\n2 0 2\n0 0 2\n"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.rfind("PARSE_ERROR", 0), 0u);

  r = sqtile_cli("verify " + write("g.txt", "tiling 4 4\n0 0 2\n2 0 2\n0 2 2\n"));
  EXPECT_EQ(r.out, "GAP at (2,2)\n");

  EXPECT_EQ(sqtile_cli("verify " + path("missing.txt")).status, 2);
}

TEST_F(CliTest, TablePrettyMatchesSearch) {
  const auto r = sqtile_cli("table --max 19");
  ASSERT_EQ(r.status, 0);
  // Parse the check-mark grid back into booleans.
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  const auto table = build_table(19);
  for (int m = 2; m <= 19; ++m) {
    ASSERT_TRUE(std::getline(is, line));
    EXPECT_EQ(std::stoi(line.substr(0, 3)), m);
    std::size_t pos = 3;
    for (int n = 2; n <= 19; ++n) {
      const bool tick = line.compare(pos, 5, "  ✓") == 0;
      pos += tick ? 5 : 3;
      EXPECT_EQ(tick, table.at(m, n)) << m << "x" << n;
    }
    EXPECT_EQ(pos, line.size());
  }
}

TEST_F(CliTest, TableRawRoundTrip) {
  const auto r = sqtile_cli("table --max 19 --raw");
  std::istringstream is(r.out);
  EXPECT_EQ(read_table(is), build_table(19));
  EXPECT_EQ(r.out, oracle::slurp(SQTILE_GOLDEN_DIR "/table1.txt"));
}

TEST_F(CliTest, TableTiny) {
  EXPECT_EQ(sqtile_cli("table --max 2").out, "m\\n  2\n  2  ✓\n");
  EXPECT_EQ(sqtile_cli("table --max 1").status, 2);
}

TEST_F(CliTest, TablePastNineteen) {
  for (const std::string engine : {"search", "theory"}) {
    const auto r = sqtile_cli("table --max 25 --raw --engine " + engine);
    std::istringstream is(r.out);
    const auto t = read_table(is);
    for (int m = 6; m <= 25; ++m)
      for (int n = 20; n <= 25; ++n) EXPECT_TRUE(t.at(m, n)) << engine << " " << m << "x" << n;
    EXPECT_FALSE(t.at(3, 25));
    EXPECT_FALSE(t.at(5, 19));
  }
}

TEST_F(CliTest, RenderSvgAndAscii) {
  sqtile_cli("solve 5 6 -o " + path("b.txt"));
  auto r = sqtile_cli("render " + path("b.txt") + " -o " + path("b.svg"));
  ASSERT_EQ(r.status, 0);
  const auto svg = oracle::slurp(path("b.svg"));
  EXPECT_EQ(svg, to_svg(parse_tiling(oracle::slurp(path("b.txt")))));

  r = sqtile_cli("render --ascii " + write("gap.txt", "tiling 3 4\n0 0 2\n2 0 2\n"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "aabb\naabb\n....\n");

  EXPECT_EQ(sqtile_cli("render " + write("bad.txt", "nope\n")).status, 2);
}

TEST_F(CliTest, Closure) {
  EXPECT_EQ(sqtile_cli("closure --max 19").out, "exceptions: 11x13\n");
  EXPECT_EQ(sqtile_cli("closure --max 10").out, "exceptions: none\n");
  EXPECT_EQ(sqtile_cli("closure --max 19 --all-squares").out, "exceptions: 11x13\n");

  const auto even = sqtile_cli("closure --max 19 --seeds 2").out;
  EXPECT_NE(even.find("3x3"), std::string::npos);
  EXPECT_NE(even.find("11x13"), std::string::npos);
  EXPECT_EQ(even.find("2x2,"), std::string::npos);

  auto w = sqtile_cli("closure --witness 5 6");
  EXPECT_EQ(w.status, 0);
  EXPECT_EQ(w.out, "(V (H S3 S3) (H (H S2 S2) S2))\n");
  EXPECT_EQ(sqtile_cli("closure --witness 11 13").status, 1);
  EXPECT_EQ(sqtile_cli("closure --seeds 1").status, 2);
}

TEST_F(CliTest, Figures) {
  const auto r = sqtile_cli("figures --outdir " + path("figs"));
  ASSERT_EQ(r.status, 0);
  int svgs = 0;
  for (const auto& e : fs::directory_iterator(path("figs"))) svgs += e.path().extension() == ".svg";
  EXPECT_EQ(svgs, 59);
  EXPECT_TRUE(fs::exists(path("figs") + "/11x13.svg"));
  EXPECT_TRUE(fs::exists(path("figs") + "/5x6.svg"));
  EXPECT_FALSE(fs::exists(path("figs") + "/6x9.svg"));
}

TEST_F(CliTest, SolveElevenByThirteenIsByteStable) {
  sqtile_cli("solve 11 13 -o " + path("x1.txt"));
  sqtile_cli("solve 11 13 -o " + path("x2.txt"));
  const auto a = oracle::slurp(path("x1.txt"));
  EXPECT_EQ(a, oracle::slurp(path("x2.txt")));
  EXPECT_EQ(a, oracle::slurp(SQTILE_GOLDEN_DIR "/11x13.txt"));
}

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "fixtures.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MRBOUND_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string spec(const char* name) { return fixture::data_path(name); }

}  // namespace

TEST(Cli, EvalFibonacci) {
  const CliRun r = run("eval " + spec("fibonacci.json") + " --point 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "G = 55 (exact), |G| ∈ [55,55]\n");
}

TEST(Cli, CheckDiagonal) {
  const CliRun r = run("check " + spec("diagonal.json") + " --i0 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no identically vanishing subsum containing i0"), std::string::npos);
  EXPECT_NE(r.out.find("pointwise vanishing at 5 of 65 points"), std::string::npos);
}

TEST(Cli, ScanSingleTerm) {
  const CliRun r = run("scan " + spec("power_of_two.json") + " --i0 1 --eps 0.1 --max-norm 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "N,min_ratio_lo,min_ratio_hi,argmin,points_total,skipped_vanishing,skipped_zero_f,undecided\n"
            "1,1.10517091808,1.10517091808,(1),1,0,0,0\n"
            "2,1.22140275816,1.22140275816,(2),1,0,0,0\n"
            "3,1.34985880758,1.34985880758,(3),1,0,0,0\n");
}

TEST(Cli, ScanIsByteIdentical) {
  const std::string args = "scan " + spec("cubic.json") + " --i0 3 --eps 1/20 --max-norm 15";
  const CliRun a = run(args), b = run(args + " --threads 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ScanWritesOutFile) {
  const std::string path = ::testing::TempDir() + "/mrbound_scan.csv";
  const CliRun r = run("scan " + spec("power_of_two.json") + " --i0 1 --eps 0.1 --max-norm 2 --out " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(mrbound::read_text_file(path).find("2,1.22140275816"), std::string::npos);
}

TEST(Cli, DocumentIndexSelectsPhiTerm) {
  // Document term 1 is the phi term, which sorts second canonically.
  const CliRun r = run("scan " + spec("fibonacci.json") + " --i0 1 --eps 0.1 --max-norm 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n10,2.71"), std::string::npos) << r.out;
}

TEST(Cli, Lemma) {
  const CliRun r = run("lemma " + spec("mixed.json") + " --term-index 1 --samples 200 --seed 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations 0"), std::string::npos);
}

TEST(Cli, Height) {
  const CliRun r = run("height " + spec("fibonacci.json") + " --element 0,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H_K(x) ∈ [5,5]"), std::string::npos);
}

TEST(Cli, Probe) {
  const CliRun r = run("probe " + spec("fibonacci.json") + " --i0 1 --eps 0.1 --max-norm 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("N,cemp_min_lo,cemp_min_hi,argmin,running_min_lo,running_min_hi,points_total,skipped,undecided\n", 0),
            0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("scan " + spec("fibonacci.json")).code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("eval " + spec("half_base.json") + " --point 1").code, 2);
  EXPECT_EQ(run("scan " + spec("fibonacci.json") + " --i0 3 --eps 0.1 --max-norm 3").code, 2);
  EXPECT_EQ(run("scan " + spec("fibonacci.json") + " --i0 1 --eps zero --max-norm 3").code, 2);
  EXPECT_EQ(run("probe " + spec("unit_bases.json") + " --i0 1 --eps 0.1 --max-norm 3").code, 2);
}

TEST(Cli, DecidedScanExitsZero) {
  const CliRun r = run("scan " + spec("diagonal.json") + " --i0 1 --eps 0.1 --max-norm 6 --precision 16");
  EXPECT_EQ(r.code, 0);
  std::size_t rows = 0;
  for (std::size_t pos = r.out.find('\n'); pos != std::string::npos && pos + 1 < r.out.size();
       pos = r.out.find('\n', pos + 1)) {
    const std::size_t end = r.out.find('\n', pos + 1);
    const std::string row = r.out.substr(pos + 1, end - pos - 1);
    EXPECT_EQ(row.substr(row.rfind(',') + 1), "0") << row;
    ++rows;
  }
  EXPECT_EQ(rows, 6u);
}

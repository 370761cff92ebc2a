#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mrbound::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kRejected = 2,
  kUndecided = 3,
  kLemmaViolation = 4,
};

struct Options {
  std::string spec_path;
  std::string point;
  std::size_t i0 = 1;          // document term index, 1-based
  std::size_t term_index = 1;  // document term index, 1-based
  std::string eps = "0.1";
  std::uint64_t max_norm = 10;
  std::optional<std::size_t> place;  // 1-based
  long precision = 128;
  unsigned threads = 0;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  std::string element;
  std::string out_path;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code. Library errors propagate as exceptions.
int run_eval(const Options& o, std::ostream& out, std::ostream& err);
int run_check(const Options& o, std::ostream& out, std::ostream& err);
int run_scan(const Options& o, std::ostream& out, std::ostream& err);
int run_lemma(const Options& o, std::ostream& out, std::ostream& err);
int run_height(const Options& o, std::ostream& out, std::ostream& err);
int run_probe(const Options& o, std::ostream& out, std::ostream& err);

}  // namespace mrbound::cli

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mrbound/error.hpp"

namespace {

using mrbound::cli::Options;
using Runner = std::function<int(const Options&, std::ostream&, std::ostream&)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multi-recurrence growth bounds over number fields"};
  app.require_subcommand(1);
  Options o;
  Runner runner;

  auto add = [&](const char* name, const char* help, Runner fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("spec", o.spec_path, "Recurrence document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--precision", o.precision, "Starting precision in bits")->check(CLI::Range(16, 4096));
    sub->callback([&runner, fn] { runner = fn; });
    return sub;
  };
  auto add_scan_options = [&](CLI::App* sub) {
    sub->add_option("--i0", o.i0, "Comparison term (1-based, document order)")->required();
    sub->add_option("--eps", o.eps, "Epsilon, decimal or p/q")->required();
    sub->add_option("--max-norm", o.max_norm, "Largest shell |n|")->required()->check(CLI::PositiveNumber);
    sub->add_option("--place", o.place, "Embedding index (1-based)");
    sub->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    sub->add_option("--out", o.out_path, "Write the CSV here instead of stdout");
  };

  CLI::App* eval = add("eval", "Evaluate G at a point", mrbound::cli::run_eval);
  eval->add_option("--point", o.point, "Lattice point, e.g. 3,4")->required();
  eval->add_option("--place", o.place, "Embedding index (1-based)");

  CLI::App* check = add("check", "Check the vanishing-subsum hypothesis", mrbound::cli::run_check);
  check->add_option("--i0", o.i0, "Term index (1-based, document order)")->required();
  check->add_option("--max-norm", o.max_norm, "Pointwise search radius")->check(CLI::PositiveNumber);

  add_scan_options(add("scan", "Scan shells for the growth bound", mrbound::cli::run_scan));
  add_scan_options(add("probe", "Empirical constant probe", mrbound::cli::run_probe));

  CLI::App* lemma = add("lemma", "Polynomial height bound on sampled points", mrbound::cli::run_lemma);
  lemma->add_option("--term-index", o.term_index, "Term whose polynomial is tested (1-based)")->required();
  lemma->add_option("--samples", o.samples, "Number of points");
  lemma->add_option("--seed", o.seed, "Sampling seed");
  lemma->add_option("--max-norm", o.max_norm, "Largest |n| sampled")->check(CLI::PositiveNumber);
  o.max_norm = 10;

  CLI::App* height = add("height", "Field height of an element", mrbound::cli::run_height);
  height->add_option("--element", o.element, "Power-basis coordinates, e.g. 1/2,1/2")->required();

  lemma->preparse_callback([&](std::size_t) { o.max_norm = 100; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mrbound::cli::kUsage;
  }

  try {
    std::ostringstream buffer;
    const int code = runner(o, buffer, std::cerr);
    if (o.out_path.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot write " << o.out_path << '\n';
        return mrbound::cli::kUsage;
      }
      file << buffer.str();
    }
    return code;
  } catch (const mrbound::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return mrbound::cli::kRejected;
  }
}

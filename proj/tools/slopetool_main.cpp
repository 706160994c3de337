// slopetool: boundary slopes of 2-bridge knots and links from exact
// continued fraction arithmetic.
//
//   slopetool analyze 2/7 --format json
//   slopetool sweep --max-q 200 --knots-only --out sweep.csv --jobs 4
//   slopetool tree 2/7 --ascii
//   slopetool canonicalize 4/7

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "twobridge/commands.hpp"

namespace {

unsigned default_jobs() {
  if (const char* env = std::getenv("SLOPE_DIAMETER_JOBS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring SLOPE_DIAMETER_JOBS='" << env << "'\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace twobridge;

  CLI::App app{"boundary slope diameters of 2-bridge knots"};
  app.require_subcommand(1);

  std::string fraction;
  std::string format = "text";
  std::optional<std::string> out_path;
  bool ascii = false;
  SweepOptions sweep_opt;
  sweep_opt.jobs = default_jobs();

  auto* analyze = app.add_subcommand(
      "analyze", "full slope report for one fraction p/q");
  analyze->add_option("fraction", fraction, "reduced p/q with 0 < p < q")
      ->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sweep = app.add_subcommand(
      "sweep", "CSV of all reduced fractions with q up to a bound");
  sweep->add_option("--max-q", sweep_opt.max_q, "largest denominator")
      ->required();
  sweep->add_flag("--knots-only", sweep_opt.knots_only, "odd q only");
  sweep->add_flag("--canonical-classes", sweep_opt.canonical_classes,
                  "one row per equivalence class");
  sweep->add_option("--out", out_path, "CSV output path (default: stdout)");
  sweep->add_option("--jobs", sweep_opt.jobs,
                    "worker threads (default: SLOPE_DIAMETER_JOBS or 1)");

  auto* tree = app.add_subcommand(
      "tree", "expansion tree for one fraction, as Graphviz DOT");
  tree->add_option("fraction", fraction, "reduced p/q with 0 < p < q")
      ->required();
  tree->add_option("--out", out_path, "DOT output path (default: stdout)");
  tree->add_flag("--ascii", ascii, "write DNE instead of ∄");

  auto* canon = app.add_subcommand(
      "canonicalize", "smallest p' with K(p'/q) = K(p/q)");
  canon->add_option("fraction", fraction, "reduced p/q with 0 < p < q")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;  // --help exits 0
  }

  if (analyze->parsed())
    return cmd_analyze(fraction,
                       format == "json" ? ReportFormat::json
                                        : ReportFormat::text,
                       std::cout, std::cerr);
  if (sweep->parsed()) return cmd_sweep(sweep_opt, out_path, std::cout, std::cerr);
  if (tree->parsed())
    return cmd_tree(fraction, out_path, ascii, std::cout, std::cerr);
  if (canon->parsed()) return cmd_canonicalize(fraction, std::cout, std::cerr);
  return kExitUsage;
}

#ifndef TWOBRIDGE_COMMANDS_HPP
#define TWOBRIDGE_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "twobridge/sweep.hpp"

namespace twobridge {

// Exit code contract shared by every subcommand:
//   0  all checks passed
//   1  usage or parse error (bad fraction, bad flag value, I/O failure)
//   2  mathematical assertion failure (engine mismatch, theorem violation,
//      arithmetic overflow)
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMath = 2;

enum class ReportFormat { text, json };

// The subcommand bodies are plain functions over streams so tests can drive
// them in-process; the binary in tools/ only parses flags and dispatches.

int cmd_analyze(const std::string& fraction, ReportFormat format,
                std::ostream& out, std::ostream& err);

// CSV goes to out_path if given, else to out; the summary goes to err when
// the CSV occupies out, else to out.
int cmd_sweep(const SweepOptions& opt,
              const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err);

int cmd_tree(const std::string& fraction,
             const std::optional<std::string>& out_path, bool ascii,
             std::ostream& out, std::ostream& err);

int cmd_canonicalize(const std::string& fraction, std::ostream& out,
                     std::ostream& err);

}  // namespace twobridge

#endif  // TWOBRIDGE_COMMANDS_HPP

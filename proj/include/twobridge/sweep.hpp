#ifndef TWOBRIDGE_SWEEP_HPP
#define TWOBRIDGE_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/report_io.hpp"

namespace twobridge {

struct SweepOptions {
  std::int64_t max_q = 0;
  bool knots_only = false;         // restrict to odd q
  bool canonical_classes = false;  // one row per knot/link, not per fraction
  unsigned jobs = 1;
};

struct SweepSummary {
  std::size_t fractions = 0;
  std::size_t knots = 0;
  std::size_t links = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::int64_t max_num_slopes = 0;
  bool all_engines_agree = true;

  std::string str() const;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (q, p)
  SweepSummary summary;
  // Set when a fraction failed a mathematical check; the sweep stops
  // scheduling work once this happens.
  std::optional<std::string> failure;

  bool ok() const { return !failure.has_value(); }
};

// Analyzes every reduced fraction 0 < p < q <= max_q (subject to the option
// filters), one analysis per worker task. Output order is fixed by (q, p)
// regardless of jobs. A theorem failure, engine mismatch or any other
// mathematical error aborts the sweep and lands in `failure` as a diagnostic
// dump instead of throwing across threads.
SweepResult run_sweep(const SweepOptions& opt);

}  // namespace twobridge

#endif  // TWOBRIDGE_SWEEP_HPP

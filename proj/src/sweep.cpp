#include "twobridge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twobridge/errors.hpp"

namespace twobridge {

std::string SweepSummary::str() const {
  std::ostringstream os;
  os << fractions << " fractions (" << knots << " knots, " << links
     << " links): diameter=2c pass " << pass << ", fail " << fail << ", n/a "
     << not_applicable << "; max |slopes| " << max_num_slopes
     << "; engines agree: " << (all_engines_agree ? "yes" : "NO");
  return os.str();
}

SweepResult run_sweep(const SweepOptions& opt) {
  if (opt.max_q < 2)
    throw ParseError("--max-q must be at least 2, got " +
                     std::to_string(opt.max_q));
  if (opt.jobs < 1) throw ParseError("--jobs must be at least 1");

  std::vector<Rational> tasks;
  for (std::int64_t q = 2; q <= opt.max_q; ++q) {
    if (opt.knots_only && q % 2 == 0) continue;
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational r(p, q);
      if (opt.canonical_classes && canonicalize(r) != r) continue;
      tasks.push_back(r);
    }
  }

  struct Slot {
    std::optional<SweepRow> row;
    std::optional<std::string> error;
  };
  std::vector<Slot> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || abort.load()) break;
      try {
        SlopeReport rep = analyze(tasks[i]);
        if (rep.theorem1 == Theorem1::fail) {
          slots[i].error = "diameter != 2 * crossing for " +
                           tasks[i].str() + "\n" + report_to_text(rep);
          abort.store(true);
        }
        slots[i].row = row_from_report(rep);
      } catch (const std::exception& e) {
        slots[i].error = std::string("analysis of ") + tasks[i].str() +
                         " failed: " + e.what();
        abort.store(true);
      }
    }
  };

  unsigned jobs = std::min<std::size_t>(opt.jobs, std::max<std::size_t>(
                                                      tasks.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepResult result;
  for (auto& slot : slots) {
    if (slot.error && !result.failure) result.failure = slot.error;
    if (!slot.row) continue;
    result.rows.push_back(*slot.row);
  }
  // Tasks were generated in (q, p) order; aborted sweeps may have holes but
  // the surviving rows keep that order.
  auto& s = result.summary;
  for (const auto& row : result.rows) {
    ++s.fractions;
    ++(row.is_knot ? s.knots : s.links);
    switch (row.theorem1) {
      case Theorem1::pass: ++s.pass; break;
      case Theorem1::fail: ++s.fail; break;
      case Theorem1::not_applicable: ++s.not_applicable; break;
    }
    s.max_num_slopes = std::max(s.max_num_slopes, row.num_slopes);
    s.all_engines_agree = s.all_engines_agree && row.engines_agree;
  }
  return result;
}

}  // namespace twobridge

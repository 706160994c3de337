// Acceptance gate for the library: ten independent checks, one line each.
// Exit status 0 only when every check passes, so the binary doubles as a
// CI gate and as a quick way to convince yourself nothing drifted.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "testutil.hpp"
#include "twobridge/btree.hpp"
#include "twobridge/contfrac.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/slopes.hpp"
#include "twobridge/subst.hpp"

using namespace twobridge;

namespace {

struct Criterion {
  bool ok = true;
  std::ostringstream detail;

  template <typename T>
  Criterion& operator<<(const T& v) {
    detail << v;
    return *this;
  }

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// 1. Diameter equals twice the crossing number for every knot with q <= 200,
//    inside a 10 second budget.
Criterion knot_diameter_sweep() {
  Criterion c;
  auto start = std::chrono::steady_clock::now();
  std::size_t knots = 0;
  for (const Rational& r : testutil::reduced_fractions_up_to(200, true)) {
    SlopeReport rep = analyze(r);
    ++knots;
    if (rep.theorem1 != Theorem1::pass || rep.diameter != 2 * rep.crossing) {
      c.require(false, "diameter " + std::to_string(rep.diameter) + " != 2*" +
                           std::to_string(rep.crossing) + " for " + r.str());
      return c;
    }
  }
  double secs = seconds_since(start);
  c.require(secs < 10.0, "sweep took " + std::to_string(secs) + " s");
  if (c.ok) c << knots << " knots, " << secs << " s";
  return c;
}

// 2. The rewrite-mask engine and the expansion-tree engine produce the same
//    boundary set for every fraction with q <= 100.
Criterion engines_agree() {
  Criterion c;
  std::size_t fractions = 0;
  for (const Rational& r : testutil::reduced_fractions_up_to(100, false)) {
    ++fractions;
    if (boundary_cf_set(simple_cf(r)) != leaves(*build_tree(r))) {
      c.require(false, "engines disagree for " + r.str());
      return c;
    }
  }
  c << fractions << " fractions";
  return c;
}

// 3. Closed forms of the alternating runs, with and without rational tails.
Criterion alternating_run_identities() {
  Criterion c;
  const std::vector<std::int64_t> neg{-2, 2}, pos{2, -2};
  for (std::int64_t n = 1; n <= 50 && c.ok; ++n) {
    auto left = expand_repeat({}, neg, static_cast<std::size_t>(n), {});
    c.require(eval_cf(left) == Rational(-(2 * n + 1), 2 * n),
              "[(-2,2)^" + std::to_string(n) + "] is off");
    auto right = expand_repeat({}, pos, static_cast<std::size_t>(n), {});
    c.require(eval_cf(right) == Rational(2 * n + 1, 2 * n),
              "[(2,-2)^" + std::to_string(n) + "] is off");
  }

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<std::int64_t> cd(0, 10);
  int defined = 0, undefined_by_formula = 0, skipped = 0;
  auto check_tail = [&](const std::vector<std::int64_t>& pattern,
                        std::int64_t cc, const Rational& k, const Rational& nu,
                        const Rational& de) {
    auto cf =
        testutil::pattern_with_tail(pattern, static_cast<std::size_t>(cc), k);
    auto v = try_eval_cf(cf);
    if (de.is_zero()) {
      c.require(!v.has_value(), "defined despite zero denominator: " +
                                    cf.str());
      ++undefined_by_formula;
    } else if (v.has_value()) {
      c.require(*v == nu / de, "tail identity off for " + cf.str());
      ++defined;
    } else {
      ++skipped;  // an inner level divided by zero; no value to compare
    }
  };
  for (int i = 0; i < 250 && c.ok; ++i) {
    Rational k = testutil::random_nonzero_rational(rng, 40, 40);
    std::int64_t cc = cd(rng);
    Rational twoc(2 * cc), ck = twoc * k;
    check_tail(neg, cc, k, ck + twoc + k, Rational(1) - ck - twoc);
    check_tail(pos, cc, k, ck - twoc + k, ck - twoc + Rational(1));
  }
  if (c.ok)
    c << "runs to 50; tails: " << defined << " defined, "
      << undefined_by_formula << " undefined by formula, " << skipped
      << " skipped";
  c.require(defined >= 400, "too few defined tail instances");
  return c;
}

// 4. Every slope is bounded by the diameter theorem (|s| <= 2c) and the
//    reference expansion contributes slope 0, for every fraction q <= 200.
Criterion slope_bounds() {
  Criterion c;
  std::size_t fractions = 0;
  for (const Rational& r : testutil::reduced_fractions_up_to(200, false)) {
    SlopeReport rep = analyze(r);
    ++fractions;
    bool zero = false;
    for (std::int64_t s : rep.slopes) {
      zero = zero || s == 0;
      if (s > 2 * rep.crossing || s < -2 * rep.crossing) {
        c.require(false, "slope " + std::to_string(s) + " escapes 2c for " +
                             r.str());
        return c;
      }
    }
    if (!zero) {
      c.require(false, "no zero slope for " + r.str());
      return c;
    }
  }
  c << fractions << " fractions";
  return c;
}

// 5. Slope counts stay under the Fibonacci bound for q <= 200, and the mask
//    count matches a direct no-adjacent-1s enumeration for n <= 20.
Criterion fibonacci_bounds() {
  Criterion c;
  std::int64_t max_slopes = 0;
  for (const Rational& r : testutil::reduced_fractions_up_to(200, false)) {
    SlopeReport rep = analyze(r);
    max_slopes = std::max(max_slopes,
                          static_cast<std::int64_t>(rep.slopes.size()));
    if (std::cmp_greater(rep.slopes.size(), rep.fib_bound)) {
      c.require(false, "slope count escapes the bound for " + r.str());
      return c;
    }
  }

  std::vector<std::int64_t> direct;  // direct[n] = masks of length n+1
  for (std::size_t n = 0; n <= 20; ++n) {
    std::int64_t count = 0;
    std::uint64_t limit = std::uint64_t{1} << (n + 1);
    for (std::uint64_t x = 0; x < limit; ++x)
      if ((x & (x >> 1)) == 0) ++count;
    direct.push_back(count);
    c.require(fib_bound(n) == count,
              "fib_bound(" + std::to_string(n) + ") != direct count");
    if (n <= 12)  // enumerate_masks materializes them all; keep it modest
      c.require(std::cmp_equal(enumerate_masks(n).size(), count),
                "enumerate_masks(" + std::to_string(n) + ") wrong size");
  }
  for (std::size_t n = 2; n <= 20; ++n)
    c.require(direct[n] == direct[n - 1] + direct[n - 2],
              "mask counts break the Fibonacci recurrence at n = " +
                  std::to_string(n));
  if (c.ok)
    c << "max distinct slopes seen: " << max_slopes
      << "; P(20) = " << direct[20];
  return c;
}

// 6. The worked 2/7 example: slope set, extremes, and tree shape.
Criterion golden_2_7() {
  Criterion c;
  SlopeReport rep = analyze(Rational(2, 7));
  const std::vector<std::int64_t> want{-10, -4, 0};
  std::vector<std::int64_t> negated(want.rbegin(), want.rend());
  for (auto& s : negated) s = -s;
  c.require(rep.slopes == want || rep.slopes == negated,
            "slope set is neither {-10,-4,0} nor its negation");
  c.require(rep.diameter == 10, "diameter != 10");
  c.require(rep.crossing == 5, "crossing != 5");
  TreeStats st = tree_stats(*build_tree(Rational(2, 7)));
  c.require(st.live_leaves == 3 && st.dead_leaves == 2,
            "tree shape is not 3 live / 2 dead");
  if (c.ok) c << "slopes {-10,-4,0}, tree 3 live / 2 dead";
  return c;
}

// 7. Torus knots 1/p: exactly two slopes {0, 2p} (up to global negation).
Criterion torus_knots() {
  Criterion c;
  for (std::int64_t p = 3; p <= 99; p += 2) {
    SlopeReport rep = analyze(Rational(1, p));
    std::vector<std::int64_t> want{0, 2 * p}, negated{-2 * p, 0};
    if (rep.slopes != want && rep.slopes != negated) {
      c.require(false, "slope set for 1/" + std::to_string(p) +
                           " is not {0, 2p}");
      return c;
    }
    c.require(rep.diameter == 2 * p,
              "diameter for 1/" + std::to_string(p) + " != 2p");
    if (!c.ok) return c;
  }
  c << "p = 3..99";
  return c;
}

// 8. The closed-form extremes match the enumerated extremes for q <= 200.
Criterion closed_form_extremes() {
  Criterion c;
  std::size_t fractions = 0;
  for (const Rational& r : testutil::reduced_fractions_up_to(200, false)) {
    SlopeReport rep = analyze(r);
    ++fractions;
    if (rep.extremes.min != rep.slopes.front() ||
        rep.extremes.max != rep.slopes.back()) {
      c.require(false, "closed form disagrees for " + r.str());
      return c;
    }
  }
  c << fractions << " fractions";
  return c;
}

// 9. Every mask rewrite preserves the value of the fraction, q <= 200.
Criterion rewrites_preserve_value() {
  Criterion c;
  std::size_t candidates = 0;
  for (const Rational& r : testutil::reduced_fractions_up_to(200, false)) {
    for (const CandidateCF& cand : candidate_cfs(simple_cf(r))) {
      ++candidates;
      if (eval_cf(cand.cf) != r) {
        c.require(false, "mask " + cand.mask.str() + " breaks " + r.str());
        return c;
      }
    }
  }
  c << candidates << " candidates";
  return c;
}

// 10. Tree construction never leaves the remainder bounds for q <= 500.
Criterion remainders_stay_bounded() {
  Criterion c;
  std::size_t fractions = 0;
  for (const Rational& r : testutil::reduced_fractions_up_to(500, false)) {
    ++fractions;
    try {
      auto root = build_tree(r);
      if (leaves(*root).empty()) {
        c.require(false, "no boundary expansions for " + r.str());
        return c;
      }
    } catch (const SubexpansionOutOfBounds& e) {
      c.require(false, std::string("tripwire fired: ") + e.what());
      return c;
    }
  }
  c << fractions << " fractions";
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*fn)();
  };
  const Entry entries[] = {
      {"knot diameter = 2 * crossing, q <= 200", knot_diameter_sweep},
      {"rewrite and tree engines agree, q <= 100", engines_agree},
      {"alternating-run closed forms", alternating_run_identities},
      {"slopes bounded by 2c with zero present, q <= 200", slope_bounds},
      {"Fibonacci bound and mask counts", fibonacci_bounds},
      {"golden case 2/7", golden_2_7},
      {"torus knots 1/p, odd p <= 99", torus_knots},
      {"closed-form extremes, q <= 200", closed_form_extremes},
      {"mask rewrites preserve value, q <= 200", rewrites_preserve_value},
      {"remainders stay bounded, q <= 500", remainders_stay_bounded},
  };

  int failures = 0;
  int index = 0;
  for (const Entry& e : entries) {
    ++index;
    Criterion c = e.fn();
    std::cout << (c.ok ? "PASS" : "FAIL") << " [" << index << "/10] "
              << e.name;
    std::string detail = c.detail.str();
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    failures += c.ok ? 0 : 1;
  }
  if (failures) {
    std::cout << failures << " of 10 acceptance checks failed\n";
    return 1;
  }
  std::cout << "all 10 acceptance checks passed\n";
  return 0;
}

#ifndef TWOBRIDGE_SLOPES_HPP
#define TWOBRIDGE_SLOPES_HPP

#include <cstdint>
#include <vector>

#include "twobridge/contfrac.hpp"
#include "twobridge/rational.hpp"

namespace twobridge {

// Terms of a boundary expansion, matched against the alternating sign
// pattern +,-,+,-,... (integral component excluded): b_plus counts the terms
// whose sign agrees with the pattern, b_minus the rest.
struct SignCounts {
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;

  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

SignCounts sign_counts(const ContinuedFraction& cf);

// The all-even member of a boundary set: the expansion whose surface is the
// Seifert surface, the zero reference for every other slope. Unique when q is
// odd; throws SeifertNotFound / SeifertNotUnique otherwise.
const ContinuedFraction& seifert_cf(
    const std::vector<ContinuedFraction>& candidates);

// 2*((b+ - b-) - (b0+ - b0-)) where b0 comes from the Seifert expansion.
std::int64_t slope(const ContinuedFraction& cf, const SignCounts& seifert);

struct SlopeExtremes {
  std::int64_t min = 0;
  std::int64_t max = 0;

  friend bool operator==(const SlopeExtremes&, const SlopeExtremes&) = default;
};

// Closed forms for the extreme slopes of the boundary set of s, derived from
// rewriting every even position (minimum) resp. every odd position (maximum):
//   b1- = sum of even-position terms   - (1 if n even)
//   b2+ = sum of odd-position terms    + (1 if n even)
//   min = -2*b1- - 2*(b0+ - b0-),  max = 2*b2+ - 2*(b0+ - b0-)
SlopeExtremes extremes_closed_form(const SimpleCF& s, const SignCounts& b0);

// F(n+2) with F(1)=1, F(2)=2: the number of rewrite masks, hence an upper
// bound for the number of distinct boundary slopes.
std::int64_t fib_bound(std::size_t n);

enum class Theorem1 { pass, fail, not_applicable };

struct BoundaryEntry {
  ContinuedFraction cf;
  SignCounts counts;
  std::int64_t slope = 0;
};

struct SlopeReport {
  Rational fraction;
  Rational canonical;
  SimpleCF simple;
  std::int64_t crossing = 0;
  ContinuedFraction seifert;
  bool seifert_unique = true;
  SignCounts seifert_counts;
  std::vector<BoundaryEntry> boundary;  // sorted by expansion
  std::vector<std::int64_t> slopes;     // sorted, deduplicated
  std::int64_t diameter = 0;
  SlopeExtremes extremes;
  std::int64_t fib_bound = 0;
  bool is_knot = true;          // q odd; q even is a 2-component link
  Theorem1 theorem1 = Theorem1::not_applicable;  // diameter == 2*crossing
  bool engines_agree = true;
};

// Full analysis of 0 < p/q < 1 (reduced): enumerates the boundary expansions
// with both engines (rewrite masks and expansion tree), insists the sets
// agree, and derives slopes, diameter, closed-form extremes and the Fibonacci
// bound. For q even the Seifert expansion is not unique; the smallest one is
// used as reference and seifert_unique is cleared. Throws OutOfRange,
// EnginesDisagree, SeifertNotFound, and SeifertNotUnique (q odd only).
SlopeReport analyze(const Rational& r);

}  // namespace twobridge

#endif  // TWOBRIDGE_SLOPES_HPP

#ifndef TWOBRIDGE_CONTFRAC_HPP
#define TWOBRIDGE_CONTFRAC_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twobridge/rational.hpp"

namespace twobridge {

// [c, b0, ..., bm] = c + 1/(b0 + 1/(b1 + ... + 1/bm)), evaluated
// innermost-first. c is the integral component and may be any integer
// (including 0); every term bi must be nonzero. Written flat, the integral
// component is simply the first element: [0, 3, 2], [1, -2, 2, -3], [5].
class ContinuedFraction {
 public:
  ContinuedFraction() = default;
  explicit ContinuedFraction(std::int64_t integral,
                             std::vector<std::int64_t> terms = {});

  // First element is the integral component; throws on an empty span.
  static ContinuedFraction from_flat(std::span<const std::int64_t> elems);

  std::int64_t integral() const { return integral_; }
  const std::vector<std::int64_t>& terms() const { return terms_; }

  std::vector<std::int64_t> flat() const;

  // "[0, 3, 2]"
  std::string str() const;

  friend bool operator==(const ContinuedFraction& a,
                         const ContinuedFraction& b) = default;
  friend std::strong_ordering operator<=>(const ContinuedFraction& a,
                                          const ContinuedFraction& b);

 private:
  std::int64_t integral_ = 0;
  std::vector<std::int64_t> terms_;
};

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf);

// The unique expansion [0, a0, ..., an] of 0 < p/q < 1 with every ai >= 1 and
// an >= 2. Evaluates strictly inside (0,1) by construction. The index of the
// last term (the n above) drives the Fibonacci bound downstream.
class SimpleCF {
 public:
  explicit SimpleCF(std::vector<std::int64_t> terms);

  const std::vector<std::int64_t>& terms() const { return terms_; }
  std::size_t last_index() const { return terms_.size() - 1; }

  ContinuedFraction cf() const;
  std::string str() const;

  friend bool operator==(const SimpleCF& a, const SimpleCF& b) = default;

 private:
  std::vector<std::int64_t> terms_;
};

// Throws UndefinedCF when a division by zero occurs, e.g. [0, 2, -1, 2].
Rational eval_cf(const ContinuedFraction& cf);

// Same evaluation, nullopt instead of UndefinedCF. Overflow still throws.
std::optional<Rational> try_eval_cf(const ContinuedFraction& cf);

// Flat list prefix ++ pattern*count ++ suffix, reinterpreted as a continued
// fraction (first element = integral component). Pattern entries must be
// nonzero; the overall result must be nonempty.
ContinuedFraction expand_repeat(std::span<const std::int64_t> prefix,
                                std::span<const std::int64_t> pattern,
                                std::size_t count,
                                std::span<const std::int64_t> suffix);

// Euclidean expansion of r; throws OutOfRange unless 0 < r < 1.
SimpleCF simple_cf(const Rational& r);

// Sum of the terms of the simple expansion: the crossing number of the
// corresponding 2-bridge knot or link.
std::int64_t crossing_number(const SimpleCF& s);

// Conway notation lists the terms of the simple expansion in reverse order.
// A trailing 1 produced by the reversal is folded: [..., a, 1] -> [..., a+1].
SimpleCF cf_from_conway(std::span<const std::int64_t> conway);
std::vector<std::int64_t> conway_from_cf(const SimpleCF& s);

// K(p/q) and K(p'/q) are the same knot iff p' = p or p*p' = 1 (mod q);
// mirrors are NOT identified. Returns min(p, p^-1 mod q) over q.
// Requires 0 < p/q < 1.
Rational canonicalize(const Rational& r);

}  // namespace twobridge

#endif  // TWOBRIDGE_CONTFRAC_HPP

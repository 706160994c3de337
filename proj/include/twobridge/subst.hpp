#ifndef TWOBRIDGE_SUBST_HPP
#define TWOBRIDGE_SUBST_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "twobridge/contfrac.hpp"

namespace twobridge {

// 0/1 string over the term positions of a simple expansion; a 1 marks a
// position to rewrite. Adjacent 1s are excluded: rewriting a term consumes
// its successor, so neighbouring rewrites would collide.
class SubstitutionMask {
 public:
  explicit SubstitutionMask(std::vector<std::uint8_t> bits);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }

  std::string str() const;  // "101"

  friend bool operator==(const SubstitutionMask& a,
                         const SubstitutionMask& b) = default;
  friend std::strong_ordering operator<=>(const SubstitutionMask& a,
                                          const SubstitutionMask& b) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// All masks of length n+1 without adjacent 1s, in lexicographic order.
// There are F(n+2) of them, Fibonacci-indexed so that F(1)=1, F(2)=2.
std::vector<SubstitutionMask> enumerate_masks(std::size_t n);

// Rewrites the term at pos into a run of alternating +-2s, preserving the
// value of the whole fraction. With t the current term, a the element before
// it (previous term, or the integral component when pos == 0) and s the
// successor term:
//
//   t = 2m   > 0:  ..., a, t, s, ...  ->  ..., a+1, (-2,2)^{m-1}, -2, s+1, ...
//   t = -2m  < 0:  ..., a, t, s, ...  ->  ..., a-1, (2,-2)^{m-1}, 2, s-1, ...
//   t = 2m+1 > 0:  ..., a, t, s, R    ->  ..., a+1, (-2,2)^m, -s-1, -R
//   t = -2m-1 < 0: ..., a, t, s, R    ->  ..., a-1, (2,-2)^m, -s+1, -R
//
// The odd rules negate everything past the rewritten position. When t is the
// last term the successor clause is simply dropped. |t| = 1 is legal and
// produces an empty run. Throws SideConditionViolated when the adjusted
// successor or predecessor would become 0 (possible only for degenerate
// inputs, never when expanding a simple continued fraction under a valid
// mask), and PositionOutOfRange when pos >= number of terms.
ContinuedFraction apply_substitution(const ContinuedFraction& cf,
                                     std::size_t pos);

struct CandidateCF {
  ContinuedFraction cf;
  SubstitutionMask mask;
  bool is_boundary;  // every term >= 2 in absolute value
};

// Applies the marked rewrites left to right, tracking how earlier rewrites
// shift the positions of later ones. Mask length must equal the number of
// terms of s.
CandidateCF apply_mask(const SimpleCF& s, const SubstitutionMask& mask);

// One candidate per mask, in mask order; length F(n+2) for a simple
// expansion with last index n. Distinct masks can in principle reproduce a
// term sequence, so the boundary SET is obtained by boundary_cf_set.
std::vector<CandidateCF> candidate_cfs(const SimpleCF& s);

bool is_boundary_cf(const ContinuedFraction& cf);

// Sorted, deduplicated boundary expansions of s: the substitution engine's
// answer, comparable 1:1 with the expansion tree's leaf set.
std::vector<ContinuedFraction> boundary_cf_set(const SimpleCF& s);

}  // namespace twobridge

#endif  // TWOBRIDGE_SUBST_HPP

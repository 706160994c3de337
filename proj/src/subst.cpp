#include "twobridge/subst.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "twobridge/errors.hpp"

namespace twobridge {

SubstitutionMask::SubstitutionMask(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1)
      throw std::invalid_argument("mask bit must be 0 or 1");
    if (i && bits_[i] && bits_[i - 1])
      throw std::invalid_argument("mask with adjacent 1s: " + str());
  }
}

std::string SubstitutionMask::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::vector<SubstitutionMask> enumerate_masks(std::size_t n) {
  std::vector<SubstitutionMask> out;
  std::vector<std::uint8_t> cur(n + 1, 0);
  // Depth-first, 0 before 1, gives lexicographic order directly.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cur.size()) {
      out.push_back(SubstitutionMask(cur));
      return;
    }
    cur[i] = 0;
    self(self, i + 1);
    if (i == 0 || cur[i - 1] == 0) {
      cur[i] = 1;
      self(self, i + 1);
      cur[i] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

ContinuedFraction apply_substitution(const ContinuedFraction& cf,
                                     std::size_t pos) {
  const auto& ts = cf.terms();
  if (pos >= ts.size())
    throw PositionOutOfRange("substitution position " + std::to_string(pos) +
                             " in " + cf.str());
  const std::int64_t t = ts[pos];
  const bool positive = t > 0;
  const bool odd = (t % 2) != 0;
  const std::int64_t delta = positive ? 1 : -1;  // predecessor adjustment
  const std::int64_t lead = positive ? -2 : 2;   // first entry of the run

  std::int64_t integral = cf.integral();
  std::vector<std::int64_t> terms;
  terms.reserve(ts.size() + static_cast<std::size_t>(std::llabs(t)));

  if (pos == 0) {
    integral += delta;
  } else {
    terms.assign(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(pos));
    terms.back() += delta;
    if (terms.back() == 0)
      throw SideConditionViolated("predecessor of position " +
                                  std::to_string(pos) + " vanishes in " +
                                  cf.str());
  }

  // |t|-1 alternating entries. Even t ends on lead, odd t on -lead.
  const std::int64_t run = std::llabs(t) - 1;
  for (std::int64_t i = 0; i < run; ++i)
    terms.push_back(i % 2 == 0 ? lead : -lead);

  if (pos + 1 < ts.size()) {
    const std::int64_t s = ts[pos + 1];
    const std::int64_t succ = odd ? -s - delta : s + delta;
    if (succ == 0)
      throw SideConditionViolated("successor " + std::to_string(s) +
                                  " excluded at position " +
                                  std::to_string(pos) + " in " + cf.str());
    terms.push_back(succ);
    for (std::size_t i = pos + 2; i < ts.size(); ++i)
      terms.push_back(odd ? -ts[i] : ts[i]);
  }

  return ContinuedFraction(integral, std::move(terms));
}

CandidateCF apply_mask(const SimpleCF& s, const SubstitutionMask& mask) {
  if (mask.size() != s.terms().size())
    throw std::invalid_argument("mask length " + std::to_string(mask.size()) +
                                " vs " + std::to_string(s.terms().size()) +
                                " terms");
  ContinuedFraction cur = s.cf();
  // Rewriting a term of magnitude m replaces one term by m-1, so every later
  // original position drifts by m-2 (negative drift for m = 1).
  std::int64_t shift = 0;
  for (std::size_t j = 0; j < mask.size(); ++j) {
    if (!mask.bits()[j]) continue;
    auto idx = static_cast<std::size_t>(static_cast<std::int64_t>(j) + shift);
    const std::int64_t t = cur.terms()[idx];
    cur = apply_substitution(cur, idx);
    shift += std::llabs(t) - 2;
  }
  bool boundary = is_boundary_cf(cur);
  return CandidateCF{std::move(cur), mask, boundary};
}

std::vector<CandidateCF> candidate_cfs(const SimpleCF& s) {
  auto masks = enumerate_masks(s.last_index());
  std::vector<CandidateCF> out;
  out.reserve(masks.size());
  for (auto& m : masks) out.push_back(apply_mask(s, m));
  return out;
}

bool is_boundary_cf(const ContinuedFraction& cf) {
  return std::all_of(cf.terms().begin(), cf.terms().end(),
                     [](std::int64_t t) { return t <= -2 || t >= 2; });
}

std::vector<ContinuedFraction> boundary_cf_set(const SimpleCF& s) {
  std::vector<ContinuedFraction> out;
  for (auto& c : candidate_cfs(s))
    if (c.is_boundary) out.push_back(std::move(c.cf));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace twobridge

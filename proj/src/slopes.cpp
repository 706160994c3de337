#include "twobridge/slopes.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "twobridge/btree.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/subst.hpp"

namespace twobridge {

namespace {

bool all_even(const ContinuedFraction& cf) {
  return std::all_of(cf.terms().begin(), cf.terms().end(),
                     [](std::int64_t t) { return t % 2 == 0; });
}

std::string set_str(const std::vector<ContinuedFraction>& cfs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cfs.size(); ++i) {
    if (i) os << ", ";
    os << cfs[i].str();
  }
  os << '}';
  return os.str();
}

}  // namespace

SignCounts sign_counts(const ContinuedFraction& cf) {
  SignCounts c;
  const auto& ts = cf.terms();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const bool expect_positive = (i % 2 == 0);
    if ((ts[i] > 0) == expect_positive)
      ++c.b_plus;
    else
      ++c.b_minus;
  }
  return c;
}

const ContinuedFraction& seifert_cf(
    const std::vector<ContinuedFraction>& candidates) {
  const ContinuedFraction* found = nullptr;
  for (const auto& cf : candidates) {
    if (!all_even(cf)) continue;
    if (found)
      throw SeifertNotUnique("multiple all-even expansions: " + found->str() +
                             " and " + cf.str());
    found = &cf;
  }
  if (!found)
    throw SeifertNotFound("no all-even expansion among " + set_str(candidates));
  return *found;
}

std::int64_t slope(const ContinuedFraction& cf, const SignCounts& seifert) {
  SignCounts c = sign_counts(cf);
  return checked::mul(
      2, checked::sub(checked::sub(c.b_plus, c.b_minus),
                      checked::sub(seifert.b_plus, seifert.b_minus)));
}

SlopeExtremes extremes_closed_form(const SimpleCF& s, const SignCounts& b0) {
  const auto& a = s.terms();
  const bool n_even = (s.last_index() % 2 == 0);
  std::int64_t even_sum = 0, odd_sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t& acc = (i % 2 == 0) ? even_sum : odd_sum;
    acc = checked::add(acc, a[i]);
  }
  const std::int64_t b1_minus = n_even ? even_sum - 1 : even_sum;
  const std::int64_t b2_plus = n_even ? odd_sum + 1 : odd_sum;
  const std::int64_t ref = checked::mul(2, checked::sub(b0.b_plus, b0.b_minus));
  SlopeExtremes e;
  e.min = checked::sub(checked::mul(-2, b1_minus), ref);
  e.max = checked::sub(checked::mul(2, b2_plus), ref);
  return e;
}

std::int64_t fib_bound(std::size_t n) {
  // F(1) = 1, F(2) = 2; result is F(n+2).
  std::int64_t a = 1, b = 2;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t next = checked::add(a, b);
    a = b;
    b = next;
  }
  return b;
}

SlopeReport analyze(const Rational& r) {
  SimpleCF simple = simple_cf(r);  // rejects anything outside (0,1)

  auto from_masks = boundary_cf_set(simple);
  auto tree = build_tree(r);
  auto from_tree = leaves(*tree);
  if (from_masks != from_tree)
    throw EnginesDisagree("boundary sets differ for " + r.str() +
                          ": masks " + set_str(from_masks) + " vs tree " +
                          set_str(from_tree));

  const bool is_knot = (r.den() % 2) != 0;

  // q odd must yield exactly one all-even expansion. q even always yields
  // two; take the smallest as the slope reference and flag the ambiguity
  // (the diameter does not depend on the choice).
  const ContinuedFraction* seifert = nullptr;
  bool seifert_unique = true;
  if (is_knot) {
    seifert = &seifert_cf(from_tree);
  } else {
    std::vector<const ContinuedFraction*> evens;
    for (const auto& cf : from_tree)
      if (all_even(cf)) evens.push_back(&cf);
    if (evens.empty())
      throw SeifertNotFound("no all-even expansion among " +
                            set_str(from_tree));
    seifert = evens.front();  // from_tree is sorted
    seifert_unique = evens.size() == 1;
  }

  const SignCounts seifert_counts = sign_counts(*seifert);

  std::vector<BoundaryEntry> boundary;
  std::vector<std::int64_t> slopes;
  for (const auto& cf : from_tree) {
    std::int64_t s = slope(cf, seifert_counts);
    boundary.push_back(BoundaryEntry{cf, sign_counts(cf), s});
    slopes.push_back(s);
  }
  std::sort(slopes.begin(), slopes.end());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());

  const std::int64_t crossing = crossing_number(simple);
  const std::int64_t diameter = checked::sub(slopes.back(), slopes.front());
  const Theorem1 theorem1 = !is_knot ? Theorem1::not_applicable
                            : diameter == checked::mul(2, crossing)
                                ? Theorem1::pass
                                : Theorem1::fail;

  return SlopeReport{
      .fraction = r,
      .canonical = canonicalize(r),
      .simple = simple,
      .crossing = crossing,
      .seifert = *seifert,
      .seifert_unique = seifert_unique,
      .seifert_counts = seifert_counts,
      .boundary = std::move(boundary),
      .slopes = std::move(slopes),
      .diameter = diameter,
      .extremes = extremes_closed_form(simple, seifert_counts),
      .fib_bound = fib_bound(simple.last_index()),
      .is_knot = is_knot,
      .theorem1 = theorem1,
      .engines_agree = true,  // both engines ran and matched above
  };
}

}  // namespace twobridge

#include "twobridge/contfrac.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "twobridge/errors.hpp"

namespace twobridge {

namespace {

std::string join_flat(std::span<const std::int64_t> elems) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ", ";
    os << elems[i];
  }
  os << ']';
  return os.str();
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::int64_t integral,
                                     std::vector<std::int64_t> terms)
    : integral_(integral), terms_(std::move(terms)) {
  for (std::int64_t t : terms_) {
    if (t == 0)
      throw std::invalid_argument("continued fraction with a zero term");
  }
}

ContinuedFraction ContinuedFraction::from_flat(
    std::span<const std::int64_t> elems) {
  if (elems.empty())
    throw std::invalid_argument(
        "continued fraction needs at least an integral component");
  return ContinuedFraction(
      elems[0], std::vector<std::int64_t>(elems.begin() + 1, elems.end()));
}

std::vector<std::int64_t> ContinuedFraction::flat() const {
  std::vector<std::int64_t> out;
  out.reserve(terms_.size() + 1);
  out.push_back(integral_);
  out.insert(out.end(), terms_.begin(), terms_.end());
  return out;
}

std::string ContinuedFraction::str() const { return join_flat(flat()); }

std::strong_ordering operator<=>(const ContinuedFraction& a,
                                 const ContinuedFraction& b) {
  if (auto c = a.integral_ <=> b.integral_; c != 0) return c;
  return a.terms_ <=> b.terms_;
}

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
  return os << cf.str();
}

SimpleCF::SimpleCF(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::invalid_argument("simple continued fraction with no terms");
  for (std::int64_t t : terms_) {
    if (t < 1)
      throw std::invalid_argument(
          "simple continued fraction term below 1: " + std::to_string(t));
  }
  if (terms_.back() < 2)
    throw std::invalid_argument("simple continued fraction must end with >= 2");
}

ContinuedFraction SimpleCF::cf() const { return ContinuedFraction(0, terms_); }

std::string SimpleCF::str() const { return cf().str(); }

Rational eval_cf(const ContinuedFraction& cf) {
  auto v = try_eval_cf(cf);
  if (!v) throw UndefinedCF("undefined continued fraction " + cf.str());
  return *v;
}

std::optional<Rational> try_eval_cf(const ContinuedFraction& cf) {
  const auto& ts = cf.terms();
  if (ts.empty()) return Rational(cf.integral());
  Rational tail(ts.back());
  for (std::size_t i = ts.size() - 1; i-- > 0;) {
    if (tail.is_zero()) return std::nullopt;
    tail = Rational(ts[i]) + tail.reciprocal();
  }
  if (tail.is_zero()) return std::nullopt;
  return Rational(cf.integral()) + tail.reciprocal();
}

ContinuedFraction expand_repeat(std::span<const std::int64_t> prefix,
                                std::span<const std::int64_t> pattern,
                                std::size_t count,
                                std::span<const std::int64_t> suffix) {
  for (std::int64_t t : pattern) {
    if (t == 0) throw std::invalid_argument("repeat pattern with a zero entry");
  }
  std::vector<std::int64_t> flat(prefix.begin(), prefix.end());
  flat.reserve(prefix.size() + pattern.size() * count + suffix.size());
  for (std::size_t i = 0; i < count; ++i)
    flat.insert(flat.end(), pattern.begin(), pattern.end());
  flat.insert(flat.end(), suffix.begin(), suffix.end());
  return ContinuedFraction::from_flat(flat);
}

SimpleCF simple_cf(const Rational& r) {
  if (r <= Rational(0) || r >= Rational(1))
    throw OutOfRange("simple_cf requires 0 < p/q < 1, got " + r.str());
  std::vector<std::int64_t> terms;
  Rational x = r;
  for (;;) {
    Rational inv = x.reciprocal();  // x in (0,1), so inv > 1
    std::int64_t a = inv.floor();
    terms.push_back(a);
    Rational frac = inv - Rational(a);
    if (frac.is_zero()) break;
    x = frac;
  }
  // The loop cannot end on a 1 (the value before the last inversion lies
  // strictly inside (0,1)), but fold defensively rather than trust that.
  if (terms.back() == 1 && terms.size() >= 2) {
    terms.pop_back();
    terms.back() += 1;
  }
  return SimpleCF(std::move(terms));
}

std::int64_t crossing_number(const SimpleCF& s) {
  std::int64_t sum = 0;
  for (std::int64_t a : s.terms()) sum = checked::add(sum, a);
  return sum;
}

SimpleCF cf_from_conway(std::span<const std::int64_t> conway) {
  if (conway.empty()) throw InvalidConway("empty Conway notation");
  for (std::int64_t a : conway) {
    if (a < 1)
      throw InvalidConway("nonpositive Conway entry: " + std::to_string(a));
  }
  std::vector<std::int64_t> terms(conway.rbegin(), conway.rend());
  if (terms.back() == 1) {
    if (terms.size() < 2)
      throw InvalidConway("Conway notation [1] does not denote a 2-bridge knot");
    terms.pop_back();
    terms.back() += 1;
  }
  return SimpleCF(std::move(terms));
}

std::vector<std::int64_t> conway_from_cf(const SimpleCF& s) {
  return {s.terms().rbegin(), s.terms().rend()};
}

Rational canonicalize(const Rational& r) {
  if (r <= Rational(0) || r >= Rational(1))
    throw OutOfRange("canonicalize requires 0 < p/q < 1, got " + r.str());
  std::int64_t p = r.num(), q = r.den();
  // Extended Euclid for p^-1 mod q.
  std::int64_t old_r = p, rr = q;
  std::int64_t old_s = 1, ss = 0;
  while (rr != 0) {
    std::int64_t k = old_r / rr;
    std::int64_t tmp = old_r - k * rr;
    old_r = rr;
    rr = tmp;
    tmp = old_s - k * ss;
    old_s = ss;
    ss = tmp;
  }
  if (old_r != 1)
    throw NotInvertible("gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                        ") != 1");
  std::int64_t inv = old_s % q;
  if (inv < 0) inv += q;
  return Rational(std::min(p, inv), q);
}

}  // namespace twobridge

#include "twobridge/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace twobridge {

namespace checked {

namespace {
[[noreturn]] void trap(const char* op) {
  throw std::overflow_error(std::string("int64 overflow in ") + op);
}
}  // namespace

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) trap("add");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) trap("sub");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) trap("mul");
  return r;
}

std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = checked::neg(num_);
    den_ = checked::neg(den_);
  }
  // std::gcd would choke on INT64_MIN, but neg() above has already trapped it.
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return Rational(den_, num_);
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(
      checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
      checked::mul(a.den_, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(
      checked::sub(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
      checked::mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational(checked::mul(a.num_, b.den_), checked::mul(a.den_, b.num_));
}

Rational operator-(const Rational& a) {
  return Rational(checked::neg(a.num_), a.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  return checked::mul(a.num_, b.den_) <=> checked::mul(b.num_, a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace twobridge

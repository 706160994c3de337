#ifndef TWOBRIDGE_RATIONAL_HPP
#define TWOBRIDGE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace twobridge {

namespace checked {

// All integer arithmetic in the library goes through these helpers so that an
// overflow raises std::overflow_error instead of wrapping. The magnitudes in
// the sweeps stay tiny, so a trap here always means a bug upstream.
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);

}  // namespace checked

// Exact rational number on checked 64-bit integers. Always stored reduced
// with a positive denominator, so == is plain member comparison.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Throws std::domain_error on 0.
  Rational reciprocal() const;

  std::int64_t floor() const;
  std::int64_t ceil() const;

  // "2/7", "-5/7", integers without the denominator: "5".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace twobridge

#endif  // TWOBRIDGE_RATIONAL_HPP

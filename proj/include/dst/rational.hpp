#ifndef DST_RATIONAL_HPP
#define DST_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dst {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction with unbounded integer parts, kept in lowest terms with a
// positive denominator.  Equality is structural, which coincides with value
// equality on the canonical form.  All masses and weights in this library
// are Rationals; there is no floating point anywhere in the core.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);
  Rational(BigInt numerator, BigInt denominator);

  // Accepts "p/q", a plain integer, or a decimal with at most nine digits
  // after the point ("0.25" becomes 1/4 exactly, never a binary float).
  // An optional leading '-' is allowed.  Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  // true iff 0 <= *this <= 1
  bool in_unit_interval() const;

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  // Integer power; exponent may be negative if the value is nonzero.
  Rational pow(long long exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}

  Backend value_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace dst

#endif  // DST_RATIONAL_HPP

#include "dst/rational.hpp"

#include <cctype>
#include <utility>

#include "dst/errors.hpp"

namespace dst {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator.is_zero()) {
    throw ParseError("rational with zero denominator");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = Backend(std::move(numerator), std::move(denominator));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
    BigInt d{std::string(den)};
    if (d.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(BigInt{std::string(num)}, std::move(d));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    if (frac.size() > 9) {
      throw ParseError("decimal '" + std::string(text) + "' has more than nine fractional digits");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt n = BigInt{std::string(whole)} * scale + BigInt{std::string(frac)};
    result = Rational(std::move(n), std::move(scale));
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    result = Rational(BigInt{std::string(s)}, BigInt(1));
  }
  return negative ? -result : result;
}

bool Rational::in_unit_interval() const { return value_ >= 0 && value_ <= 1; }

std::string Rational::str() const {
  if (denominator() == 1) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::pow(long long exponent) const {
  if (exponent == 0) return Rational(1);
  if (is_zero() && exponent < 0) throw Error("zero raised to a negative power");
  const auto e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  BigInt n = boost::multiprecision::pow(numerator(), e);
  BigInt d = boost::multiprecision::pow(denominator(), e);
  return exponent > 0 ? Rational(std::move(n), std::move(d)) : Rational(std::move(d), std::move(n));
}

Rational Rational::operator-() const { return Rational(Backend(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace dst

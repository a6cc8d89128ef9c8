#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace scrollcert {

using BigInt = boost::multiprecision::cpp_int;

/// Checked narrowing for results that are stored in fixed-width fields.
inline long long to_int64(const BigInt& v) {
  if (v > BigInt((std::numeric_limits<long long>::max)()) ||
      v < BigInt((std::numeric_limits<long long>::min)())) {
    throw std::overflow_error("value does not fit in 64 bits");
  }
  return v.convert_to<long long>();
}

/// Exact rational number on arbitrary-precision integers.
///
/// Canonical form: denominator positive, fraction fully reduced, so
/// value equality coincides with representation equality. Floor and
/// ceiling are exact (floor division, not truncation).
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // implicit by design: integers embed
  Rational(BigInt n) : num_(std::move(n)) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    reduce();
  }
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  BigInt ceil() const { return -(-*this).floor(); }

  /// "7/3" in lowest terms, or "5" when integral.
  std::string str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;  // denominators positive
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// Exact floor of a/b for 64-bit operands (b may be any sign, not zero).
inline long long floor_div(long long a, long long b) {
  return to_int64(Rational(a, b).floor());
}

/// Inverse of Rational::str(): accepts "n" or "n/d".
inline Rational parse_rational(const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, pos)), BigInt(s.substr(pos + 1)));
}

}  // namespace scrollcert

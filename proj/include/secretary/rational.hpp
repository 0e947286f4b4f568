#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace secretary {

using BigInt = boost::multiprecision::cpp_int;

/// Natural log of a positive big integer, accurate to ~1 ulp of the result.
/// Values far beyond double range are handled by splitting off the exponent.
inline double log_of_bigint(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log_of_bigint: argument must be positive");
  const unsigned top_bit = boost::multiprecision::msb(v);
  if (top_bit <= 52) return std::log(v.convert_to<double>());
  const unsigned shift = top_bit - 52;
  const BigInt mantissa = v >> shift;
  return std::log(mantissa.convert_to<double>()) +
         static_cast<double>(shift) * 0.6931471805599453094;
}

// Exact fraction over BigInt, kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  Rational& operator+=(const Rational& r) {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ *= r.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& r) {
    num_ = num_ * r.den_ - r.num_ * den_;
    den_ *= r.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& r) {
    num_ *= r.num_;
    den_ *= r.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& r) {
    if (r.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= r.den_;
    den_ *= r.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Decimal value; stays accurate for fractions whose parts exceed double range.
  double to_double() const {
    if (num_ == 0) return 0.0;
    const bool negative = num_ < 0;
    const BigInt abs_num = negative ? BigInt(-num_) : num_;
    double magnitude;
    if (boost::multiprecision::msb(abs_num) < 1000 &&
        boost::multiprecision::msb(den_) < 1000) {
      magnitude = abs_num.convert_to<double>() / den_.convert_to<double>();
    } else {
      magnitude = std::exp(log_of_bigint(abs_num) - log_of_bigint(den_));
    }
    return negative ? -magnitude : magnitude;
  }

  std::string to_string() const {
    return num_.str() + "/" + den_.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace secretary

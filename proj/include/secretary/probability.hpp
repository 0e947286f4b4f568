#pragma once

#include <stdexcept>
#include <string>

#include "secretary/rational.hpp"

namespace secretary {

/// Arithmetic selection for probability-valued operations.
/// Auto picks exact rationals for small instances and log-space floats beyond.
enum class EvalMode { Auto, Exact, Float };

/// A probability in [0,1], carried either as an exact rational in lowest terms
/// or as a double.
class Probability {
 public:
  enum class Mode { Exact, Float };

  static Probability exact(Rational r) {
    if (r < Rational(0) || r > Rational(1))
      throw std::domain_error("Probability: value outside [0,1]");
    Probability p;
    p.mode_ = Mode::Exact;
    p.rational_ = std::move(r);
    p.value_ = p.rational_.to_double();
    return p;
  }

  static Probability approx(double v) {
    // tolerate sub-ulp excursions from float summation, reject real violations
    if (v < -1e-9 || v > 1.0 + 1e-9)
      throw std::domain_error("Probability: value outside [0,1]");
    Probability p;
    p.mode_ = Mode::Float;
    p.value_ = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
    return p;
  }

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }

  const Rational& rational() const {
    if (!is_exact()) throw std::logic_error("Probability: no rational in float mode");
    return rational_;
  }

  /// Decimal value in either mode.
  double value() const { return value_; }

  /// "5/6" in exact mode, decimal rendering otherwise.
  std::string to_string() const {
    return is_exact() ? rational_.to_string() : std::to_string(value_);
  }

  /// Exact comparison when both sides are exact, double comparison otherwise.
  friend bool operator<(const Probability& a, const Probability& b) {
    if (a.is_exact() && b.is_exact()) return a.rational_ < b.rational_;
    return a.value() < b.value();
  }
  friend bool operator>(const Probability& a, const Probability& b) { return b < a; }

 private:
  Probability() : mode_(Mode::Float), value_(0.0) {}

  Mode mode_;
  Rational rational_;
  double value_;
};

}  // namespace secretary

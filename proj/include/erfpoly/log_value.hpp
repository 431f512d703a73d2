#pragma once

#include <cmath>
#include <limits>

namespace erfpoly {

// A real number stored as (sign, ln|value|). Zero is sign 0 with a -inf
// log magnitude.
struct LogValue {
  int sign = 0;
  double log_magnitude = -std::numeric_limits<double>::infinity();

  static LogValue zero() { return {}; }
  static LogValue from_log(int sign, double log_magnitude) {
    if (sign == 0) return zero();
    return {sign > 0 ? 1 : -1, log_magnitude};
  }
  static LogValue from_double(double v) {
    if (v == 0.0) return zero();
    return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
  }

  bool is_zero() const { return sign == 0; }
  double to_double() const {
    return sign == 0 ? 0.0 : sign * std::exp(log_magnitude);
  }

  LogValue operator-() const { return from_log(-sign, log_magnitude); }
  LogValue& operator*=(const LogValue& o) {
    *this = from_log(sign * o.sign, log_magnitude + o.log_magnitude);
    return *this;
  }
  LogValue& operator/=(const LogValue& o);
  friend LogValue operator*(LogValue a, const LogValue& b) { return a *= b; }
  friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
};

// Signed log-sum-exp.  Terms of opposite sign whose magnitudes agree to
// `cancel_tol` relative are reported as an exact zero.
LogValue add(const LogValue& a, const LogValue& b, double cancel_tol = 0.0);

// log(1 - exp(d)) for d < 0, accurate near both ends.
double log1mexp(double d);

}  // namespace erfpoly

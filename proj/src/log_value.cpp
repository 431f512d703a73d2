#include "erfpoly/log_value.hpp"

#include <algorithm>
#include <cmath>

namespace erfpoly {

LogValue& LogValue::operator/=(const LogValue& o) {
  if (o.sign == 0) {
    *this = from_log(sign, std::numeric_limits<double>::infinity());
    return *this;
  }
  *this = from_log(sign * o.sign, log_magnitude - o.log_magnitude);
  return *this;
}

double log1mexp(double d) {
  // Maechler's switch point.
  if (d > -std::numbers::ln2) return std::log(-std::expm1(d));
  return std::log1p(-std::exp(d));
}

LogValue add(const LogValue& a, const LogValue& b, double cancel_tol) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogValue& big = a.log_magnitude >= b.log_magnitude ? a : b;
  const LogValue& small = a.log_magnitude >= b.log_magnitude ? b : a;
  const double d = small.log_magnitude - big.log_magnitude;  // <= 0
  if (big.sign == small.sign) {
    return LogValue::from_log(big.sign, big.log_magnitude + std::log1p(std::exp(d)));
  }
  // 1 - e^d <= cancel_tol  <=>  d >= log1p(-cancel_tol)
  if (d == 0.0 || -std::expm1(d) <= cancel_tol) return LogValue::zero();
  return LogValue::from_log(big.sign, big.log_magnitude + log1mexp(d));
}

}  // namespace erfpoly

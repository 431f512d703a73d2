#include "erfpoly/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "erfpoly/errors.hpp"
#include "erfpoly/saddle.hpp"
#include "erfpoly/special_functions.hpp"

namespace erfpoly {
namespace {

// ln(2/pi)
constexpr double kLogTwoOverPi = -0.45158270528945486472619522989488214;
constexpr double kSqrtTwoOverPi = 0.79788456080286535587989211986876373;

std::string where(double x, int n) {
  std::ostringstream os;
  os << "x=" << x << ", n=" << n;
  return os.str();
}

void require_positive_x(const char* fn, double x, int n) {
  if (!(x > 0.0)) throw DomainError(std::string(fn) + ": needs x > 0 (" + where(x, n) + ")");
}

void require_n(const char* fn, int n, int min_n) {
  if (n < min_n) {
    throw DomainError(std::string(fn) + ": needs n >= " + std::to_string(min_n) + ", got " +
                      std::to_string(n));
  }
}

// (n+1) ln[e^{-x^2/2}/zeta(x)] = -(n+1) ln Z1(x)
double rate_term(double x, int n) { return -(n + 1.0) * z1(x).log_magnitude; }

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::kPsi1: return "psi1";
    case Regime::kPsi1Refined: return "psi1_refined";
    case Regime::kPsi2: return "psi2";
    case Regime::kPsi3: return "psi3";
    case Regime::kPsi4: return "psi4";
  }
  return "unknown";
}

RegimeEstimate psi1(double x, int n) {
  require_positive_x("psi1", x, n);
  require_n("psi1", n, 2);
  const double lg = -0.5 * std::log(2.0 * std::log(static_cast<double>(n))) + rate_term(x, n);
  return {Regime::kPsi1, LogValue::from_log(1, lg), x, n, std::nullopt};
}

RegimeEstimate psi2(double y, int n) {
  require_n("psi2", n, 2);
  const double a = y * kSqrtTwoOverPi;
  const double abs_a = std::fabs(a);
  LogValue bracket;
  if (n % 2 == 0) {
    bracket = LogValue::from_log(1, abs_a + std::log1p(std::exp(-2.0 * abs_a)));  // 2 cosh a
  } else if (a != 0.0) {
    bracket = LogValue::from_log(a > 0 ? 1 : -1, abs_a + log1mexp(-2.0 * abs_a));  // 2 sinh a
  }
  const double base = -0.5 * std::log(2.0 * std::log(static_cast<double>(n))) +
                      0.5 * (n + 1.0) * kLogTwoOverPi;
  const LogValue value = bracket * LogValue::from_log(1, base);
  return {Regime::kPsi2, value, y / n, n, y};
}

RegimeEstimate psi3(double x, int n) {
  require_positive_x("psi3", x, n);
  require_n("psi3", n, 1);
  const double radicand = x * x + 2.0 * std::log(n * x) - kLogTwoOverPi;
  if (!(radicand > 0.0)) {
    throw DomainError("psi3: x^2 + 2 ln(nx) - ln(2/pi) <= 0, x and n too small (" + where(x, n) +
                      ")");
  }
  const double lg = -0.5 * std::log(radicand) + rate_term(x, n);
  return {Regime::kPsi3, LogValue::from_log(1, lg), x, n, std::nullopt};
}

RegimeEstimate psi1_refined(double x, int n) {
  require_positive_x("psi1_refined", x, n);
  require_n("psi1_refined", n, 2);
  const double d = std::log(static_cast<double>(n)) - zeta_fn(x).log_magnitude;
  if (!(d > 0.0)) {
    throw DomainError("psi1_refined: ln n - ln zeta(x) <= 0 (" + where(x, n) + ")");
  }
  const double lg = -0.5 * std::numbers::ln2 - 0.5 * std::log(d) + rate_term(x, n);
  return {Regime::kPsi1Refined, LogValue::from_log(1, lg), x, n, std::nullopt};
}

RegimeEstimate phi(double x, int n, double s) {
  if (s == 0.0 || !std::isfinite(s)) throw DomainError("phi: s must be finite and nonzero");
  require_n("phi", n, 0);
  const double s2 = s * s;
  const double den = (n + 1.0) * s2 + n;
  if (!(den > 0.0)) throw DomainError("phi: (n+1)s^2 + n <= 0");
  const double lg = n * std::log(std::fabs(s)) + 0.5 * ((s - x) * (s + x) - 2.0) * (n + 1.0) +
                    0.5 * std::log(2.0 * std::numbers::pi * s2 / den) - ln_factorial(n);
  const int sign = (s < 0.0 && n % 2 != 0) ? -1 : 1;
  return {Regime::kPsi4, LogValue::from_log(sign, lg), x, n, std::nullopt};
}

RegimeEstimate psi4(double x, int n) {
  require_n("psi4", n, 1);
  const double sp = solve_saddle(x, n, Branch::kPositive).s;
  const double sm = -solve_saddle(-x, n, Branch::kPositive).s;
  const LogValue total = add(phi(x, n, sp).value, phi(x, n, sm).value, 1e-14);
  return {Regime::kPsi4, total, x, n, std::nullopt};
}

LogValue large_x_sqrt_log_form(double x, int n) {
  require_positive_x("large_x_sqrt_log_form", x, n);
  require_n("large_x_sqrt_log_form", n, 1);
  const double radicand = 0.5 * x * x + std::log(n * x) - 0.5 * kLogTwoOverPi;
  if (!(radicand > 0.0)) throw DomainError("large_x_sqrt_log_form: radicand <= 0");
  return LogValue::from_log(
      1, (n + 1.0) * std::log(x) - 0.5 * std::numbers::ln2 - 0.5 * std::log(radicand));
}

RegimeEstimate auto_estimate(double x, int n) {
  if (n < 2) return psi4(x, n);
  if (n * std::fabs(x) <= 4.0) return psi2(n * x, n);
  const double ax = std::fabs(x);
  RegimeEstimate est = ax >= std::sqrt(std::log(static_cast<double>(n))) ? psi3(ax, n) : psi1(ax, n);
  if (x < 0.0 && n % 2 != 0) est.value = -est.value;
  est.x = x;
  return est;
}

}  // namespace erfpoly

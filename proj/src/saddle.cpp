#include "erfpoly/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "erfpoly/errors.hpp"
#include "erfpoly/special_functions.hpp"

namespace erfpoly {
namespace {

// S_p(x, n): the root s > max(x, 0) of
//   G(s) = ln s + s^2/2 + ln integral_x^s e^{-t^2/2} dt - ln n,
// which is strictly increasing there and tends to -inf at the left end.
SaddleRoot solve_positive(double x, double n) {
  const double base = std::max(x, 0.0);
  const double log_n = std::log(n);
  auto G = [&](double s, double& slope) {
    const double log_int = log_gauss_integral(x, s);
    slope = 1.0 / s + s + std::exp(-0.5 * s * s - log_int);
    return std::log(s) + 0.5 * s * s + log_int - log_n;
  };

  double lo = base;
  double width = std::sqrt(2.0 * std::log(n + 2.0)) + 2.0;
  double hi = base + width;
  double slope = 0.0;
  for (int grow = 0; G(hi, slope) <= 0.0; ++grow) {
    if (grow > 60) throw ConvergenceError("solve_saddle: cannot bracket root");
    lo = hi;
    width *= 2.0;
    hi = base + width;
  }
  const double bracket_lo = lo;
  const double bracket_hi = hi;

  // Starting point from s^2 e^{s^2} = (n+1)^2 / zeta(x)^2 when it falls
  // inside the bracket.
  double s = 0.5 * (lo + hi);
  const double ln_arg = 2.0 * std::log(n + 1.0) - 2.0 * zeta_fn(x).log_magnitude;
  const double w = lambert_w0_from_log(ln_arg);
  if (w > 0.0) {
    const double guess = std::sqrt(w);
    if (guess > lo && guess < hi) s = guess;
  }

  for (int it = 0; it < 300; ++it) {
    const double g = G(s, slope);
    if (g == 0.0) break;
    if (g < 0.0) lo = s; else hi = s;
    double next = s - g / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - s);
    s = next;
    if (step <= 4e-16 * s || hi - lo <= 4e-16 * s) {
      return {s, bracket_lo, bracket_hi, saddle_residual(x, n, s), Branch::kPositive};
    }
  }
  if (std::fabs(G(s, slope)) < 1e-14) {
    return {s, bracket_lo, bracket_hi, saddle_residual(x, n, s), Branch::kPositive};
  }
  std::ostringstream msg;
  msg << "solve_saddle: no convergence for x=" << x << " n=" << n << " in [" << lo << ", "
      << hi << "]";
  throw ConvergenceError(msg.str());
}

}  // namespace

double saddle_residual(double x, double n, double s) {
  if (s == x || s == 0.0) return n;
  // sqrt(pi/2)[erf(x/sqrt2) - erf(s/sqrt2)] = integral_s^x e^{-t^2/2} dt
  const double log_int = s < x ? log_gauss_integral(s, x) : log_gauss_integral(x, s);
  const double sign = (s < x ? 1.0 : -1.0) * (s > 0 ? 1.0 : -1.0);
  return n + sign * std::exp(std::log(std::fabs(s)) + 0.5 * s * s + log_int);
}

SaddleRoot solve_saddle(double x, double n, Branch branch) {
  if (!std::isfinite(x)) throw DomainError("solve_saddle: x must be finite");
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("solve_saddle: n must be positive");
  switch (branch) {
    case Branch::kPositive:
      return solve_positive(x, n);
    case Branch::kNegative: {
      // S_m(x, n) = -S_p(-x, n)
      const SaddleRoot r = solve_positive(-x, n);
      const double s = -r.s;
      return {s, -r.bracket_hi, -r.bracket_lo, saddle_residual(x, n, s), Branch::kNegative};
    }
  }
  throw DomainError("solve_saddle: invalid branch");
}

double saddle_series_large_x(double x, int n) {
  const double l = std::log(n + 1.0);
  const double s3 = 1.0 - l - 0.5 * l * l - 1.0 / (n + 1.0);
  return x + l / x + s3 / (x * x * x);
}

double saddle_regime_approx(double x, int n, SaddleRegime regime) {
  if (n < 1) throw DomainError("saddle_regime_approx: n must be >= 1");
  const double log_np1 = std::log(n + 1.0);
  switch (regime) {
    case SaddleRegime::kLargeX: {
      if (x == 0.0) throw DomainError("saddle_regime_approx: large-x form needs x != 0");
      // W[(n+1)^2 x^2 e^{x^2}]
      return std::sqrt(lambert_w0_from_log(2.0 * log_np1 + 2.0 * std::log(std::fabs(x)) + x * x));
    }
    case SaddleRegime::kFixedX:
      return std::sqrt(lambert_w0_from_log(2.0 * log_np1 - 2.0 * zeta_fn(x).log_magnitude));
    case SaddleRegime::kSmallX: {
      const double y = n * x;
      const double r = std::sqrt(lambert_w0(2.0 * n * static_cast<double>(n) / std::numbers::pi));
      return r + (1.0 + std::sqrt(2.0 / std::numbers::pi) * y) / (r * n);
    }
    case SaddleRegime::kSqrtLog: {
      if (n < 2) throw DomainError("saddle_regime_approx: sqrt-log form needs n >= 2");
      const double log_n = std::log(static_cast<double>(n));
      const double u = x / std::sqrt(log_n);
      if (!(u > 0.0)) throw DomainError("saddle_regime_approx: sqrt-log form needs x > 0");
      // W[(n+1)^2 u^2 n^{u^2} ln n]
      return std::sqrt(lambert_w0_from_log(2.0 * log_np1 + 2.0 * std::log(u) + u * u * log_n +
                                           std::log(log_n)));
    }
  }
  throw DomainError("saddle_regime_approx: invalid regime");
}

}  // namespace erfpoly

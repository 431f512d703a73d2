#include "erfpoly/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "erfpoly/errors.hpp"

namespace erfpoly {
namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215452;
constexpr double kSeriesCutoff = 2.0;

// e^{-x^2} with x^2 split so the rounding of x*x does not reach the result.
double exp_minus_square(double x) {
  const double hi = std::trunc(x * 16.0) / 16.0;
  const double lo = x - hi;
  return std::exp(-hi * hi) * std::exp(-lo * (x + hi));
}

// Sum_{k>=0} 2^k x^{2k+1}/(2k+1)!!, all terms positive.
double erf_series_sum(double x) {
  const double two_x2 = 2.0 * x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= two_x2 / (2 * k + 1);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// modified Lentz, for x > 2.
double erfcx_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 20000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / (kSqrtPi * f);
}

double log_erfcx(double x) {
  if (x > kSeriesCutoff) return std::log(erfcx_continued_fraction(x));
  if (x >= 0.0) return x * x + std::log(erfc(x));
  return x * x + std::log1p(erf(-x));
}

struct GaussLegendre16 {
  std::array<double, 16> node{};
  std::array<double, 16> weight{};
  GaussLegendre16() {
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::fabs(dz) < 1e-17) break;
      }
      node[i] = z;
      weight[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre16& gauss_legendre16() {
  static const GaussLegendre16 rule;
  return rule;
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return -erf(-x);
  if (x == 0.0) return 0.0;
  if (x <= kSeriesCutoff) return kTwoOverSqrtPi * exp_minus_square(x) * erf_series_sum(x);
  return 1.0 - erfc(x);
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < -kSeriesCutoff) return 2.0 - erfc(-x);
  if (x < 0.0) return 1.0 + erf(-x);
  if (x <= kSeriesCutoff) return 1.0 - erf(x);
  if (x > 27.3) return 0.0;  // below the smallest subnormal
  return exp_minus_square(x) * erfcx_continued_fraction(x);
}

double erfcx(double x) {
  if (x > kSeriesCutoff) return erfcx_continued_fraction(x);
  return std::exp(log_erfcx(x));
}

double log_erfc(double x) {
  if (x > kSeriesCutoff) return std::log(erfcx_continued_fraction(x)) - x * x;
  if (x >= 0.0) return std::log(erfc(x));
  return std::log1p(erf(-x));
}

LogValue zeta_fn(double x) {
  return LogValue::from_log(1, kLogSqrtPiOver2 + log_erfc(x / kSqrt2));
}

LogValue z1(double x) {
  // e^{x^2/2} zeta(x) = sqrt(pi/2) erfcx(x/sqrt 2)
  return LogValue::from_log(1, kLogSqrtPiOver2 + log_erfcx(x / kSqrt2));
}

LogValue z0(double x) { return -z1(-x); }

double log_gauss_integral(double a, double b) {
  if (!(a < b)) {
    throw DomainError("log_gauss_integral: need a < b");
  }
  if (b - a < 1e-3) {
    const auto& gl = gauss_legendre16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // Factor out the integrand at the midpoint to keep far tails finite.
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) {
      const double u = half * gl.node[i];
      sum += gl.weight[i] * std::exp(-u * (mid + 0.5 * u));
    }
    return -0.5 * mid * mid + std::log(half * sum);
  }
  if (b <= 0.0) return log_gauss_integral(-b, -a);
  const double la = zeta_fn(a).log_magnitude;
  const double lb = zeta_fn(b).log_magnitude;
  return la + log1mexp(lb - la);
}

double inverf(double y) {
  if (std::isnan(y) || !(std::fabs(y) < 1.0)) {
    throw DomainError("inverf: argument must lie in (-1, 1), got " + std::to_string(y));
  }
  if (y == 0.0) return 0.0;
  if (y < 0.0) return -inverf(-y);

  // Giles' single-precision starting point.
  double w = -std::log((1.0 - y) * (1.0 + y));
  double guess;
  if (w < 5.0) {
    w -= 2.5;
    double p = 2.81022636e-08;
    p = 3.43273939e-07 + p * w;
    p = -3.5233877e-06 + p * w;
    p = -4.39150654e-06 + p * w;
    p = 0.00021858087 + p * w;
    p = -0.00125372503 + p * w;
    p = -0.00417768164 + p * w;
    p = 0.246640727 + p * w;
    p = 1.50140941 + p * w;
    guess = p * y;
  } else {
    w = std::sqrt(w) - 3.0;
    double p = -0.000200214257;
    p = 0.000100950558 + p * w;
    p = 0.00134934322 + p * w;
    p = -0.00367342844 + p * w;
    p = 0.00573950773 + p * w;
    p = -0.0076224613 + p * w;
    p = 0.00943887047 + p * w;
    p = 1.00167406 + p * w;
    p = 2.83297682 + p * w;
    guess = p * y;
  }

  // Residual r(x) increasing in x with root at the answer.  Upper tail in
  // log form: r = ln(1-y) - ln erfc(x), where 1-y is exact for y >= 1/2.
  const bool tail = y > 0.5;
  const double log_c = tail ? std::log1p(-y) : 0.0;
  auto residual = [&](double x, double& slope) {
    if (tail) {
      slope = kTwoOverSqrtPi / erfcx(x);
      return log_c - log_erfc(x);
    }
    slope = kTwoOverSqrtPi * exp_minus_square(x);
    return erf(x) - y;
  };

  double lo = 0.0;
  double hi = std::max(2.0 * guess, 1.0);
  double slope = 0.0;
  while (residual(hi, slope) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double r = residual(x, slope);
    if (r == 0.0) return x;
    if (r < 0.0) lo = x; else hi = x;
    double next = x - r / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - x);
    x = next;
    if (step <= 2e-16 * x || hi - lo <= 2e-16 * x) return x;
  }
  throw ConvergenceError("inverf: no convergence for y = " + std::to_string(y));
}

double lambert_w0(double z) {
  constexpr double kMinusInvE = -0.36787944117144232159552377016146087;
  if (std::isnan(z)) return z;
  if (z < kMinusInvE) {
    // One ulp of slack for arguments computed as -exp(-1).
    if (z >= kMinusInvE * (1.0 + 4e-16)) return -1.0;
    throw DomainError("lambert_w0: argument below -1/e");
  }
  if (z == 0.0) return 0.0;
  if (z == kMinusInvE) return -1.0;
  if (std::isinf(z)) return z;

  double w;
  if (z < -0.25) {
    const double p = std::sqrt(2.0 * (std::numbers::e * z + 1.0));
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
  } else if (z < 0.25) {
    w = z * (1.0 + z * (-1.0 + z * 1.5));
  } else if (z < std::numbers::e) {
    const double l = std::log1p(z);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  // Halley on w - z e^{-w} (f scaled by e^{-w}, no overflow).
  for (int it = 0; it < 100; ++it) {
    const double r = w - z * std::exp(-w);
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) return w;
    const double step = r / (wp1 - (w + 2.0) * r / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) < 1e-15 * (1.0 + std::fabs(w))) return w;
  }
  throw ConvergenceError("lambert_w0: no convergence");
}

double lambert_w0_from_log(double ln_z) {
  if (ln_z < 700.0) return lambert_w0(std::exp(ln_z));
  // w + ln w = ln z
  double w = ln_z - std::log(ln_z);
  for (int it = 0; it < 100; ++it) {
    const double step = (w + std::log(w) - ln_z) / (1.0 + 1.0 / w);
    w -= step;
    if (std::fabs(step) < 1e-15 * w) return w;
  }
  throw ConvergenceError("lambert_w0_from_log: no convergence");
}

double lambert_w_asymptotic(double ln_z) {
  if (!(ln_z > 1.0)) {
    throw DomainError("lambert_w_asymptotic: needs ln z > 1");
  }
  const double ll = std::log(ln_z);
  return ln_z - ll + ll / ln_z;
}

double ln_factorial(int n) {
  if (n < 0) throw DomainError("ln_factorial: n must be >= 0");
  // Neumaier-compensated sum of ln k.
  double sum = 0.0, comp = 0.0;
  for (int k = 2; k <= n; ++k) {
    const double v = std::log(static_cast<double>(k));
    const double t = sum + v;
    comp += std::fabs(sum) >= v ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double stirling_ln_factorial(int n) {
  if (n < 0) throw DomainError("stirling_ln_factorial: n must be >= 0");
  if (n == 0) return -std::numeric_limits<double>::infinity();
  const double dn = n;
  return 0.5 * std::log(2.0 * std::numbers::pi * dn) + dn * std::log(dn) - dn;
}

double wkb_phase_A(double x) { return -z1(x).log_magnitude; }

}  // namespace erfpoly

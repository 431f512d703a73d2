#pragma once

#include <numbers>

#include "erfpoly/log_value.hpp"

namespace erfpoly {

inline constexpr double kSqrtPi = 1.7724538509055160272981674833411452;
inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kSqrt2Pi = 2.5066282746310005024157652848110453;
inline constexpr double kSqrtPiOver2 = 1.2533141373155002512078826424055226;
// ln sqrt(pi/2)
inline constexpr double kLogSqrtPiOver2 = 0.22579135264472743236309761494744107;

double erf(double x);
double erfc(double x);
// e^{x^2} erfc(x); finite for every x where the result is representable.
double erfcx(double x);
// ln erfc(x) without underflow for large positive x.
double log_erfc(double x);

// zeta(x) = sqrt(pi/2) erfc(x/sqrt 2) = integral_x^inf exp(-t^2/2) dt.
LogValue zeta_fn(double x);

// Z1 = (1 - N)/N' = e^{x^2/2} zeta(x) and Z0 = -N/N' = -Z1(-x), where N is
// the standard normal distribution function.
LogValue z1(double x);
LogValue z0(double x);

// ln integral_a^b exp(-t^2/2) dt for a < b.
double log_gauss_integral(double a, double b);

// Inverse of erf on (-1, 1).  Throws DomainError outside.
double inverf(double y);

// Principal branch of the Lambert W function, z >= -1/e.
double lambert_w0(double z);
// W0(exp(ln_z)), usable when exp(ln_z) overflows.
double lambert_w0_from_log(double ln_z);
// ln z - ln ln z + ln ln z / ln z; requires ln_z > 1.
double lambert_w_asymptotic(double ln_z);

// ln n! as a sum of logs, and ln(sqrt(2 pi n) n^n e^{-n}).
double ln_factorial(int n);
double stirling_ln_factorial(int n);

// A(x) = -ln[e^{x^2/2} zeta(x)], the exponential rate of P_n/n! at fixed x.
double wkb_phase_A(double x);

}  // namespace erfpoly

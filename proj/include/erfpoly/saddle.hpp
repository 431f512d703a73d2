#pragma once

namespace erfpoly {

enum class Branch { kPositive, kNegative };

// Root s of  n + sqrt(pi/2) s e^{s^2/2} [erf(x/sqrt2) - erf(s/sqrt2)] = 0.
struct SaddleRoot {
  double s;
  double bracket_lo;
  double bracket_hi;
  double residual;  // left-hand side above, evaluated at s
  Branch branch;
};

// Bracketed safeguarded Newton on the log form of the equation.  n may be
// any positive real (points on a ray carry real n).  Throws DomainError for
// n <= 0 and ConvergenceError if the iteration stalls.
SaddleRoot solve_saddle(double x, double n, Branch branch);

// Left-hand side of the saddle equation computed from log-form pieces.
double saddle_residual(double x, double n, double s);

// x + ln(n+1)/x + s3/x^3, s3 = 1 - ln(n+1) - ln^2(n+1)/2 - 1/(n+1).
double saddle_series_large_x(double x, int n);

enum class SaddleRegime { kLargeX, kFixedX, kSmallX, kSqrtLog };

// Closed-form Lambert W approximations of S_p.  kSmallX reads x as y/n and
// kSqrtLog reads x as u sqrt(ln n).
double saddle_regime_approx(double x, int n, SaddleRegime regime);

}  // namespace erfpoly

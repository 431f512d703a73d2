#pragma once

// Large-n approximations of P_n(x).  Every estimate is returned divided by
// n!, in log form.

#include <optional>
#include <string_view>

#include "erfpoly/log_value.hpp"

namespace erfpoly {

enum class Regime { kPsi1, kPsi1Refined, kPsi2, kPsi3, kPsi4 };

std::string_view regime_name(Regime r);

struct RegimeEstimate {
  Regime regime;
  LogValue value;  // estimate of P_n(x)/n!
  double x;
  int n;
  std::optional<double> y;  // n*x, set for kPsi2
};

// Fixed x > 0: (2 ln n)^{-1/2} [e^{-x^2/2}/zeta(x)]^{n+1}.
RegimeEstimate psi1(double x, int n);

// x = y/n scale, both exponentials kept so odd n vanishes at y = 0.
RegimeEstimate psi2(double y, int n);

// Uniform in x: [x^2 + 2 ln(nx) - ln(2/pi)]^{-1/2} [e^{-x^2/2}/zeta(x)]^{n+1}.
RegimeEstimate psi3(double x, int n);

// psi1 with sqrt(ln n) replaced by sqrt(ln n - ln zeta(x)).
RegimeEstimate psi1_refined(double x, int n);

// Ray amplitude evaluated at launch parameter s (s != 0).
RegimeEstimate phi(double x, int n, double s);

// Sum of the two ray contributions, s = S_p(x,n) and s = -S_p(-x,n).
RegimeEstimate psi4(double x, int n);

// The x = u sqrt(ln n) form n! x^{n+1} / sqrt(2 (x^2/2 + ln(nx) - ln(2/pi)/2)),
// divided by n!.  Only used to cross-check psi4.
LogValue large_x_sqrt_log_form(double x, int n);

// CLI regime selection: psi2 for n|x| <= 4, psi3 for |x| >= sqrt(ln n),
// psi1 otherwise.  Negative x is folded with P_n(-x) = (-1)^n P_n(x).
RegimeEstimate auto_estimate(double x, int n);

}  // namespace erfpoly

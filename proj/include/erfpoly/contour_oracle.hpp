#pragma once

// P_n(x)/n! as a Cauchy integral of the normal quantile function,
//   ((n+1)/(2 pi i)) \oint S[N(x) + z N'(x)] z^{-(n+2)} dz,
// evaluated with the trapezoidal rule on a circle.

#include <complex>

#include "erfpoly/log_value.hpp"

namespace erfpoly {

struct ContourOptions {
  double radius_fraction = 0.5;
  int num_nodes = 0;  // 0 selects max(256, 16 (n+2))
  int max_nodes = 1 << 14;
  double imag_tol = 1e-8;
};

struct ContourResult {
  LogValue value;
  double real_part;
  double imag_part;
  int nodes_used;
};

ContourResult contour_oracle(double x, int n, const ContourOptions& opts = {});

// Entire-function erf on C by its Maclaurin series.
std::complex<double> erf_complex(std::complex<double> z);
// Complex Newton for erf(u) = v started from `guess`.
std::complex<double> inverf_complex(std::complex<double> v,
                                    std::complex<double> guess);

}  // namespace erfpoly

#include "erfpoly/contour_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "erfpoly/errors.hpp"
#include "erfpoly/special_functions.hpp"

namespace erfpoly {
namespace {
constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215452;
}

std::complex<double> erf_complex(std::complex<double> z) {
  // 2/sqrt(pi) sum (-1)^k z^{2k+1} / (k! (2k+1))
  const std::complex<double> z2 = z * z;
  std::complex<double> term = z;
  std::complex<double> sum = z;
  const double kmin = std::norm(z);
  for (int k = 1; k < 500; ++k) {
    term *= -z2 / static_cast<double>(k);
    const std::complex<double> contrib = term / static_cast<double>(2 * k + 1);
    sum += contrib;
    if (k > kmin && std::abs(contrib) < 1e-17 * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * sum;
}

std::complex<double> inverf_complex(std::complex<double> v, std::complex<double> guess) {
  std::complex<double> u = guess;
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 100; ++it) {
    const std::complex<double> step = (erf_complex(u) - v) / (kTwoOverSqrtPi * std::exp(-u * u));
    const double size = std::abs(step);
    // Near |v| = 1 roundoff in erf is amplified by e^{u^2}; stop once the
    // steps stop shrinking at that noise level.
    if (size >= prev && prev <= 1e-10 * (1.0 + std::abs(u))) return u;
    u -= step;
    if (size <= 1e-15 * std::abs(u) + 1e-300) return u;
    prev = size;
  }
  throw ConvergenceError("inverf_complex: Newton did not converge");
}

ContourResult contour_oracle(double x, int n, const ContourOptions& opts) {
  if (n < 2 || n > 20) throw DomainError("contour_oracle: needs 2 <= n <= 20");
  if (!(opts.radius_fraction > 0.0)) throw DomainError("contour_oracle: radius_fraction must be > 0");
  if (!(opts.radius_fraction < 1.0)) {
    throw DomainError("contour_oracle: contour touches a singularity (radius_fraction >= 1)");
  }
  // Singularities of S[N(x) + z N'(x)] sit at z = Z1(x) and z = Z0(x).
  const double nearest = std::min(z1(x).to_double(), z1(-x).to_double());
  const double r = opts.radius_fraction * nearest;
  const double dens = std::exp(-0.5 * x * x) / kSqrt2Pi;  // N'(x)
  const double erf_x = erf(x / kSqrt2);                   // 2 N(x) - 1
  const int power = n + 1;
  const double r_pow = std::pow(r, -power);

  int nodes = opts.num_nodes > 0 ? opts.num_nodes : std::max(256, 16 * (n + 2));
  for (;;) {
    std::complex<double> sum = 0.0;
    double abs_sum = 0.0;
    std::complex<double> u = inverf(erf_x + 2.0 * r * dens);
    for (int k = 0; k < nodes; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / nodes;
      const std::complex<double> z = std::polar(r, theta);
      u = inverf_complex(erf_x + 2.0 * dens * z, u);
      // S(w) = sqrt2 inverf(2w - 1); z^{-(n+1)} = r^{-(n+1)} e^{-i(n+1)theta}
      const std::complex<double> term = kSqrt2 * u * std::polar(r_pow, -power * theta);
      sum += term;
      abs_sum += std::abs(term);
    }
    const double scale = (n + 1.0) / nodes;
    const double re = scale * sum.real();
    const double im = scale * sum.imag();
    if (std::fabs(im) <= opts.imag_tol * scale * abs_sum) {
      return {LogValue::from_double(re), re, im, nodes};
    }
    if (nodes * 2 > opts.max_nodes) {
      throw ConvergenceError("contour_oracle: node count insufficient, imaginary part " +
                             std::to_string(im));
    }
    nodes *= 2;
  }
}

}  // namespace erfpoly

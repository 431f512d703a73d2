#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "erfpoly/contour_oracle.hpp"
#include "erfpoly/errors.hpp"
#include "erfpoly/polynomial.hpp"
#include "erfpoly/special_functions.hpp"

using namespace erfpoly;
using doctest::Approx;

TEST_CASE("complex erf and its inverse") {
  for (double x : {-2.0, -0.3, 0.0, 1.0}) CHECK(erf_complex(x).real() == Approx(std::erf(x)).epsilon(1e-14));
  CHECK(erf_complex(3.0).real() == Approx(std::erf(3.0)).epsilon(1e-11));
  const std::complex<double> z(0.4, 0.7);
  CHECK(std::abs(erf_complex(std::conj(z)) - std::conj(erf_complex(z))) < 1e-15);
  // erf(i y) = i erfi(y) with erfi(1) = 1.6504257587975428.
  CHECK(erf_complex({0.0, 1.0}).imag() == Approx(1.6504257587975428).epsilon(1e-14));
  const std::complex<double> u = inverf_complex(erf_complex(z), {0.3, 0.5});
  CHECK(std::abs(u - z) < 1e-13);
}

TEST_CASE("spot values") {
  CHECK(contour_oracle(1.0, 2).real_part == Approx(1.5).epsilon(1e-8));
  CHECK(std::fabs(contour_oracle(0.0, 3).real_part) <= 1e-10);
  const LogValue exact = eval_log_scaled(poly_at(10), mpq_class(1, 2));
  CHECK(contour_oracle(0.5, 10).value.log_magnitude == Approx(exact.log_magnitude).epsilon(1e-6));
}

TEST_CASE("agreement with exact values") {
  for (int n = 2; n <= 12; ++n) {
    for (double x : {0.0, 0.5, 1.0, 2.0}) {
      const double want = mpq_class(eval_exact(poly_at(n), exact_rational(x)) / mpq_class(factorial(n))).get_d();
      const ContourResult r = contour_oracle(x, n);
      if (want == 0.0) CHECK(std::fabs(r.real_part) <= 1e-10);
      else CHECK(r.real_part == Approx(want).epsilon(1e-6));
      CHECK(std::fabs(r.imag_part) <= 1e-8 * std::max(1.0, std::fabs(r.real_part)));
    }
  }
}

TEST_CASE("options") {
  ContourOptions o;
  o.radius_fraction = 0.25;
  o.num_nodes = 64;
  const ContourResult r = contour_oracle(1.0, 4, o);
  CHECK(r.nodes_used >= 64);
  CHECK(r.real_part == Approx(77.0 / 24.0).epsilon(1e-8));
  CHECK(contour_oracle(1.0, 20).real_part ==
        Approx(mpq_class(eval_exact(poly_at(20), 1) / mpq_class(factorial(20))).get_d()).epsilon(1e-6));
  o.radius_fraction = 1.0;
  CHECK_THROWS_AS(contour_oracle(1.0, 4, o), DomainError);
  CHECK_THROWS_AS(contour_oracle(1.0, 1), DomainError);
  CHECK_THROWS_AS(contour_oracle(1.0, 21), DomainError);
}

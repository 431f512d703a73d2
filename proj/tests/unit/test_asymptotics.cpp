#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "erfpoly/asymptotics.hpp"
#include "erfpoly/errors.hpp"
#include "erfpoly/polynomial.hpp"
#include "erfpoly/saddle.hpp"
#include "erfpoly/special_functions.hpp"

using namespace erfpoly;
using doctest::Approx;

namespace {

double exact_log(int n, double x) { return eval_log_scaled(poly_at(n), exact_rational(x)).log_magnitude; }

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("fixed-x estimate") {
  for (double x : {0.2, 1.0, 3.0}) CHECK(psi1(x, 40).value.sign == 1);
  CHECK(rel(psi1(1.0, 40).value.log_magnitude, exact_log(40, 1.0)) < 0.05);
  const double limit = 41 * std::log(std::sqrt(2 / M_PI)) - 0.5 * std::log(2 * std::log(40.0));
  CHECK(psi1(1e-9, 40).value.log_magnitude == Approx(limit).epsilon(1e-6));
  CHECK_THROWS_AS(psi1(0.0, 40), DomainError);
  CHECK_THROWS_AS(psi1(1.0, 1), DomainError);
}

TEST_CASE("fixed-x estimate converges along n") {
  double prev = 1.0;
  for (int n : {20, 40, 80, 160}) {
    const double e = rel(psi1(1.0, n).value.log_magnitude, exact_log(n, 1.0));
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("small-x estimate") {
  CHECK(psi2(0.0, 41).value.sign == 0);
  const double base = -0.5 * std::log(2 * std::log(40.0)) + 20.5 * std::log(2 / M_PI);
  CHECK(psi2(0.0, 40).value.log_magnitude == Approx(std::log(2.0) + base).epsilon(1e-14));
  CHECK(rel(psi2(2.0, 40).value.log_magnitude, exact_log(40, 2.0 / 40)) < 0.05);
  CHECK(psi2(-1.5, 41).value.sign == -1);
  CHECK(psi2(-1.5, 40).value.sign == 1);
}

TEST_CASE("uniform estimate") {
  CHECK(std::isfinite(psi3(1.0, 40).value.log_magnitude));
  for (double x = 3.0; x <= 6.0; x += 0.25) {
    const double e = exact_log(40, x);
    CHECK(std::fabs(psi3(x, 40).value.log_magnitude - e) < std::fabs(psi1(x, 40).value.log_magnitude - e));
  }
  // Far out both reduce to n! x^n scaling: ln(psi3) - n ln x stays bounded.
  for (double x : {50.0, 200.0}) {
    const double d = psi3(x, 40).value.log_magnitude - 40 * std::log(x);
    CHECK(std::fabs(d) < 1.0);
  }
  CHECK_THROWS_AS(psi3(0.01, 3), DomainError);
}

TEST_CASE("refined fixed-x estimate") {
  CHECK(psi1_refined(1.0, 40).value.sign == 1);
  CHECK(rel(psi1_refined(6.0, 4).value.log_magnitude, exact_log(4, 6.0)) < 0.05);
  // Both share the rate term; the ratio of their log-corrections tends to 1.
  auto ratio = [](int n) {
    const double rate = -(n + 1.0) * z1(1.0).log_magnitude;
    return (psi1_refined(1.0, n).value.log_magnitude - rate) / (psi1(1.0, n).value.log_magnitude - rate);
  };
  CHECK(std::fabs(ratio(1 << 20) - 1) < std::fabs(ratio(40) - 1));
  CHECK(std::fabs(ratio(1 << 30) - 1) < 0.05);
}

TEST_CASE("single-ray amplitude") {
  CHECK(phi(1.0, 3, -0.7).value.sign == -1);
  CHECK(phi(1.0, 4, -0.7).value.sign == 1);
  const LogValue p0 = phi(2.0, 0, 2.0).value;
  CHECK(p0.sign == 1);
  CHECK(std::isfinite(p0.log_magnitude));
  const double s = solve_saddle(2.0, 4, Branch::kPositive).s;
  CHECK(rel(phi(2.0, 4, s).value.log_magnitude, exact_log(4, 2.0)) < 0.10);
  CHECK_THROWS_AS(phi(1.0, 4, 0.0), DomainError);
}

TEST_CASE("two-ray estimate") {
  CHECK(psi4(0.0, 3).value.sign == 0);
  CHECK(psi4(0.0, 5).value.sign == 0);
  for (int n : {3, 4, 7, 40}) {
    for (double x : {0.3, 1.0, 2.5}) {
      const LogValue a = psi4(x, n).value, b = psi4(-x, n).value;
      CHECK(b.sign == (n % 2 == 0 ? a.sign : -a.sign));
      CHECK(b.log_magnitude == Approx(a.log_magnitude).epsilon(1e-12));
    }
  }
  for (double x = 1.0; x <= 10.0; x += 0.5) CHECK(rel(psi4(x, 4).value.log_magnitude, exact_log(4, x)) < 0.10);
}

TEST_CASE("n=400 cross-checks between estimates") {
  const int n = 400;
  CHECK(rel(psi4(1.0, n).value.log_magnitude, psi1(1.0, n).value.log_magnitude) < 0.02);
  CHECK(rel(psi4(1.0 / n, n).value.log_magnitude, psi2(1.0, n).value.log_magnitude) < 0.02);
}

TEST_CASE("n=400 two-ray estimate vs the sqrt-log large-x form") {
  const int n = 400;
  const double x = std::sqrt(std::log(static_cast<double>(n)));
  CHECK(rel(psi4(x, n).value.log_magnitude, large_x_sqrt_log_form(x, n).log_magnitude) < 0.05);
}

TEST_CASE("automatic regime choice") {
  CHECK(auto_estimate(0.05, 40).regime == Regime::kPsi2);
  CHECK(auto_estimate(1.0, 40).regime == Regime::kPsi1);
  CHECK(auto_estimate(3.0, 40).regime == Regime::kPsi3);
  CHECK(auto_estimate(1.0, 1).regime == Regime::kPsi4);
  CHECK(auto_estimate(-1.0, 41).value.sign == -1);
  CHECK(auto_estimate(-1.0, 40).value.sign == 1);
  CHECK(auto_estimate(-1.0, 41).value.log_magnitude == auto_estimate(1.0, 41).value.log_magnitude);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "erfpoly/errors.hpp"
#include "erfpoly/saddle.hpp"

using namespace erfpoly;
using doctest::Approx;

namespace {

// Bisection in long double on the defining equation, s > max(x, 0).
double bisect_root(double x, double n) {
  auto h = [&](long double s) {
    const long double r2 = std::sqrt(2.0L);
    const long double diff = std::erfcl(s / r2) - std::erfcl(x / r2);  // erf(x/r2) - erf(s/r2)
    return n + std::sqrt(std::acos(-1.0L) / 2) * s * std::exp(s * s / 2) * diff;
  };
  long double lo = std::max(x, 0.0), hi = lo + 1;
  while (h(hi) > 0) hi += 1;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    (h(mid) > 0 ? lo : hi) = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

}  // namespace

TEST_CASE("positive root against bisection") {
  for (double n : {0.5, 1.0, 4.0, 40.0, 400.0}) {
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0, 4.0}) {
      const SaddleRoot r = solve_saddle(x, n, Branch::kPositive);
      CHECK(r.s == Approx(bisect_root(x, n)).epsilon(1e-12));
      CHECK(r.s > std::max(x, 0.0));
      CHECK(r.bracket_lo <= r.s);
      CHECK(r.s <= r.bracket_hi);
    }
  }
}

TEST_CASE("residual") {
  for (double n : {1.0, 4.0, 40.0, 1000.0, 1e6}) {
    for (double x = -10.0; x <= 10.0; x += 0.5) {
      for (Branch b : {Branch::kPositive, Branch::kNegative}) {
        const SaddleRoot r = solve_saddle(x, n, b);
        CHECK(std::fabs(r.residual) <= 1e-12 * (1 + n));
      }
    }
  }
}

TEST_CASE("small n and symmetry") {
  const double s = solve_saddle(5.0, 1.0, Branch::kPositive).s;
  CHECK(s > 5.0);
  CHECK(s < 6.0);
  for (double x : {-2.0, 0.0, 0.7, 3.0}) {
    CHECK(solve_saddle(-x, 7.0, Branch::kNegative).s == Approx(-solve_saddle(x, 7.0, Branch::kPositive).s).epsilon(1e-12));
    CHECK(solve_saddle(x, 7.0, Branch::kNegative).s < std::min(x, 0.0));
  }
  CHECK_THROWS_AS(solve_saddle(1.0, 0.0, Branch::kPositive), DomainError);
  CHECK_THROWS_AS(solve_saddle(NAN, 1.0, Branch::kPositive), DomainError);
}

TEST_CASE("large-x series") {
  CHECK(saddle_series_large_x(3.0, 0) == Approx(3.0).epsilon(1e-15));
  const double l = std::log(5.0);
  CHECK(saddle_series_large_x(10.0, 4) == Approx(10 + l / 10 + (1 - l - l * l / 2 - 0.2) / 1000).epsilon(1e-15));
  CHECK(solve_saddle(10.0, 4, Branch::kPositive).s == Approx(saddle_series_large_x(10.0, 4)).epsilon(0.01));
  double prev = INFINITY;
  for (double x : {8.0, 16.0, 32.0}) {
    const double e = std::fabs(solve_saddle(x, 4, Branch::kPositive).s - saddle_series_large_x(x, 4)) * std::pow(x, 4);
    CHECK(e < 1.0);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("Lambert W regime forms") {
  const int n = 40;
  CHECK(saddle_regime_approx(1.0, n, SaddleRegime::kFixedX) == Approx(solve_saddle(1.0, n, Branch::kPositive).s).epsilon(0.02));
  CHECK(saddle_regime_approx(0.0, n, SaddleRegime::kSmallX) == Approx(solve_saddle(0.0, n, Branch::kPositive).s).epsilon(0.02));
  CHECK(saddle_regime_approx(1.0 / n, n, SaddleRegime::kSmallX) == Approx(solve_saddle(1.0 / n, n, Branch::kPositive).s).epsilon(0.02));
  const double x = std::sqrt(std::log(40.0));
  CHECK(saddle_regime_approx(x, n, SaddleRegime::kSqrtLog) == Approx(solve_saddle(x, n, Branch::kPositive).s).epsilon(0.02));
  CHECK(saddle_regime_approx(8.0, n, SaddleRegime::kLargeX) == Approx(solve_saddle(8.0, n, Branch::kPositive).s).epsilon(0.02));
  CHECK(saddle_regime_approx(8.0, 4, SaddleRegime::kLargeX) == Approx(solve_saddle(8.0, 4, Branch::kPositive).s).epsilon(0.01));
  CHECK(saddle_regime_approx(40.0, 4, SaddleRegime::kLargeX) == Approx(solve_saddle(40.0, 4, Branch::kPositive).s).epsilon(1e-3));
  CHECK_THROWS_AS(saddle_regime_approx(1.0, 0, SaddleRegime::kFixedX), DomainError);
  CHECK_THROWS_AS(saddle_regime_approx(0.0, 4, SaddleRegime::kLargeX), DomainError);
}

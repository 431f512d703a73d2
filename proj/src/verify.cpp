#include "erfpoly/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "erfpoly/asymptotics.hpp"
#include "erfpoly/contour_oracle.hpp"
#include "erfpoly/errors.hpp"
#include "erfpoly/polynomial.hpp"
#include "erfpoly/ray.hpp"
#include "erfpoly/saddle.hpp"
#include "erfpoly/special_functions.hpp"
#include "erfpoly/table.hpp"

namespace erfpoly {
namespace {

CheckResult at_most(std::string name, double measured, double tol) {
  return {std::move(name), measured, tol, measured <= tol};
}

double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

mpq_class eval_derivative(const Polynomial& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (int k = p.degree(); k >= 1; --k) acc = acc * x + mpq_class(p[k] * k);
  return acc;
}

const std::vector<double>& ray_times() {
  static const std::vector<double> t = [] {
    std::vector<double> v;
    for (int i = -12; i <= 12; ++i) v.push_back(0.25 * i);
    return v;
  }();
  return t;
}
const std::vector<double> kRayLaunches{0.25, 0.5, 1.0, 2.0, 4.0};

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<Suite> parse_suite(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "poly") return Suite::kPoly;
  if (s == "special") return Suite::kSpecial;
  if (s == "asymp") return Suite::kAsymp;
  if (s == "ray") return Suite::kRay;
  if (s == "oracle") return Suite::kOracle;
  if (s == "all") return Suite::kAll;
  return std::nullopt;
}

SuiteReport verify_poly() {
  SuiteReport rep{"poly", {}};
  const auto seq = poly_sequence(200);
  int bad = 0;
  for (const auto& p : seq) bad += check_invariants(p).empty() ? 0 : 1;
  rep.checks.push_back(at_most("structure n<=200 (violations)", bad, 0));

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick_n(0, 99);
  std::uniform_int_distribution<long> pick_num(-50, 50);
  std::uniform_int_distribution<long> pick_den(1, 17);
  bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = pick_n(rng);
    mpq_class x(pick_num(rng), pick_den(rng));
    x.canonicalize();
    const mpq_class lhs = eval_exact(seq[n + 1], x);
    const mpq_class rhs = eval_derivative(seq[n], x) + x * (n + 1) * eval_exact(seq[n], x);
    bad += lhs == rhs ? 0 : 1;
  }
  rep.checks.push_back(at_most("recurrence identity, 100 rational points (violations)", bad, 0));

  bad = 0;
  for (int n = 2; n <= 50; ++n) {
    double prev = std::numeric_limits<double>::infinity();
    for (int x : {2, 4, 8, 16}) {
      mpz_class xpow;
      mpz_pow_ui(xpow.get_mpz_t(), mpz_class(x).get_mpz_t(), n);
      const mpq_class ratio = eval_exact(seq[n], mpq_class(x)) / mpq_class(factorial(n) * xpow);
      const double r = ratio.get_d();
      if (!(ratio > 1) || !(r < prev)) ++bad;
      prev = r;
    }
  }
  rep.checks.push_back(at_most("P_n(x)/(n! x^n) > 1 and decreasing in x (violations)", bad, 0));
  return rep;
}

SuiteReport verify_special() {
  SuiteReport rep{"special", {}};
  double worst = 0.0;
  for (int i = -300; i <= 300; ++i) {
    const double x = i / 100.0;
    worst = std::max(worst, std::fabs(inverf(erf(x)) - x));
  }
  rep.checks.push_back(at_most("inverf(erf(x)) - x on [-3,3]", worst, 1e-12));

  worst = 0.0;
  for (int i = 0; i <= 150; ++i) {
    const double z = std::pow(10.0, -3.0 + 0.1 * i);
    const double w = lambert_w0(z);
    worst = std::max(worst, rel_diff(w * std::exp(w), z));
  }
  rep.checks.push_back(at_most("W e^W = z relative on [1e-3,1e12]", worst, 1e-14));

  int bad = 0;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = -600; i <= 3000; ++i) {
    const LogValue z = zeta_fn(i / 100.0);
    if (z.sign != 1 || !(z.log_magnitude < prev)) ++bad;
    prev = z.log_magnitude;
  }
  rep.checks.push_back(at_most("zeta positive and decreasing on [-6,30] (violations)", bad, 0));

  worst = 0.0;
  const double h = 1e-5;
  for (int i = 1; i <= 50; ++i) {
    const double x = 0.1 * i;
    const double dA = (wkb_phase_A(x + h) - wkb_phase_A(x - h)) / (2 * h);
    worst = std::max(worst, std::fabs(std::exp(wkb_phase_A(x)) - x - dA));
  }
  rep.checks.push_back(at_most("e^A = x + A' on [0.1,5]", worst, 1e-6));

  worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double x = 0.1 * i;
    const double lhs = z1(-x).to_double() + z1(x).to_double();
    worst = std::max(worst, rel_diff(lhs, kSqrt2Pi * std::exp(0.5 * x * x)));
  }
  rep.checks.push_back(at_most("Z1(-x) + Z1(x) = sqrt(2pi) e^{x^2/2} relative", worst, 1e-12));
  return rep;
}

SuiteReport verify_asymp() {
  SuiteReport rep{"asymp", {}};
  const int n = 400;
  const double l4x = psi4(1.0, n).value.log_magnitude;
  rep.checks.push_back(at_most("n=400 x=1: ln psi4 vs ln psi1", rel_diff(l4x, psi1(1.0, n).value.log_magnitude), 0.02));
  const double l4y = psi4(1.0 / n, n).value.log_magnitude;
  rep.checks.push_back(at_most("n=400 y=1: ln psi4 vs ln psi2", rel_diff(l4y, psi2(1.0, n).value.log_magnitude), 0.02));
  const double xu = std::sqrt(std::log(static_cast<double>(n)));
  const double l4u = psi4(xu, n).value.log_magnitude;
  rep.checks.push_back(at_most("n=400 u=1: ln psi4 vs ln large-x sqrt-log form",
                               rel_diff(l4u, large_x_sqrt_log_form(xu, n).log_magnitude), 0.05));

  int bad = 0;
  double prev = std::numeric_limits<double>::infinity();
  for (int m : {20, 40, 80, 160}) {
    const double exact = eval_log_scaled(poly_at(m), mpq_class(1)).log_magnitude;
    const double err = rel_diff(psi1(1.0, m).value.log_magnitude, exact);
    if (!(err < prev)) ++bad;
    prev = err;
  }
  rep.checks.push_back(at_most("psi1 log error at x=1 decreasing over n=20..160 (violations)", bad, 0));

  double worst = 0.0;
  for (int m : {1, 2, 4, 10, 40, 160, 400}) {
    for (int i = -40; i <= 40; ++i) {
      const double x = 0.25 * i;
      for (Branch b : {Branch::kPositive, Branch::kNegative}) {
        worst = std::max(worst, std::fabs(solve_saddle(x, m, b).residual) / (1.0 + m));
      }
    }
  }
  rep.checks.push_back(at_most("saddle residual / (1+n)", worst, 1e-12));

  bad = 0;
  for (int m : {3, 5, 41}) {
    for (double x : {0.01, 0.3, 2.0}) {
      if (psi4(x, m).value.sign != -psi4(-x, m).value.sign) ++bad;
      if (!(psi4(x, m).value.sign == 1)) ++bad;
      const double y = m * x;
      if (psi2(y, m).value.sign != -psi2(-y, m).value.sign) ++bad;
      if (psi1(x, m).value.sign != 1) ++bad;
      if (m * x > 1.0 && psi3(x, m).value.sign != 1) ++bad;
    }
  }
  rep.checks.push_back(at_most("sign pattern of psi1..psi4 (violations)", bad, 0));
  return rep;
}

SuiteReport verify_ray() {
  SuiteReport rep{"ray", {}};
  double eik = 0.0, chr = 0.0, jac = 0.0, trn = 0.0, frec = 0.0;
  for (double s : kRayLaunches) {
    for (double t : ray_times()) {
      const RayState st = ray_state(t, s);
      eik = std::max(eik, std::fabs(check_eikonal(st)) / eikonal_scale(st));
      const auto res = check_characteristics(st);
      const double eq = std::exp(st.q);
      const std::array<double, 5> expected{1.0, -eq, -(st.n + 1.0), -st.x, st.p - st.q * eq};
      for (int k = 0; k < 5; ++k) chr = std::max(chr, std::fabs(res[k]) / (1.0 + std::fabs(expected[k])));
      jac = std::max(jac, std::fabs(check_jacobian(t, s)) / (1.0 + std::fabs(st.J)));
      if (t <= 0.0) trn = std::max(trn, std::fabs(check_transport(t, s)));
      frec = std::max(frec, std::fabs(st.f - ray_f_from_xns(st.x, st.n, s)) / (1.0 + std::fabs(st.f)));
    }
  }
  rep.checks.push_back(at_most("eikonal |F|/scale", eik, 1e-10));
  rep.checks.push_back(at_most("characteristics (relative)", chr, 1e-7));
  rep.checks.push_back(at_most("Jacobian (s+1/s)n+s / (1+|J|)", jac, 1e-7));
  rep.checks.push_back(at_most("transport g_t + J_t/2J, t<=0", trn, 1e-7));
  rep.checks.push_back(at_most("f(t,s) vs f(x,n,s) / (1+|f|)", frec, 1e-10));

  double worst = 0.0;
  for (double s : {0.5, 1.0, 2.0, 3.0}) {
    for (int m : {1, 2, 5, 20}) {
      double t = 0.0;
      try {
        t = ray_time_for_n(s, m);
      } catch (const DomainError&) {
        continue;  // this ray never reaches n = m
      }
      worst = std::max(worst, std::fabs(solve_saddle(t + s, m, Branch::kPositive).s - s));
    }
  }
  rep.checks.push_back(at_most("saddle root recovers launch s", worst, 1e-8));
  return rep;
}

SuiteReport verify_oracle() {
  SuiteReport rep{"oracle", {}};
  double worst_rel = 0.0, worst_abs = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const Polynomial p = poly_at(n);
    for (double x : {0.0, 0.5, 1.0, 2.0}) {
      const mpq_class exact_q = eval_exact(p, exact_rational(x)) / mpq_class(factorial(n));
      const double exact = exact_q.get_d();
      const double got = contour_oracle(x, n).real_part;
      if (exact == 0.0) {
        worst_abs = std::max(worst_abs, std::fabs(got));
      } else {
        worst_rel = std::max(worst_rel, rel_diff(got, exact));
      }
    }
  }
  rep.checks.push_back(at_most("contour vs exact, relative", worst_rel, 1e-6));
  rep.checks.push_back(at_most("contour vs exact zeros, absolute", worst_abs, 1e-10));
  return rep;
}

std::vector<SuiteReport> run_suite(Suite suite) {
  switch (suite) {
    case Suite::kPoly: return {verify_poly()};
    case Suite::kSpecial: return {verify_special()};
    case Suite::kAsymp: return {verify_asymp()};
    case Suite::kRay: return {verify_ray()};
    case Suite::kOracle: return {verify_oracle()};
    case Suite::kAll:
      return {verify_poly(), verify_special(), verify_asymp(), verify_ray(), verify_oracle()};
  }
  return {};
}

std::string format_report(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  for (const auto& rep : reports) {
    for (const auto& c : rep.checks) {
      os << (c.passed ? "PASS" : "FAIL") << "  [" << rep.suite << "] " << c.name
         << "  measured=" << format_double(c.measured) << " tol=" << format_double(c.tolerance)
         << '\n';
    }
  }
  return os.str();
}

}  // namespace erfpoly

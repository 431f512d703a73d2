#include "erfpoly/ray.hpp"

#include <cmath>
#include <limits>

#include "erfpoly/errors.hpp"
#include "erfpoly/special_functions.hpp"

namespace erfpoly {

double ray_n(double t, double s) {
  if (!(s > 0.0)) throw DomainError("ray_n: launch parameter must be positive");
  if (t == 0.0) return 0.0;
  // n = -sqrt(pi/2) s e^{s^2/2} [erf((t+s)/sqrt2) - erf(s/sqrt2)]
  //   = -s e^{s^2/2} integral_s^{s+t} e^{-u^2/2} du
  const double x = t + s;
  const double log_int = t > 0.0 ? log_gauss_integral(s, x) : log_gauss_integral(x, s);
  const double mag = std::exp(std::log(s) + 0.5 * s * s + log_int);
  return t > 0.0 ? -mag : mag;
}

RayState ray_state(double t, double s) {
  RayState r{};
  r.t = t;
  r.s = s;
  r.x = t + s;
  r.n = ray_n(t, s);
  const double phase = 0.5 * t * t + s * t;  // t^2/2 + st
  r.q = -phase + std::log(s);
  r.p = -r.n * r.x + s * std::exp(-phase) - r.x;
  r.f = -r.n * (1.0 + phase - std::log(s)) - phase + kRayF0;
  r.J = (s + 1.0 / s) * r.n + s;
  r.g = r.J > 0.0 ? 0.5 * std::log(s / r.J) : std::numeric_limits<double>::quiet_NaN();
  return r;
}

double ray_f_from_xns(double x, double n, double s) {
  return (std::log(s) - 1.0) * n + 0.5 * (s - x) * (s + x) * (n + 1.0) + kRayF0;
}

double ray_g_from_ns(double n, double s) {
  const double s2 = s * s;
  return 0.5 * std::log(s2 / ((n + 1.0) * s2 + n));
}

double check_eikonal(const RayState& st) {
  return st.p - std::exp(st.q) + (st.n + 1.0) * st.x;
}

double eikonal_scale(const RayState& st) {
  return 1.0 + std::fabs(st.p) + std::exp(st.q) + std::fabs((st.n + 1.0) * st.x);
}

std::array<double, 5> check_characteristics(const RayState& st, double h) {
  const RayState a = ray_state(st.t + h, st.s);
  const RayState b = ray_state(st.t - h, st.s);
  const double inv = 1.0 / (2.0 * h);
  const double eq = std::exp(st.q);
  return {
      (a.x - b.x) * inv - 1.0,
      (a.n - b.n) * inv + eq,
      (a.p - b.p) * inv + (st.n + 1.0),
      (a.q - b.q) * inv + st.x,
      (a.f - b.f) * inv - (st.p - st.q * eq),
  };
}

double check_jacobian(double t, double s, double h) {
  const double n_s = (ray_n(t, s + h) - ray_n(t, s - h)) / (2.0 * h);
  const double n_t = (ray_n(t + h, s) - ray_n(t - h, s)) / (2.0 * h);
  const double closed = (s + 1.0 / s) * ray_n(t, s) + s;
  return (n_s - n_t) - closed;
}

double check_transport(double t, double s, double h) {
  // On the J < 0 side g is taken as (1/2) ln|s/J|, which solves the same
  // transport equation.
  auto g = [s](double tt) {
    const double n = ray_n(tt, s);
    return 0.5 * std::log(std::fabs(s * s / ((n + 1.0) * s * s + n)));
  };
  const double g_t = (g(t + h) - g(t - h)) / (2.0 * h);
  const RayState st = ray_state(t, s);
  // J_t = (s + 1/s) n_t with n_t = -e^q along the ray.
  const double J_t = -(s + 1.0 / s) * std::exp(st.q);
  return g_t + J_t / (2.0 * st.J);
}

double ray_time_for_n(double s, double n) {
  if (!(s > 0.0) || !(n > 0.0)) throw DomainError("ray_time_for_n: needs s > 0 and n > 0");
  // n(t) on t < 0 increases to s e^{s^2/2} integral_{-inf}^s e^{-u^2/2} du.
  const double log_cap = std::log(s) + 0.5 * s * s + std::log(kSqrt2Pi - zeta_fn(s).to_double());
  const double log_n = std::log(n);
  if (!(log_n < log_cap)) throw DomainError("ray_time_for_n: n is beyond the ray's reach");
  double lo = -1.0;  // n(lo) >= n
  while (std::log(ray_n(lo, s)) < log_n) lo *= 2.0;
  double hi = 0.0;   // n(hi) < n
  for (int it = 0; it < 200 && hi - lo > 1e-16 * std::fabs(lo); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::log(ray_n(mid, s)) < log_n) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace erfpoly

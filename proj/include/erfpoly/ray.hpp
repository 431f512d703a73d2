#pragma once

// Closed-form characteristics of the eikonal equation
//   f_x + (n+1) x - exp(f_n) = 0
// launched from n = 0 with p = 0, q = ln s, and finite-difference checks of
// the ray, Jacobian and transport relations.

#include <array>

namespace erfpoly {

// f0 = ln(sqrt(2 pi)/e), fixed by matching P_n(x) ~ n! x^n.
inline constexpr double kRayF0 = -0.081061466795327258;

struct RayState {
  double t, s;
  double x, n;
  double p, q;
  double f, g;
  double J;
};

// Requires s > 0; negative launches are the image of (t, s) -> (-t, -s),
// which maps x -> -x and keeps n.
RayState ray_state(double t, double s);

// x and n only, without the remaining fields.
double ray_n(double t, double s);

// f from the (x, n, s) form: (ln s - 1) n + (s^2 - x^2)(n+1)/2 + f0.
double ray_f_from_xns(double x, double n, double s);
// g = (1/2) ln[s^2 / ((n+1)s^2 + n)].
double ray_g_from_ns(double n, double s);

// F = p - e^q + (n+1) x.
double check_eikonal(const RayState& state);
// Scale against which check_eikonal is judged: 1 + |p| + e^q + (n+1)|x|.
double eikonal_scale(const RayState& state);

// Central differences of (x, n, p, q, f) in t minus
// (1, -e^q, -(n+1), -x, p - q e^q).
std::array<double, 5> check_characteristics(const RayState& state,
                                            double h = 1e-5);

// Finite-difference n_s - n_t minus (s + 1/s) n + s.
double check_jacobian(double t, double s, double h = 1e-5);

// Finite-difference g_t + J_t/(2J), with g = (1/2) ln|s^2/((n+1)s^2 + n)|.
double check_transport(double t, double s, double h = 1e-5);

// t < 0 at which the positive-s ray reaches a given n > 0.
double ray_time_for_n(double s, double n);

}  // namespace erfpoly

#include "erfpoly/figures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "erfpoly/errors.hpp"
#include "erfpoly/polynomial.hpp"
#include "erfpoly/ray.hpp"

namespace erfpoly {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::optional<LogValue> estimate(Regime r, double x, int n) {
  try {
    switch (r) {
      case Regime::kPsi1: return psi1(x, n).value;
      case Regime::kPsi1Refined: return psi1_refined(x, n).value;
      case Regime::kPsi2: return psi2(n * x, n).value;
      case Regime::kPsi3: return psi3(x, n).value;
      case Regime::kPsi4: return psi4(x, n).value;
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

double log_or_nan(const LogValue& v) { return v.is_zero() ? kNaN : v.log_magnitude; }

TableRow compare_with(const Polynomial& p, double x, const std::vector<Regime>& regimes) {
  TableRow row;
  row.abscissa = x;
  const LogValue exact = eval_log_scaled(p, exact_rational(x));
  if (!exact.is_zero()) row.exact_log = exact.log_magnitude;
  for (Regime r : regimes) {
    const std::string name(regime_name(r));
    const auto est = estimate(r, x, p.index());
    if (!est) continue;
    row.estimates[name] = *est;
    if (row.exact_log && *row.exact_log != 0.0 && !est->is_zero()) {
      row.rel_log_error[name] = std::fabs(est->log_magnitude - *row.exact_log) / std::fabs(*row.exact_log);
    }
  }
  return row;
}

double estimate_column(const TableRow& row, Regime r) {
  const auto it = row.estimates.find(std::string(regime_name(r)));
  return it == row.estimates.end() ? kNaN : log_or_nan(it->second);
}

double error_column(const TableRow& row, Regime r) {
  const auto it = row.rel_log_error.find(std::string(regime_name(r)));
  return it == row.rel_log_error.end() ? kNaN : it->second;
}

Table comparison_table(const GridSpec& grid, const std::vector<Regime>& regimes) {
  Table t;
  t.columns.push_back("x");
  t.columns.push_back("ln_exact");
  for (Regime r : regimes) t.columns.push_back("ln_" + std::string(regime_name(r)));
  for (Regime r : regimes) t.columns.push_back("rel_err_" + std::string(regime_name(r)));
  const Polynomial p = poly_at(grid.n);
  for (int i = 0; i < grid.count; ++i) {
    const TableRow row = compare_with(p, grid.point(i), regimes);
    std::vector<double> out{row.abscissa, row.exact_log.value_or(kNaN)};
    for (Regime r : regimes) out.push_back(estimate_column(row, r));
    for (Regime r : regimes) out.push_back(error_column(row, r));
    t.rows.push_back(std::move(out));
  }
  return t;
}

Table small_x_table(const GridSpec& grid) {
  Table t;
  t.columns = {"y", "ln_exact", "ln_psi2", "ratio"};
  const Polynomial p = poly_at(grid.n);
  for (int i = 0; i < grid.count; ++i) {
    const double y = grid.point(i);
    const TableRow row = compare_with(p, y / grid.n, {Regime::kPsi2});
    const double le = row.exact_log.value_or(kNaN);
    const double lp = estimate_column(row, Regime::kPsi2);
    t.rows.push_back({y, le, lp, le / lp});
  }
  return t;
}

// 17 launch values s = -2, -1.75, ..., 2; the grid runs over |t|.  Positive
// launches use t <= 0, negative ones the mirror image t >= 0, so every ray
// sits in n >= 0.
Table rays_table(const GridSpec& grid) {
  Table t;
  t.columns = {"t", "s", "x", "n"};
  for (int k = 0; k <= 16; ++k) {
    const double s = -2.0 + 0.25 * k;
    for (int i = 0; i < grid.count; ++i) {
      const double tau = grid.point(i);
      if (s == 0.0) {
        t.rows.push_back({tau, 0.0, tau, 0.0});
        continue;
      }
      const RayState st = ray_state(-tau, std::fabs(s));
      if (s > 0) {
        t.rows.push_back({st.t + 0.0, s, st.x, st.n});
      } else {
        t.rows.push_back({-st.t, s, -st.x, st.n});
      }
    }
  }
  return t;
}

}  // namespace

void GridSpec::validate() const {
  if (!(lo < hi)) throw std::invalid_argument("grid: need lo < hi");
  if (count < 2 || count > 100000) throw std::invalid_argument("grid: count must be in [2, 100000]");
  if (n < 1) throw std::invalid_argument("grid: n must be >= 1");
}

double GridSpec::point(int i) const {
  if (i == count - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

GridOverride parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw std::invalid_argument("grid must look like lo:hi:count");
  }
  GridOverride g;
  std::size_t used = 0;
  const std::string lo = text.substr(0, a), hi = text.substr(a + 1, b - a - 1),
                    count = text.substr(b + 1);
  g.lo = std::stod(lo, &used);
  if (used != lo.size()) throw std::invalid_argument("grid: bad lo");
  g.hi = std::stod(hi, &used);
  if (used != hi.size()) throw std::invalid_argument("grid: bad hi");
  g.count = std::stoi(count, &used);
  if (used != count.size()) throw std::invalid_argument("grid: bad count");
  return g;
}

TableRow compare_at(double x, int n, const std::vector<Regime>& regimes) {
  return compare_with(poly_at(n), x, regimes);
}

std::optional<FigureId> parse_figure_id(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "xo1") return FigureId::kXO1;
  if (s == "x0" || s == "x=0") return FigureId::kX0;
  if (s == "xlarge") return FigureId::kXLarge;
  if (s == "rays") return FigureId::kRays;
  if (s == "ray0") return FigureId::kRay0;
  if (s == "raylarge") return FigureId::kRayLarge;
  return std::nullopt;
}

std::string figure_name(FigureId id) {
  switch (id) {
    case FigureId::kXO1: return "xo1";
    case FigureId::kX0: return "x0";
    case FigureId::kXLarge: return "xlarge";
    case FigureId::kRays: return "rays";
    case FigureId::kRay0: return "ray0";
    case FigureId::kRayLarge: return "raylarge";
  }
  return "unknown";
}

GridSpec default_grid(FigureId id) {
  switch (id) {
    case FigureId::kXO1: return {GridVariable::kX, 0.1, 3.0, 200, 40};
    case FigureId::kX0: return {GridVariable::kY, 0.0, 5.0, 200, 40};
    case FigureId::kXLarge: return {GridVariable::kX, 1.0, 8.0, 200, 40};
    case FigureId::kRays: return {GridVariable::kX, 0.0, 3.0, 200, 1};
    case FigureId::kRay0: return {GridVariable::kX, 0.0, 10.0, 200, 4};
    case FigureId::kRayLarge: return {GridVariable::kX, -1.0, 1.0, 200, 4};
  }
  throw std::invalid_argument("unknown figure");
}

Table make_figure(FigureId id, const GridOverride& overrides) {
  GridSpec grid = default_grid(id);
  if (overrides.lo) grid.lo = *overrides.lo;
  if (overrides.hi) grid.hi = *overrides.hi;
  if (overrides.count) grid.count = *overrides.count;
  if (overrides.n) grid.n = *overrides.n;
  grid.validate();
  switch (id) {
    case FigureId::kXO1: return comparison_table(grid, {Regime::kPsi1});
    case FigureId::kX0: return small_x_table(grid);
    case FigureId::kXLarge: return comparison_table(grid, {Regime::kPsi1, Regime::kPsi3});
    case FigureId::kRays: return rays_table(grid);
    case FigureId::kRay0:
    case FigureId::kRayLarge: return comparison_table(grid, {Regime::kPsi4});
  }
  throw std::invalid_argument("unknown figure");
}

}  // namespace erfpoly

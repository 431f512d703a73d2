#pragma once

#include <map>
#include <optional>
#include <string>

#include "erfpoly/asymptotics.hpp"
#include "erfpoly/table.hpp"

namespace erfpoly {

enum class GridVariable { kX, kY, kU };

struct GridSpec {
  GridVariable variable = GridVariable::kX;
  double lo = 0.0;
  double hi = 1.0;
  int count = 200;
  int n = 40;

  // lo < hi, 2 <= count <= 100000; throws std::invalid_argument.
  void validate() const;
  double point(int i) const;
};

// "lo:hi:count"
struct GridOverride {
  std::optional<double> lo, hi;
  std::optional<int> count;
  std::optional<int> n;
};
GridOverride parse_grid(const std::string& text);

// exact_log and the estimates are ln of the n!-scaled values; rel_log_error
// is |ln est - ln exact| / |ln exact|.
struct TableRow {
  double abscissa = 0.0;
  std::optional<double> exact_log;
  std::map<std::string, LogValue> estimates;
  std::map<std::string, double> rel_log_error;
};

// Exact value plus the listed estimators at one point.
TableRow compare_at(double x, int n, const std::vector<Regime>& regimes);

enum class FigureId { kXO1, kX0, kXLarge, kRays, kRay0, kRayLarge };

std::optional<FigureId> parse_figure_id(const std::string& name);
std::string figure_name(FigureId id);
GridSpec default_grid(FigureId id);

Table make_figure(FigureId id, const GridOverride& overrides = {});

}  // namespace erfpoly

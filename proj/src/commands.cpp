#include "erfpoly/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "erfpoly/errors.hpp"
#include "erfpoly/polynomial.hpp"

namespace erfpoly {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

char separator(TableFormat f) { return f == TableFormat::kCsv ? ',' : '\t'; }

double log_or_nan(const LogValue& v) { return v.is_zero() ? kNaN : v.log_magnitude; }

std::optional<RegimeEstimate> try_estimate(Regime r, double x, int n) {
  try {
    switch (r) {
      case Regime::kPsi1: return psi1(x, n);
      case Regime::kPsi1Refined: return psi1_refined(x, n);
      case Regime::kPsi2: return psi2(n * x, n);
      case Regime::kPsi3: return psi3(x, n);
      case Regime::kPsi4: return psi4(x, n);
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

double approx_or_nan(double x, int n, SaddleRegime r, Branch b) {
  try {
    return b == Branch::kPositive ? saddle_regime_approx(x, n, r)
                                  : -saddle_regime_approx(-x, n, r);
  } catch (const DomainError&) {
    return kNaN;
  }
}

}  // namespace

std::string cmd_poly(int n, PolyFormat format, const std::optional<std::string>& x) {
  if (n < 0) throw DomainError("poly: n must be >= 0");
  const Polynomial p = poly_at(n);
  if (format == PolyFormat::kCoeffs) return p.to_string();
  if (!x) throw std::invalid_argument("poly: --value needs a point");
  return eval_exact(p, parse_rational(*x)).get_str();
}

std::string cmd_inverf_deriv(int n) {
  if (n < 1) throw DomainError("inverf-deriv: n must be >= 1");
  const ExactScaledValue v = inverf_deriv_at_zero(n);
  if (v.integer_part == 0) return "0";
  return v.symbolic() + " = " + v.decimal17();
}

std::optional<Regime> parse_regime(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Regime r : {Regime::kPsi1, Regime::kPsi1Refined, Regime::kPsi2, Regime::kPsi3, Regime::kPsi4}) {
    if (s == regime_name(r)) return r;
  }
  return std::nullopt;
}

std::string cmd_approx(double x, int n, const std::optional<Regime>& regime, TableFormat format) {
  if (n < 0) throw DomainError("approx: n must be >= 0");
  const char sep = separator(format);
  const LogValue exact = eval_log_scaled(poly_at(n), exact_rational(x));
  const double ln_exact = log_or_nan(exact);

  std::ostringstream os;
  os << "# regime" << sep << "x" << sep << "n" << sep << "sign" << sep << "ln_estimate" << sep
     << "ln_exact" << sep << "rel_log_error\n";
  auto emit = [&](const std::string& label, const RegimeEstimate& e) {
    const double ln_est = log_or_nan(e.value);
    const double err = std::isnan(ln_exact) || ln_exact == 0.0 || std::isnan(ln_est)
                           ? kNaN
                           : std::fabs(ln_est - ln_exact) / std::fabs(ln_exact);
    os << label << sep << format_double(x) << sep << n << sep << e.value.sign << sep
       << format_double(ln_est) << sep << format_double(ln_exact) << sep << format_double(err)
       << '\n';
  };

  if (regime) {
    const auto e = try_estimate(*regime, x, n);
    if (!e) throw DomainError("approx: " + std::string(regime_name(*regime)) + " is not defined at this point");
    emit(std::string(regime_name(*regime)), *e);
    return os.str();
  }
  for (Regime r : {Regime::kPsi1, Regime::kPsi1Refined, Regime::kPsi2, Regime::kPsi3, Regime::kPsi4}) {
    if (const auto e = try_estimate(r, x, n)) emit(std::string(regime_name(r)), *e);
  }
  const RegimeEstimate a = auto_estimate(x, n);
  emit("auto:" + std::string(regime_name(a.regime)), a);
  return os.str();
}

std::string cmd_saddle(double x, double n, Branch branch, TableFormat format) {
  const SaddleRoot root = solve_saddle(x, n, branch);
  const char sep = separator(format);
  std::ostringstream os;
  os << "# x" << sep << "n" << sep << "branch" << sep << "s" << sep << "residual" << sep
     << "s_series" << sep << "s_large_x" << sep << "s_fixed_x" << sep << "s_small_x" << sep
     << "s_sqrt_log\n";
  os << format_double(x) << sep << format_double(n) << sep
     << (branch == Branch::kPositive ? "positive" : "negative") << sep << format_double(root.s)
     << sep << format_double(root.residual);
  const bool integral = n >= 1.0 && n == std::floor(n) && n < 1e9;
  const int ni = integral ? static_cast<int>(n) : 0;
  double series = kNaN;
  if (integral && x != 0.0) {
    series = branch == Branch::kPositive ? saddle_series_large_x(x, ni) : -saddle_series_large_x(-x, ni);
  }
  os << sep << format_double(series);
  for (SaddleRegime r : {SaddleRegime::kLargeX, SaddleRegime::kFixedX, SaddleRegime::kSmallX,
                         SaddleRegime::kSqrtLog}) {
    os << sep << format_double(integral ? approx_or_nan(x, ni, r, branch) : kNaN);
  }
  os << '\n';
  return os.str();
}

std::string cmd_figure(FigureId id, const GridOverride& overrides, TableFormat format) {
  return table_to_string(make_figure(id, overrides), format);
}

}  // namespace erfpoly

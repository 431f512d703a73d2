#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "erfpoly/commands.hpp"
#include "erfpoly/errors.hpp"
#include "erfpoly/verify.hpp"

using namespace erfpoly;

namespace {

struct Globals {
  std::string out;
  std::string grid;
  std::optional<int> n;
  std::string format = "csv";
};

int emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return kExitOk;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << g.out << " for writing\n";
    return kExitUsage;
  }
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
  return f ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and asymptotic evaluation of the inverse-erf derivative polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--grid", g.grid, "figure grid as lo:hi:count");
  app.add_option("--n", g.n, "index n");
  app.add_option("--format", g.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

  auto* poly = app.add_subcommand("poly", "coefficients or exact value of P_n");
  int poly_n = 0;
  bool coeffs = false;
  std::optional<std::string> value;
  poly->add_option("index", poly_n, "n")->required();
  auto* coeffs_opt = poly->add_flag("--coeffs", coeffs, "print coefficients c0 .. cn");
  poly->add_option("--value", value, "exact P_n(x) at a rational or decimal x")->excludes(coeffs_opt);

  auto* deriv = app.add_subcommand("inverf-deriv", "n-th derivative of inverf at 0");
  int deriv_n = 1;
  deriv->add_option("index", deriv_n, "n >= 1")->required();

  auto* approx = app.add_subcommand("approx", "asymptotic estimates of P_n(x)/n!");
  double approx_x = 0.0;
  int approx_n = 0;
  std::string regime;
  approx->add_option("--x", approx_x)->required();
  approx->add_option("--n", approx_n);
  approx->add_option("--regime", regime, "psi1, psi1_refined, psi2, psi3 or psi4");

  auto* saddle = app.add_subcommand("saddle", "solve the saddle equation for s");
  double saddle_x = 0.0, saddle_n = 0.0;
  std::string branch = "positive";
  saddle->add_option("--x", saddle_x)->required();
  saddle->add_option("--n", saddle_n);
  saddle->add_option("--branch", branch)->check(CLI::IsMember({"positive", "negative"}));

  auto* figure = app.add_subcommand("figure", "write a figure table");
  std::string figure_id;
  figure->add_option("id", figure_id, "xo1, x0, xlarge, rays, ray0 or raylarge")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "poly, special, asymp, ray, oracle or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const TableFormat fmt = *parse_table_format(g.format);
  try {
    if (*poly) {
      if (!coeffs && !value) throw std::invalid_argument("poly: give --coeffs or --value X");
      return emit(g, cmd_poly(poly_n, coeffs ? PolyFormat::kCoeffs : PolyFormat::kValue, value));
    }
    if (*deriv) return emit(g, cmd_inverf_deriv(deriv_n));
    if (*approx) {
      if (approx->count("--n") == 0) {
        if (!g.n) throw std::invalid_argument("approx: --n is required");
        approx_n = *g.n;
      }
      std::optional<Regime> r;
      if (!regime.empty()) {
        r = parse_regime(regime);
        if (!r) throw std::invalid_argument("approx: unknown regime " + regime);
      }
      return emit(g, cmd_approx(approx_x, approx_n, r, fmt));
    }
    if (*saddle) {
      if (saddle->count("--n") == 0) {
        if (!g.n) throw std::invalid_argument("saddle: --n is required");
        saddle_n = *g.n;
      }
      return emit(g, cmd_saddle(saddle_x, saddle_n,
                                branch == "positive" ? Branch::kPositive : Branch::kNegative, fmt));
    }
    if (*figure) {
      const auto id = parse_figure_id(figure_id);
      if (!id) throw std::invalid_argument("figure: unknown id " + figure_id);
      GridOverride ov = g.grid.empty() ? GridOverride{} : parse_grid(g.grid);
      if (g.n) ov.n = g.n;
      return emit(g, cmd_figure(*id, ov, fmt));
    }
    if (*verify) {
      const auto s = parse_suite(suite);
      if (!s) throw std::invalid_argument("verify: unknown suite " + suite);
      const auto reports = run_suite(*s);
      const int rc = emit(g, format_report(reports));
      if (rc != kExitOk) return rc;
      for (const auto& r : reports) {
        if (!r.passed()) return kExitVerifyFailed;
      }
      return kExitOk;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

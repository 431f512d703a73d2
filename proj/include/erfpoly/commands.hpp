#pragma once

// Subcommand bodies for the erfpoly CLI, kept apart from argument parsing
// so they can be tested in-process.

#include <optional>
#include <string>

#include "erfpoly/asymptotics.hpp"
#include "erfpoly/figures.hpp"
#include "erfpoly/saddle.hpp"
#include "erfpoly/table.hpp"

namespace erfpoly {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitConvergence = 3,
};

enum class PolyFormat { kCoeffs, kValue };

// Coefficients "c0 c1 ... cn", or the exact value of P_n(x) as "p" or "p/q".
std::string cmd_poly(int n, PolyFormat format, const std::optional<std::string>& x);

// "k * (pi/2)^(m/2) / sqrt(2) = <17 digits>" or "0".
std::string cmd_inverf_deriv(int n);

// One row per regime (all applicable ones when `regime` is empty, plus the
// automatic choice), with the exact value alongside.
std::string cmd_approx(double x, int n, const std::optional<Regime>& regime, TableFormat format);
std::optional<Regime> parse_regime(const std::string& name);

std::string cmd_saddle(double x, double n, Branch branch, TableFormat format);

std::string cmd_figure(FigureId id, const GridOverride& overrides, TableFormat format);

}  // namespace erfpoly

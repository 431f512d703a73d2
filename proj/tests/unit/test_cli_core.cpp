#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <set>
#include <cmath>
#include <sstream>
#include <string>

#include "erfpoly/commands.hpp"
#include "erfpoly/errors.hpp"
#include "erfpoly/figures.hpp"
#include "erfpoly/table.hpp"
#include "erfpoly/verify.hpp"

using namespace erfpoly;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_double(0.0) == "0e0");
  CHECK(format_double(0.15) == "1.5e-1");
  CHECK(format_double(2000.0) == "2e3");
  CHECK(format_double(-1.0 / 3.0) == "-3.333333333333333e-1");
  CHECK(format_double(NAN) == "nan");
  CHECK(format_double(INFINITY) == "inf");
  CHECK(format_double17(1.0) == "1.0000000000000000e0");
  for (double v : {M_PI, 1e-300, 6.02214076e23, -0.1}) {
    const std::string s = format_double(v);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
}

TEST_CASE("table output") {
  Table t{{"a", "b"}, {{1.0, 0.5}, {NAN, -2.0}}};
  CHECK(table_to_string(t, TableFormat::kCsv) == "# a,b\n1e0,5e-1\nnan,-2e0\n");
  CHECK(table_to_string(t, TableFormat::kTsv) == "# a\tb\n1e0\t5e-1\nnan\t-2e0\n");
  CHECK(parse_table_format("tsv") == TableFormat::kTsv);
  CHECK_FALSE(parse_table_format("xml"));
}

TEST_CASE("grids") {
  const GridOverride g = parse_grid("0.5:2:31");
  CHECK(*g.lo == 0.5);
  CHECK(*g.hi == 2.0);
  CHECK(*g.count == 31);
  CHECK_THROWS(parse_grid("1:2"));
  CHECK_THROWS(parse_grid("a:b:c"));
  GridSpec bad{GridVariable::kX, 2.0, 1.0, 10, 4};
  CHECK_THROWS(bad.validate());
  bad = {GridVariable::kX, 0.0, 1.0, 200000, 4};
  CHECK_THROWS(bad.validate());
  const GridSpec ok{GridVariable::kX, 0.0, 1.0, 11, 4};
  CHECK(ok.point(0) == 0.0);
  CHECK(ok.point(10) == 1.0);
}

TEST_CASE("figure tables") {
  const Table xo1 = make_figure(FigureId::kXO1);
  CHECK(xo1.rows.size() == 200);
  CHECK(xo1.columns[0] == "x");
  CHECK(xo1.columns[1] == "ln_exact");
  CHECK(xo1.columns[2] == "ln_psi1");
  const Table x0 = make_figure(FigureId::kX0);
  CHECK(x0.columns.front() == "y");
  CHECK(x0.columns.back() == "ratio");
  const Table rays = make_figure(FigureId::kRays);
  CHECK(rays.columns == std::vector<std::string>{"t", "s", "x", "n"});
  std::set<double> launches;
  for (const auto& r : rays.rows) launches.insert(r[1]);
  CHECK(launches.size() == 17);
  CHECK(*launches.begin() == -2.0);
  CHECK(*launches.rbegin() == 2.0);
  for (const auto& r : rays.rows) CHECK(r[2] == r[0] + r[1]);
  const Table r0 = make_figure(FigureId::kRay0, parse_grid("0:10:50"));
  CHECK(r0.rows.size() == 50);
  CHECK(parse_figure_id("RAYLARGE") == FigureId::kRayLarge);
  CHECK_FALSE(parse_figure_id("nope"));
}

TEST_CASE("figures are byte-identical across runs") {
  for (FigureId id : {FigureId::kXO1, FigureId::kX0, FigureId::kXLarge, FigureId::kRays, FigureId::kRay0,
                      FigureId::kRayLarge}) {
    CHECK(cmd_figure(id, {}, TableFormat::kCsv) == cmd_figure(id, {}, TableFormat::kCsv));
  }
}

TEST_CASE("sign-zero rows print nan") {
  const auto ls = lines(cmd_figure(FigureId::kRayLarge, parse_grid("-1:1:3"), TableFormat::kCsv));
  REQUIRE(ls.size() == 4);
  CHECK(ls[2].rfind("0e0,", 0) == 0);
  CHECK(ls[2].find("nan") == std::string::npos);  // P_4(0) = 7 is nonzero
  GridOverride odd = parse_grid("-1:1:3");
  odd.n = 5;
  const auto lo = lines(cmd_figure(FigureId::kRay0, odd, TableFormat::kCsv));
  CHECK(lo[2] == "0e0,nan,nan,nan");
}

TEST_CASE("poly and inverf-deriv commands") {
  CHECK(cmd_poly(3, PolyFormat::kCoeffs, std::nullopt) == "0 7 0 6");
  CHECK(cmd_poly(0, PolyFormat::kCoeffs, std::nullopt) == "1");
  CHECK(cmd_poly(4, PolyFormat::kValue, "2") == "575");
  CHECK(cmd_poly(2, PolyFormat::kValue, "1/3") == "11/9");
  CHECK_THROWS(cmd_poly(2, PolyFormat::kValue, std::nullopt));
  CHECK_THROWS_AS(cmd_poly(1001, PolyFormat::kCoeffs, std::nullopt), ResourceError);
  CHECK(cmd_inverf_deriv(1) == "1 * (pi/2)^(1/2) / sqrt(2) = 8.8622692545275801e-1");
  CHECK(cmd_inverf_deriv(2) == "0");
  CHECK(cmd_inverf_deriv(5).rfind("7 * (pi/2)^(5/2) / sqrt(2) = ", 0) == 0);
}

TEST_CASE("approx and saddle commands") {
  const auto all = lines(cmd_approx(1.0, 40, std::nullopt, TableFormat::kCsv));
  CHECK(all.front().rfind("# regime,", 0) == 0);
  CHECK(all.back().rfind("auto:psi1,", 0) == 0);
  const auto one = lines(cmd_approx(1.0, 40, parse_regime("psi3"), TableFormat::kTsv));
  REQUIRE(one.size() == 2);
  CHECK(one[1].rfind("psi3\t", 0) == 0);
  CHECK_THROWS_AS(cmd_approx(-1.0, 40, Regime::kPsi1, TableFormat::kCsv), DomainError);
  const auto sd = lines(cmd_saddle(1.0, 40, Branch::kPositive, TableFormat::kCsv));
  REQUIRE(sd.size() == 2);
  CHECK(sd[1].find(",positive,") != std::string::npos);
}

TEST_CASE("verification suites") {
  for (Suite s : {Suite::kPoly, Suite::kSpecial, Suite::kRay, Suite::kOracle}) {
    for (const auto& rep : run_suite(s)) CHECK_MESSAGE(rep.passed(), format_report({rep}));
  }
  CHECK(parse_suite("ALL") == Suite::kAll);
  const std::string text = format_report(run_suite(Suite::kPoly));
  CHECK(text.find("PASS  [poly]") != std::string::npos);
}

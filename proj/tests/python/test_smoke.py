import math

import pytest

import erfpoly


def test_polynomials():
    assert erfpoly.poly_coeffs(4) == [7, 0, 46, 0, 24]
    assert erfpoly.poly_value(4, "2") == "575"
    assert erfpoly.poly_coeffs(30)[-1] == math.factorial(30)
    sign, lg = erfpoly.log_scaled(4, 2.0)
    assert sign == 1
    assert lg == pytest.approx(math.log(575 / 24), rel=1e-15)


def test_special_functions():
    assert erfpoly.erf(1.0) == pytest.approx(math.erf(1.0), rel=1e-15)
    assert erfpoly.inverf(0.5) == pytest.approx(0.4769362762044699, rel=1e-15)
    assert erfpoly.lambert_w0(1.0) == pytest.approx(0.5671432904097838, rel=1e-15)
    with pytest.raises(erfpoly.DomainError):
        erfpoly.inverf(2.0)


def test_estimates_and_saddle():
    exact = erfpoly.log_scaled(40, 1.0)[1]
    for regime in ("psi1", "psi1_refined", "psi3", "psi4"):
        sign, lg = erfpoly.estimate(regime, 1.0, 40)
        assert sign == 1
        assert abs(lg - exact) / exact < 0.05
    s = erfpoly.solve_saddle(1.0, 40)
    assert s > 1.0
    assert erfpoly.solve_saddle(-1.0, 40, negative=True) == pytest.approx(-s, rel=1e-12)


def test_oracle_and_rays():
    assert erfpoly.contour_oracle(1.0, 2) == pytest.approx(1.5, rel=1e-8)
    st = erfpoly.ray_state(0.0, 2.0)
    assert st["n"] == 0.0 and st["J"] == pytest.approx(2.0)


def test_figure_and_verify():
    columns, rows = erfpoly.figure("xo1")
    assert columns[:3] == ["x", "ln_exact", "ln_psi1"]
    assert len(rows) == 200
    checks = erfpoly.verify("poly")
    assert checks and all(c[4] for c in checks)

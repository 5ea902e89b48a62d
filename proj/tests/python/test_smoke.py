"""Smoke tests for the python bindings.

The build runs these with PYTHONPATH pointing at the compiled module's
directory (INVOLUTIONS_NO_PKG=1), so import `_involutions` directly there;
an installed `involutions` package re-exports the same names.
"""

import math
import os

if os.environ.get("INVOLUTIONS_NO_PKG"):
    import _involutions as inv
else:
    import involutions as inv


def test_catalog_roundtrip():
    names = inv.catalog_names()
    assert "rational" in names and "parabolic" in names
    h = inv.catalog("rational", [2.0])
    x = 0.3
    assert math.isclose(h(h(x)), x, rel_tol=0, abs_tol=1e-12)
    rep = inv.verify_involution(h, 128, 1e-9)
    assert rep.passed()


def test_construction_from_even_function():
    res = inv.from_even_function(inv.even_preset("y2_over_8"))
    h = res.h
    assert h.J.lo == -1.0 and h.J.hi == 3.0
    # closed form: h(x) = x + 4 - 4 sqrt(1 + x)
    assert math.isclose(h(0.5), 0.5 + 4 - 4 * math.sqrt(1.5), abs_tol=1e-10)


def test_isochrony():
    V = inv.potential_from_involution(inv.catalog("rational", [1.0]), 1.0)
    energies = inv.admissible_energies(V, 4)
    rep = inv.verify_isochrony(V, energies, 1e-6)
    assert rep.passed()
    assert math.isclose(rep.target, 2 * math.pi, abs_tol=1e-15)


def test_stability_verdicts():
    xs = [i / 100 for i in range(-40, 41) if i != 0]
    assert inv.stability_condition(inv.system_preset("const1"), xs, 1e-8).stable
    assert not inv.stability_condition(inv.system_preset("one_plus_x2"), xs, 1e-8).stable


def test_fde():
    sol = inv.fde_solve(0.5, 1.0, -0.5, 4.0)
    t = 1.5
    assert math.isclose(sol.eval(t), inv.fde_closed_form(0.5, 1.0, t), abs_tol=1e-7)
    assert inv.fde_residual_check(sol, 0.5) < 1e-6


def test_domain_error():
    h = inv.catalog("parabolic")
    try:
        h(5.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected a domain error outside (-1, 3)")

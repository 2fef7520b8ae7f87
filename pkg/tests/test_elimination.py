from fractions import Fraction

import pytest

from mwlat.catalog.build import load_entry
from mwlat.elimination import (SectionSystem, coefficient_equations, derivePhi, leading_ratio, systemFor,
                               verifyFactorization)
from mwlat.errors import BudgetError, DegenerateSystemError, EliminationError
from mwlat.polyring import MultiPoly, UniPoly, normalizePrimitive


def _product(ps):
    acc = ps[0]
    for p in ps[1:]:
        acc = acc * p
    return acc


def test_m3_derivation_matches_exactly():
    phi = load_entry(3).phiData["phi_u"]
    res = derivePhi(systemFor(3), phi)
    assert res.matchedFactor == phi
    assert res.normalized == normalizePrimitive(phi)
    assert res.cofactor.degree() == 0
    assert [s.var for s in res.steps] == ["c", "a"]


def test_m4_derivation():
    a = UniPoly.gen("a")
    target = a ** 24 + 17280 * a ** 12 - 110592
    res = derivePhi(systemFor(4), target)
    assert res.matchedFactor == target
    assert normalizePrimitive(res.matchedFactor * res.cofactor) == res.normalized
    # the monomial factor divided out along the way is recorded
    assert any(s.stripped for s in res.steps)


def test_m5_derivation():
    d = load_entry(5).phiData
    res = derivePhi(systemFor(5), d["phi1_U"] * d["phi2_U"])
    assert res.matchedFactor is not None
    assert res.normalized.degree() == 80 and res.cofactor.degree() == 40


def test_m6_derivation():
    fs = load_entry(6).phiData["phi6_factors_U"]
    target = _product(fs).with_var("u").substitute_power(12)
    res = derivePhi(systemFor(6), target)
    assert res.matchedFactor is not None
    assert any(s.discarded for s in res.steps) or res.cofactor.degree() > 0


def test_m9_needs_deep():
    with pytest.raises(BudgetError):
        derivePhi(systemFor(9))


def test_budget_is_enforced():
    d = load_entry(5).phiData
    with pytest.raises(BudgetError):
        derivePhi(systemFor(5), d["phi1_U"], budget=3)


def test_unknown_system():
    with pytest.raises(EliminationError):
        systemFor(7)


def test_order_must_cover_variables():
    s = SectionSystem.from_strings(0, ("x", "y"), ["x - y", "y^2 - 2"], [], "y")
    with pytest.raises(EliminationError):
        derivePhi(s)


def test_linear_substitution_and_degenerate_systems():
    s = SectionSystem.from_strings(0, ("x", "y"), ["x - y - 1", "x^2 - 4"], ["x"], "y")
    res = derivePhi(s)
    assert res.normalized == UniPoly([-3, 2, 1], "y")
    assert res.steps[0].mode == "substitute"
    s = SectionSystem.from_strings(0, ("x", "y"), ["x^2 - 1", "x^2 - 4"], ["x"], "y")
    with pytest.raises(DegenerateSystemError):
        derivePhi(s)


def test_common_component_is_recorded():
    s = SectionSystem.from_strings(0, ("x", "y"), ["(x - y)*(x^2 + 1)", "(x - y)*(x^2 - y)"], ["x"], "y")
    res = derivePhi(s)
    assert res.steps[0].discarded
    # x^2 + 1 and x^2 - y share both roots x = +-i when y = -1
    assert res.normalized == UniPoly([1, 2, 1], "y")


def test_verify_factorization():
    u = UniPoly.gen("u")
    assert verifyFactorization([u - 1, u + 1], u ** 2 - 1)
    assert verifyFactorization([u - 1, u + 1], 3 * u ** 2 - 3, 3)
    assert not verifyFactorization([u - 1, u + 2], u ** 2 - 1)
    assert not verifyFactorization([], u)
    assert leading_ratio([u - 1, u + 1], 5 * u ** 2 - 5) == 5
    assert leading_ratio([u - 1], u ** 2) is None


def test_coefficient_equations_m3():
    eqs = coefficient_equations(3, ["a", "b"], ["c", "d"])
    # (c + d t)^2 - (a + b t)^3 - t^3 - 1
    assert len(eqs) == 4
    assert MultiPoly.parse("c^2 - a^3 - 1", eqs[0].vars) in eqs

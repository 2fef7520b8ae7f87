from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mwlat.errors import ReductionError
from mwlat.polyring import (NEG_INF, MultiPoly, UniPoly, exact_quotient, normalizePrimitive, poly_gcd,
                            polyGcd, reduceByPower, resultant)

coeff = st.fractions(min_value=-6, max_value=6, max_denominator=4)
upoly = st.lists(coeff, max_size=7).map(lambda cs: UniPoly(cs, "x"))
nonzero_upoly = upoly.filter(bool)


@given(upoly, upoly, upoly)
def test_univariate_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniPoly([], "x")


@given(upoly, nonzero_upoly)
def test_division_with_remainder(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree() < b.degree()


@given(nonzero_upoly, nonzero_upoly, nonzero_upoly)
def test_gcd_contains_planted_factor(a, b, g):
    h = polyGcd(a * g, b * g)
    assert g.divides(h) if g.degree() > 0 else True
    assert h.divides(a * g) and h.divides(b * g)


def test_zero_degree_convention():
    z = UniPoly([], "t")
    assert z.degree() == NEG_INF
    assert min(3 - z.degree(), 1) == 1


def test_normalize_primitive():
    p = UniPoly([Fraction(-1, 2), 0, Fraction(3, 4)], "u")
    assert normalizePrimitive(p).coeffs == (-2, 0, 3)
    assert normalizePrimitive(p * -5) == normalizePrimitive(p)


@given(st.lists(coeff, max_size=5), st.integers(1, 6))
def test_reduce_by_power_round_trip(cs, k):
    P = UniPoly(cs, "U")
    expanded = P.with_var("u").substitute_power(k)
    assert reduceByPower(expanded, k, "U") == P


def test_reduce_by_power_rejects_bad_support():
    u = UniPoly.gen("u")
    with pytest.raises(ReductionError):
        reduceByPower(u ** 6 + u, 6)
    with pytest.raises(ReductionError):
        reduceByPower(u, 0)


def test_compose_shift_reverse():
    t = UniPoly.gen("t")
    p = t ** 2 + 3 * t + 1
    assert p.compose(t + 1) == p.shift(1)
    assert p.reverse(2) == p
    # t^3 p(1/t) for p = t^2 + 2
    assert (t ** 2 + 2).reverse(3).coeffs == (0, 1, 0, 2)
    assert p.derivative() == 2 * t + 3


# multivariate

VARS = ("x", "y", "z")


def test_parse_and_arithmetic():
    p = MultiPoly.parse("x^2*y - 3*y + 1/2", VARS)
    q = MultiPoly.parse("y - 1", VARS)
    assert p.degree("x") == 2 and p.degree("y") == 1 and not p.involves("z")
    assert (p * q).degree() == 4
    assert exact_quotient(p * q, q) == p
    assert p.evaluate({"x": 2, "y": 1}) == Fraction(3, 2)
    assert MultiPoly.from_json(p.to_json()) == p


def test_substitute_linear_solution():
    p = MultiPoly.parse("x^2 + y", VARS)
    y = MultiPoly.parse("-x^2 + z", VARS)
    assert p.substitute({"y": y}) == MultiPoly.parse("z", VARS)


def test_multivariate_gcd():
    g = MultiPoly.parse("x*y + z - 2", VARS)
    a = MultiPoly.parse("x^2 - y", VARS) * g
    b = MultiPoly.parse("z^3 + x", VARS) * g
    h = poly_gcd(a, b)
    assert exact_quotient(h, g).is_constant()


def test_resultant_of_univariate_pair():
    u = ("x",)
    p = MultiPoly.parse("x^2 - 2", u)
    q = MultiPoly.parse("x^2 - 3", u)
    assert resultant(p, q, "x").constant_value() != 0
    assert not resultant(p, p * MultiPoly.parse("x + 1", u), "x")


small_int = st.integers(-4, 4)
bivariate = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 2)), small_int, min_size=1, max_size=6)


@settings(max_examples=150)
@given(bivariate, bivariate, st.fractions(min_value=-3, max_value=3, max_denominator=3),
       st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_resultant_vanishes_at_planted_common_root(pt, qt, x0, y0):
    vs = ("x", "y")
    p = MultiPoly(vs, {e: Fraction(c) for e, c in pt.items() if c})
    q = MultiPoly(vs, {e: Fraction(c) for e, c in qt.items() if c})
    x = MultiPoly.gen(vs, "x")
    # force x-degree at least one and a common zero at (x0, y0)
    p = p + x ** 2 + x
    q = q + x ** 3 - 2 * x
    p = p - MultiPoly.constant(vs, p.evaluate({"x": x0, "y": y0}))
    q = q - MultiPoly.constant(vs, q.evaluate({"x": x0, "y": y0}))
    r = resultant(p, q, "x")
    assert not r.involves("x")
    assert r.evaluate({"x": 0, "y": y0}) == 0

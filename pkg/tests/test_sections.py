from fractions import Fraction

import pytest

from mwlat.catalog import fields
from mwlat.catalog.build import load_entry
from mwlat.errors import DomainError, SpecializationError
from mwlat.polyring import UniPoly
from mwlat.sections import (Section, chordAdd, chordSubtract, negate, onCurve, shift_section, specialize,
                            substitute_t_power, zetaTwist)

CATALOG_WITH_POINTS = (2, 3, 4, 6, 8, 10)


@pytest.mark.parametrize("m", CATALOG_WITH_POINTS)
def test_catalog_points_on_curve(m):
    e = load_entry(m)
    assert e.points and all(onCurve(p.section) for p in e.points)
    assert all(onCurve(p.section) for p in e.extraPoints)


@pytest.mark.parametrize("m", [3, 6])
def test_printed_errata_points_are_off_curve(m):
    e = load_entry(m)
    assert e.errataPoints and not any(onCurve(p.section) for p in e.errataPoints)


def test_simple_points():
    assert onCurve(Section.make(2, [-1], [0, 1]))
    assert not onCurve(Section.make(2, [1], [0, 1]))
    assert onCurve(Section.zero(4))


def test_scaled_representation():
    # (-1, t) written with u = 2: xNum = u^2 x, yNum = u^3 y
    P = Section.make(2, [-4], [0, 8], u=2)
    assert onCurve(P)
    assert P == Section.make(2, [-1], [0, 1])
    assert not P.is_polynomial_form()


def test_negation_and_twist():
    e = load_entry(2)
    P = e.points[0].section
    assert onCurve(negate(P)) and negate(negate(P)) == P
    T = zetaTwist(P)
    assert onCurve(T) and zetaTwist(T, 2) == P and zetaTwist(P, 3) == P


def test_twist_needs_zeta3():
    with pytest.raises(DomainError):
        zetaTwist(Section.make(2, [-1], [0, 1]))


def test_chord_arithmetic_m2():
    e = load_entry(2)
    q0, q2 = e.points[0].section, e.points[1].section
    extra = {p.name: p.section for p in e.extraPoints}
    d = chordSubtract(q2, q0)
    assert onCurve(d) and d == extra["P2"]
    s = chordAdd(q0, q2)
    assert onCurve(s)
    assert chordSubtract(q0, q0).isZero
    assert chordAdd(q0, negate(q0)).isZero
    assert chordAdd(Section.zero(2, q0.field), q0) == q0


def test_chord_rejects_doubling_and_mixed_surfaces():
    P = Section.make(2, [-1], [0, 1])
    with pytest.raises(DomainError):
        chordAdd(P, P)
    with pytest.raises(DomainError):
        chordAdd(P, Section.make(3, [-1], [1]))


def test_specialisation_m3():
    e = load_entry(3)
    z3 = fields.k3()["zeta3"]
    vals = [specialize(p.section, "atZero_b_over_d", shift=-1) for p in e.points]
    assert vals[1] == 1 and vals[0] == z3 ** 2
    assert specialize(e.points[0].section, "atInfinity_leadX") == e.points[0].section.x.coeff(1)
    with pytest.raises(SpecializationError):
        specialize(e.points[0].section, "nowhere")
    with pytest.raises(SpecializationError):
        specialize(Section.zero(3), "atZero_b_over_d")


def test_specialisation_zero_denominator():
    P = Section.make(2, [-1], [0, 1])
    with pytest.raises(SpecializationError):
        specialize(P, "atZero_b_over_d")


def test_base_change_substitution():
    P = Section.make(2, [-1], [0, 1])
    Q = substitute_t_power(P, 5)
    assert Q.m == 10 and onCurve(Q) and Q.y == UniPoly.monomial(5, 1)
    with pytest.raises(DomainError):
        substitute_t_power(P, 0)


def test_shift_section():
    P = Section.make(2, [-1], [0, 1])
    S = shift_section(P, Fraction(1))
    # on y^2 = x^3 + (t + 1)^2 + 1
    assert S.y * S.y == S.x ** 3 + UniPoly([1, 1]) ** 2 + 1


def test_json_round_trip():
    for m in CATALOG_WITH_POINTS:
        e = load_entry(m)
        for p in e.points:
            assert Section.from_json(p.section.to_json(), e.field) == p.section

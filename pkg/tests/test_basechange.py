from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mwlat.basechange import (BaseChangeSpec, F6Point, baseChange, compareUpToBasis, directSumGram, e12ToF6,
                              f6ToE12, onF6, scaledGramCheck, tildeAutomorphism, transformIdentity,
                              transform_scalars)
from mwlat.catalog import fields
from mwlat.catalog.build import load_entry
from mwlat.catalog.points import PRINTED_GRAMS, RAW_PRINTED_GRAMS
from mwlat.errors import DomainError, InputError, ShapeError
from mwlat.exact import RatMatrix, ratDet
from mwlat.heights import formula_for, gramMatrix
from mwlat.polyring import UniPoly
from mwlat.sections import Section, onCurve, substitute_t_power

F = Fraction


def test_base_change_spec():
    assert BaseChangeSpec(4, 2).targetM == 8
    with pytest.raises(DomainError):
        BaseChangeSpec(4, 0)


@pytest.mark.parametrize("m,n", [(4, 2), (2, 5)])
def test_scale_law(m, n):
    rep = scaledGramCheck(load_entry(m).sections(), n, formula_for(m), formula_for(m * n))
    assert rep.ok and rep.target == rep.source * n


def test_m8_report():
    rep = scaledGramCheck(load_entry(4).sections(), 2, formula_for(4), formula_for(8))
    assert ratDet(rep.target) == F(64, 3)
    assert compareUpToBasis(rep.target, PRINTED_GRAMS[8]).ok


def test_m10_block_structure():
    rep = scaledGramCheck(load_entry(2).sections(), 5, formula_for(2), formula_for(10))
    M = directSumGram([rep.target, RAW_PRINTED_GRAMS[5] * 2])
    assert M == PRINTED_GRAMS[10]
    assert ratDet(M) == F(2 ** 8 * 5 ** 2, 3)


def test_m5_matrix_level_scale():
    # the t^2 images of the E8 generators span L5[2], Gram 2 M5
    G = RAW_PRINTED_GRAMS[5] * 2
    assert ratDet(G) == 2 ** 8 and {G[i, i] for i in range(8)} == {4}


def test_base_change_rejects_off_curve():
    with pytest.raises(InputError):
        baseChange(Section.make(2, [1], [0, 1]), 2)
    P = baseChange(Section.make(2, [-1], [0, 1]), 3)
    assert P.m == 6 and onCurve(P)


def test_direct_sum_needs_symmetric_blocks():
    with pytest.raises(ShapeError):
        directSumGram([RatMatrix([[1, 2], [0, 1]])])


def test_compare_reports_failure():
    assert not compareUpToBasis(PRINTED_GRAMS[4], PRINTED_GRAMS[4] * 2).ok


def test_tilde_on_catalog_points():
    for P in load_entry(6).sections():
        T = tildeAutomorphism(P, 1)
        assert onCurve(T) and tildeAutomorphism(T, 1) == P


qcoef = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(qcoef, max_size=2 * n + 1), st.lists(qcoef, max_size=3 * n + 1))))
def test_tilde_is_an_involution(data):
    n, xs, ys = data
    P = Section.make(6 * n, xs, ys)
    assert tildeAutomorphism(tildeAutomorphism(P, n), n) == P


def test_tilde_shape_errors():
    with pytest.raises(ShapeError):
        tildeAutomorphism(Section.make(5, [0], [1]), 1)
    with pytest.raises(ShapeError):
        tildeAutomorphism(Section.make(6, [0, 0, 0, 1], [1]), 1)
    assert tildeAutomorphism(Section.zero(6), 1).isZero


def test_f6_transform():
    K = fields.k6().field
    ok = transformIdentity(K)
    assert ok.identity_holds and ok.target_sign == 1 and ok.a_cubed == ok.b_squared == 1
    printed = transformIdentity(K, printed=True)
    assert printed.target_sign == -1
    a, b = transform_scalars(K, printed=True)
    assert a ** 3 == -1 and b ** 2 == -1


def test_f6_points_round_trip():
    K = fields.k6().field
    # E12 points from base change of E2 and E6 points
    sources = [substitute_t_power(Section.make(2, [-1], [0, 1]), 6)]
    sources += [substitute_t_power(P, 2) for P in load_entry(6).sections()[:3]]
    for Q in sources:
        Q = Section(12, K, UniPoly([K(c) for c in Q.x.coeffs], "t", K),
                    UniPoly([K(c) for c in Q.y.coeffs], "t", K), K.one())
        assert onCurve(Q)
        P = e12ToF6(Q)
        assert onF6(P)
        assert f6ToE12(P) == Q


def test_f6_rejects_off_surface_points():
    K = fields.k6().field
    bad = F6Point(K, UniPoly([K(1)], "t", K), 0, UniPoly([K(1)], "t", K), 0)
    assert not onF6(bad)
    with pytest.raises(InputError):
        f6ToE12(bad)

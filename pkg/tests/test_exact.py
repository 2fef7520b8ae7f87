from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mwlat.errors import ShapeError
from mwlat.exact import (RatMatrix, bareiss_det_int, block_diagonal, is_positive_definite, leadingMinors,
                         minimum_and_kissing, quadratic_form, rat_to_str, ratDet, short_vectors, to_rational)
from mwlat.catalog.points import PRINTED_GRAMS

F = Fraction


def gauss_det(rows):
    a = [[F(x) for x in r] for r in rows]
    n, det = len(a), F(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i]), None)
        if piv is None:
            return F(0)
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            det = -det
        det *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            for c in range(i, n):
                a[r][c] -= f * a[i][c]
    return det


def test_to_rational_and_str():
    assert to_rational("-3/6") == F(-1, 2)
    assert to_rational(4) == 4
    assert rat_to_str(F(2, 3)) == "2/3"
    assert rat_to_str(F(5)) == "5"


small = st.integers(-9, 9)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_gaussian_elimination(rows):
    assert bareiss_det_int(rows) == gauss_det(rows)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=n, max_size=n),
    min_size=n, max_size=n)))
def test_rational_det(rows):
    assert ratDet(RatMatrix(rows)) == gauss_det(rows)


def test_matrix_basics():
    A = RatMatrix([[2, -1], [-1, 2]])
    assert A.is_symmetric() and is_positive_definite(A)
    assert leadingMinors(A) == [2, 3]
    assert (A * A.transpose())[0, 0] == 5
    assert (A * 3)[1, 1] == 6
    B = block_diagonal([A, RatMatrix([[F(1, 2)]])])
    assert B.rows == 3 and ratDet(B) == F(3, 2)
    assert not is_positive_definite(RatMatrix([[1, 2], [2, 1]]))
    assert RatMatrix.from_json(A.to_json()) == A


def test_quadratic_form_and_short_vectors_a2():
    A2 = RatMatrix([[2, -1], [-1, 2]])
    assert quadratic_form(A2, (1, 1)) == 2
    vecs = short_vectors(A2, 2)
    assert len(vecs) == 3 and all(n == 2 for _, n in vecs)
    assert minimum_and_kissing(A2) == (2, 6)


def test_short_vectors_rejects_asymmetric():
    with pytest.raises(ShapeError):
        short_vectors(RatMatrix([[2, 1], [0, 2]]), 2)


@pytest.mark.parametrize("m,expected", [
    (2, (F(2, 3), 6)), (3, (1, 24)), (4, (F(4, 3), 54)), (5, (2, 240)), (6, (2, 240)),
    (8, (F(8, 3), 54)), (9, (3, 240)), (10, (F(10, 3), 6)),
])
def test_printed_grams_minimum_and_kissing(m, expected):
    assert minimum_and_kissing(PRINTED_GRAMS[m]) == expected


@pytest.mark.slow
def test_corrected_m12_kissing():
    assert minimum_and_kissing(PRINTED_GRAMS[12]) == (4, 1848)

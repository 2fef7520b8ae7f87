from fractions import Fraction
import itertools

import pytest

from mwlat.catalog.build import load_entry
from mwlat.catalog.points import PRINTED_GRAMS
from mwlat.catalog.table import invariantsFor
from mwlat.errors import DefinitenessError, DuplicateError, FormulaError
from mwlat.exact import RatMatrix, is_positive_definite, ratDet
from mwlat.heights import (CONTRIBUTIONS, find_isometry, find_signed_permutation, formula_for, genericGram,
                           genericPair, gramMatrix, identifyLattice, pairHeight, selfHeight)
from mwlat.sections import Section

F = Fraction
WITH_POINTS = (2, 3, 4, 6, 8, 10)
DETS = {2: F(1, 3), 3: F(1, 4), 4: F(1, 3), 6: F(1), 8: F(64, 3), 10: F(25, 3)}
MU = {2: F(2, 3), 3: F(1), 4: F(4, 3), 6: F(2), 8: F(8, 3), 10: F(10, 3)}


@pytest.mark.parametrize("m", WITH_POINTS)
def test_pairing_symmetric_on_catalog_pairs(m):
    pts = load_entry(m).sections()
    f = formula_for(m)
    for P, Q in itertools.combinations(pts, 2):
        assert pairHeight(P, Q, f) == pairHeight(Q, P, f)


@pytest.mark.parametrize("m", WITH_POINTS)
def test_computed_gram(m):
    G = gramMatrix(load_entry(m).sections(), formula_for(m))
    assert G.is_symmetric() and is_positive_definite(G)
    assert ratDet(G) == DETS[m]
    assert {G[i, i] for i in range(G.rows)} == {MU[m]}


def test_m4_first_row():
    G = gramMatrix(load_entry(4).sections(), formula_for(4))
    # <P1, P2> = 1/3 - (0 + min(1, +inf)) with a vanishing x difference
    assert G[0, 1] == F(-2, 3)


@pytest.mark.parametrize("m", [2, 4, 6])
def test_computed_equals_printed(m):
    assert gramMatrix(load_entry(m).sections(), formula_for(m)) == PRINTED_GRAMS[m]


def test_m3_printed_up_to_signs():
    G = gramMatrix(load_entry(3).sections(), formula_for(3))
    perm, signs = find_signed_permutation(G, PRINTED_GRAMS[3])
    assert perm == [0, 1, 2, 3] and signs == [1, -1, -1, 1]


def test_m8_printed_up_to_basis_change():
    G = gramMatrix(load_entry(8).sections(), formula_for(8))
    assert G == gramMatrix(load_entry(4).sections(), formula_for(4)) * 2
    assert find_signed_permutation(G, PRINTED_GRAMS[8]) is None
    X = RatMatrix(find_isometry(G, PRINTED_GRAMS[8]))
    assert X * G * X.transpose() == PRINTED_GRAMS[8] and abs(ratDet(X)) == 1


def test_isometry_rejects_different_determinants():
    assert find_isometry(PRINTED_GRAMS[2], PRINTED_GRAMS[2] * 2) is None


@pytest.mark.parametrize("m", sorted(PRINTED_GRAMS))
def test_printed_grams_positive_definite(m):
    G = PRINTED_GRAMS[m]
    assert G.is_symmetric() and is_positive_definite(G)


def test_m6_generic_route_agrees():
    pts = load_entry(6).sections()
    inv = invariantsFor(6)
    G = genericGram(pts, inv, [0] * len(pts), lambda i, j: 0)
    assert G == gramMatrix(pts, formula_for(6)) == gramMatrix(pts, formula_for(5))


def test_m2_generic_route_for_printed_p2():
    e = load_entry(2)
    P1 = e.points[0].section
    P2 = next(p.section for p in e.extraPoints if p.name == "P2")
    inv = invariantsFor(2)
    c = CONTRIBUTIONS.contr("IV*", "self")
    assert selfHeight(P1, inv, [c]) == F(2, 3)
    assert selfHeight(P2, inv) == 2
    assert genericPair(P1, P2, inv) == -1


def test_identify_lattice():
    rep = identifyLattice(PRINTED_GRAMS[6])
    assert rep.even and rep.integral and "m=6:E8" in rep.matches and "m=5:E8" in rep.matches
    rep = identifyLattice(PRINTED_GRAMS[4])
    assert not rep.integral and rep.matches == ("m=4:E6*",)
    with pytest.raises(DefinitenessError):
        identifyLattice(RatMatrix([[1, 2], [2, 1]]))


def test_formula_errors():
    with pytest.raises(FormulaError):
        formula_for(7)
    P = Section.make(2, [-1], [0, 1])
    with pytest.raises(DuplicateError):
        gramMatrix([P, P], formula_for(2))
    with pytest.raises(FormulaError):
        formula_for(2).self_height(Section.make(2, [0, 1], [0, 1]))
    with pytest.raises(FormulaError):
        genericPair(P, P, invariantsFor(2))

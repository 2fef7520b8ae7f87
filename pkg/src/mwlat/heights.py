"""Height pairings, Gram matrices and a lattice-data matcher.

Two routes are provided.  The closed per-family formulas

    <P, Q> = base - ( deg gcd(dx, dy) + min(xBound - deg dx, yBound - deg dy) )

with dx = x(P) - x(Q), dy = y(P) - y(Q), and the general formula

    <P, Q> = chi + (P.O) + (Q.O) - (P.Q) - sum of local contributions,

where the caller supplies the local contributions (component assignment is
not inferred).  Degrees of zero polynomials are NEG_INF, so a vanishing
difference contributes +inf inside the min and drops out.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .errors import DefinitenessError, DuplicateError, FormulaError
from .exact import RatMatrix, leadingMinors, ratDet
from .polyring.univariate import NEG_INF, polyGcd
from .sections import Section, substitute_t_power


def intersection_degree(P: Section, Q: Section, xBound: int, yBound: int) -> int:
    """deg gcd(dx, dy) + min(xBound - deg dx, yBound - deg dy)."""
    dx = P.x - Q.x
    dy = P.y - Q.y
    g = polyGcd(dx, dy)
    gdeg = g.degree()
    if gdeg == NEG_INF:
        raise FormulaError("the two sections coincide")
    tail = min(xBound - dx.degree(), yBound - dy.degree())
    return gdeg + tail


@dataclass(frozen=True)
class PairingFormula:
    """A closed pairing formula for one family of polynomial sections."""

    name: str
    chi: int
    baseTerm: Fraction
    xBound: int
    yBound: int
    selfValue: Fraction
    maxXDegree: int | None = None
    maxYDegree: int | None = None

    def check_shape(self, P: Section) -> None:
        if P.isZero:
            raise FormulaError("the zero section has no closed-form pairing")
        if self.maxXDegree is not None and P.x.degree() > self.maxXDegree:
            raise FormulaError(f"{self.name}: deg x = {P.x.degree()} exceeds {self.maxXDegree}")
        if self.maxYDegree is not None and P.y.degree() > self.maxYDegree:
            raise FormulaError(f"{self.name}: deg y = {P.y.degree()} exceeds {self.maxYDegree}")

    def self_height(self, P: Section) -> Fraction:
        self.check_shape(P)
        return self.selfValue

    def pair(self, P: Section, Q: Section) -> Fraction:
        self.check_shape(P)
        self.check_shape(Q)
        value = self.baseTerm - intersection_degree(P, Q, self.xBound, self.yBound)
        return Fraction(value)


@dataclass(frozen=True)
class AscendedFormula:
    """Pairing on E_m computed on E_{mn} after t -> t^n, divided by n."""

    name: str
    target: PairingFormula
    n: int

    def self_height(self, P: Section) -> Fraction:
        return self.target.self_height(substitute_t_power(P, self.n)) / self.n

    def pair(self, P: Section, Q: Section) -> Fraction:
        return self.target.pair(substitute_t_power(P, self.n), substitute_t_power(Q, self.n)) / self.n


def _f(a, b=1):
    return Fraction(a, b)


FORMULAS: dict = {
    2: PairingFormula("E2 constant-x", 1, _f(-1, 3), 0, 1, _f(2, 3), 0, 1),
    4: PairingFormula("E4", 1, _f(1, 3), 1, 2, _f(4, 3), 1, 2),
    5: PairingFormula("E5", 1, _f(1), 2, 3, _f(2), 2, 3),
    6: PairingFormula("E6", 1, _f(1), 2, 3, _f(2), 2, 3),
    8: PairingFormula("E8 from E4[2]", 2, _f(2, 3), 2, 4, _f(8, 3), 2, 4),
    9: PairingFormula("E9", 2, _f(2), 3, 4, _f(3), 3, 5),
    10: PairingFormula("E10 from E2[5]", 2, _f(4, 3), 3, 5, _f(10, 3), 0, 5),
    12: PairingFormula("E12", 2, _f(2), 4, 6, _f(4), 4, 6),
}
FORMULAS[3] = AscendedFormula("E3 via E6", FORMULAS[6], 2)


def formula_for(m: int):
    try:
        return FORMULAS[m]
    except KeyError:
        raise FormulaError(f"no closed pairing formula for m = {m}") from None


def pairHeight(P: Section, Q: Section, f) -> Fraction:
    if P == Q:
        return f.self_height(P)
    return f.pair(P, Q)


# the general formula


@dataclass(frozen=True)
class ContributionTable:
    """Standard local contributions for the fibre types that occur here.

    Keys are (fibre type, relation) with relation "self" for contr(P) on a
    non-identity component, "same" for two sections through the same
    non-identity component and "distinct" for different ones.
    """

    values: dict = dc_field(default_factory=lambda: dict(_CONTR))

    def contr(self, fiber: str, relation: str) -> Fraction:
        if fiber in ("regular", "II", "II*"):
            return Fraction(0)
        try:
            return self.values[(fiber, relation)]
        except KeyError:
            raise FormulaError(f"no contribution for {fiber}/{relation}") from None


_CONTR = {
    ("IV", "self"): _f(2, 3), ("IV", "same"): _f(2, 3), ("IV", "distinct"): _f(1, 3),
    ("I0*", "self"): _f(1), ("I0*", "same"): _f(1), ("I0*", "distinct"): _f(1, 2),
    ("IV*", "self"): _f(4, 3), ("IV*", "same"): _f(4, 3), ("IV*", "distinct"): _f(2, 3),
}

CONTRIBUTIONS = ContributionTable()


def selfHeight(P: Section, inv, contr: Sequence = (), zero_intersection: int = 0) -> Fraction:
    """2 chi + 2 (P.O) - sum contr."""
    return 2 * inv.chi + 2 * zero_intersection - sum((Fraction(c) for c in contr), Fraction(0))


def genericPair(P: Section, Q: Section, inv, contr: Sequence = (), PO: int = 0, QO: int = 0,
                infinity: int | None = None) -> Fraction:
    """chi + (P.O) + (Q.O) - (P.Q) - sum contr.

    The finite part of (P.Q) is deg gcd(dx, dy).  At infinity the caller may
    pass the local intersection number; by default it is the smooth-fibre
    value min(2 chi - deg dx, 3 chi - deg dy), clipped at zero.
    """
    dx, dy = P.x - Q.x, P.y - Q.y
    finite = polyGcd(dx, dy).degree()
    if finite == NEG_INF:
        raise FormulaError("the two sections coincide")
    if infinity is None:
        infinity = max(0, min(2 * inv.chi - dx.degree(), 3 * inv.chi - dy.degree()))
    total = finite + infinity
    return Fraction(inv.chi + PO + QO - total) - sum((Fraction(c) for c in contr), Fraction(0))


# Gram matrices


def gramMatrix(points: Sequence[Section], f, inv=None, contrs=None) -> RatMatrix:
    """Closed-formula Gram matrix; with inv and contrs the diagonal uses selfHeight."""
    if not points:
        raise FormulaError("need at least one point")
    n = len(points)
    for i, j in itertools.combinations(range(n), 2):
        if points[i] == points[j]:
            raise DuplicateError(f"points {i + 1} and {j + 1} coincide")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if inv is not None and contrs is not None:
            rows[i][i] = selfHeight(points[i], inv, contrs[i])
        else:
            rows[i][i] = f.self_height(points[i])
        for j in range(i + 1, n):
            v = f.pair(points[i], points[j])
            rows[i][j] = rows[j][i] = v
    return RatMatrix(rows)


def genericGram(points: Sequence[Section], inv, self_contr: Sequence, pair_contr) -> RatMatrix:
    """Gram matrix by the general formula; pair_contr(i, j) gives contr(P_i, P_j)."""
    n = len(points)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = selfHeight(points[i], inv, [self_contr[i]])
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = genericPair(points[i], points[j], inv, [pair_contr(i, j)])
    return RatMatrix(rows)


# lattice data


@dataclass(frozen=True)
class LatticeReport:
    rank: int
    det: Fraction
    minDiagonal: Fraction
    integral: bool
    even: bool
    matches: tuple

    def to_json(self) -> dict:
        from .exact import rat_to_str
        return {
            "rank": self.rank, "det": rat_to_str(self.det), "min_diagonal": rat_to_str(self.minDiagonal),
            "integral": self.integral, "even": self.even, "consistent_with": list(self.matches),
        }


def identifyLattice(G: RatMatrix, table=None) -> LatticeReport:
    """Compare Gram data with the lattice table; no isometry claim is made.

    A table row is consistent when rank and determinant agree and its
    minimal norm does not exceed the smallest diagonal entry.
    """
    if not G.is_symmetric():
        raise DefinitenessError("Gram matrix is not symmetric")
    minors = leadingMinors(G)
    if any(d <= 0 for d in minors):
        raise DefinitenessError("Gram matrix is not positive definite")
    if table is None:
        from .catalog.table import LATTICE_TABLE
        table = LATTICE_TABLE
    n = G.rows
    det = ratDet(G)
    diag = [G[i, i] for i in range(n)]
    integral = all(G[i, j].denominator == 1 for i in range(n) for j in range(n))
    even = integral and all(d.numerator % 2 == 0 for d in diag)
    mind = min(diag) if diag else Fraction(0)
    matches = tuple(
        f"m={m}:{row.name}" for m, row in sorted(table.items())
        if row.rank == n and row.det == det and row.minNorm is not None and row.minNorm <= mind
    )
    return LatticeReport(n, det, mind, integral, even, matches)


def find_signed_permutation(A: RatMatrix, B: RatMatrix):
    """Find (perm, signs) with B[i][j] = s_i s_j A[perm i][perm j], or None."""
    n = A.rows
    if B.rows != n:
        return None
    perm: list[int] = []
    signs: list[int] = []
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        for k in range(n):
            if used[k] or A[k, k] != B[i, i]:
                continue
            for s in (1, -1):
                ok = True
                for j in range(i):
                    if s * signs[j] * A[k, perm[j]] != B[i, j]:
                        ok = False
                        break
                if ok:
                    used[k] = True
                    perm.append(k)
                    signs.append(s)
                    if extend(i + 1):
                        return True
                    used[k] = False
                    perm.pop()
                    signs.pop()
                if i == 0:
                    break  # the first sign is free
        return False

    if extend(0):
        return list(perm), list(signs)
    return None


def find_isometry(A: RatMatrix, B: RatMatrix):
    """Integer X with X A X^T = B and |det X| = 1, or None.

    Rows of X are chosen among vectors of A whose norms are the diagonal
    entries of B; equal determinants then force X to be unimodular.
    """
    from .exact import short_vectors, quadratic_form
    n = A.rows
    if B.rows != n or ratDet(A) != ratDet(B):
        return None
    bound = max(B[i, i] for i in range(n))
    pool = short_vectors(A, bound)
    cands = {}
    for v, norm in pool:
        cands.setdefault(norm, []).extend([v, tuple(-c for c in v)])

    def inner(v, w):
        return sum(A[i, j] * v[i] * w[j] for i in range(n) for j in range(n) if v[i] and w[j])

    chosen: list = []

    def extend(i):
        if i == n:
            return True
        for v in cands.get(B[i, i], []):
            if all(inner(v, chosen[j]) == B[i, j] for j in range(i)):
                chosen.append(v)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return [list(v) for v in chosen]
    return None

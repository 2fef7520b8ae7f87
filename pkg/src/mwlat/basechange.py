"""Base change t -> t^n, direct sums, the tilde involution and the F6 -> E12 map."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, InputError, ShapeError
from .exact import RatMatrix, block_diagonal, ratDet
from .heights import find_isometry, find_signed_permutation, gramMatrix
from .polyring import MultiPoly
from .polyring.univariate import QQ, UniPoly
from .sections import Section, onCurve, substitute_t_power


@dataclass(frozen=True)
class BaseChangeSpec:
    sourceM: int
    n: int

    def __post_init__(self):
        if self.sourceM < 1 or self.n < 1:
            raise DomainError("m and n must be positive")

    @property
    def targetM(self) -> int:
        return self.sourceM * self.n


def baseChange(P: Section, n: int, check: bool = True) -> Section:
    if check and not onCurve(P):
        raise InputError(f"source point is not on E_{P.m}")
    return substitute_t_power(P, n)


@dataclass
class ScaledGramReport:
    n: int
    source: RatMatrix
    target: RatMatrix
    ok: bool
    permutation: object = None  # (perm, signs) when entries match only after reordering
    note: str = ""

    def to_json(self) -> dict:
        return {
            "n": self.n, "source": self.source.to_json(), "target": self.target.to_json(),
            "scaled_equal": self.ok, "permutation": self.permutation, "note": self.note,
        }


def scaledGramCheck(sourcePoints: Sequence[Section], n: int, f_source, f_target) -> ScaledGramReport:
    """Is Gram(base-changed points) = n * Gram(points), entrywise?"""
    src = gramMatrix(list(sourcePoints), f_source)
    moved = [baseChange(P, n) for P in sourcePoints]
    tgt = gramMatrix(moved, f_target)
    expected = src * n
    if tgt == expected:
        return ScaledGramReport(n, src, tgt, True)
    perm = find_signed_permutation(expected, tgt)
    if perm is not None:
        return ScaledGramReport(n, src, tgt, False, perm, "equal after a signed reordering")
    return ScaledGramReport(n, src, tgt, False)


@dataclass
class BasisChange:
    """X with X A X^T = B, certifying that two Gram matrices span the same lattice."""

    matrix: list | None
    det: Fraction | None = None
    extra: dict = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.matrix is not None


def compareUpToBasis(A: RatMatrix, B: RatMatrix) -> BasisChange:
    X = find_isometry(A, B)
    if X is None:
        return BasisChange(None)
    XM = RatMatrix(X)
    if XM * A * XM.transpose() != B:
        return BasisChange(None)
    return BasisChange(X, ratDet(XM))


def directSumGram(blocks: Sequence[RatMatrix]) -> RatMatrix:
    for b in blocks:
        if not b.is_symmetric():
            raise ShapeError("direct sum blocks must be symmetric")
    return block_diagonal(blocks)


def tildeAutomorphism(P: Section, n: int) -> Section:
    """(t^2n x(1/t), t^3n y(1/t)) on E_6n."""
    if P.m != 6 * n:
        raise ShapeError(f"the tilde map acts on E_{6 * n}, not E_{P.m}")
    if P.isZero:
        return P
    if not P.is_polynomial_form():
        raise ShapeError("tilde map needs polynomial coordinates")
    if P.x.degree() > 2 * n or P.y.degree() > 3 * n:
        raise ShapeError(f"degrees ({P.x.degree()}, {P.y.degree()}) exceed ({2 * n}, {3 * n})")
    return P.with_coordinates(P.x.reverse(2 * n), P.y.reverse(3 * n))


# the K3 surface F6 : y^2 = x^3 + t^6 + t^-6


@dataclass(frozen=True)
class F6Point:
    """x = xNum / t^xPole, y = yNum / t^yPole."""

    field: object
    xNum: UniPoly
    xPole: int
    yNum: UniPoly
    yPole: int


def _shift(p: UniPoly, k: int) -> UniPoly:
    return p * UniPoly.monomial(k, 1, p.var, p.field) if k else p


def onF6(P: F6Point) -> bool:
    """y^2 t^(N-2b) = x^3 t^(N-3a) + t^(N+6) + t^(N-6), N = max(2b, 3a, 6)."""
    a, b = P.xPole, P.yPole
    N = max(2 * b, 3 * a, 6)
    f = P.field
    lhs = _shift(P.yNum * P.yNum, N - 2 * b)
    rhs = _shift(P.xNum ** 3, N - 3 * a) + UniPoly.monomial(N + 6, 1, "t", f) + UniPoly.monomial(N - 6, 1, "t", f)
    return lhs == rhs


def transform_scalars(field, printed: bool = False):
    """(a, b) in X = a t^2 x, Y = b t^3 y; the printed choice lands on a twist."""
    from .sections import find_zeta3
    if printed:
        z = field.gen("zeta12")
        return z ** 2, z ** 3
    z3 = find_zeta3(field)
    return z3 ** 2, field(-1)


def f6ToE12(P: F6Point, printed: bool = False) -> Section:
    if not onF6(P):
        raise InputError("point does not lie on F6")
    a, b = transform_scalars(P.field, printed)
    if P.xPole > 2 or P.yPole > 3:
        raise ShapeError("image has a pole at t = 0")
    X = _shift(P.xNum, 2 - P.xPole) * a
    Y = _shift(P.yNum, 3 - P.yPole) * b
    return Section(12, P.field, X, Y, P.field.one())


def e12ToF6(Q: Section) -> F6Point:
    """Inverse of f6ToE12, for building F6 points from E12 points."""
    a, b = transform_scalars(Q.field)
    return F6Point(Q.field, Q.x * a.inverse(), 2, Q.y * b.inverse(), 3)


@dataclass
class TransformIdentity:
    a_cubed: Fraction
    b_squared: Fraction
    target_sign: int  # +1: lands on y^2 = x^3 + t^12 + 1, -1: on y^2 = x^3 - t^12 - 1
    identity_holds: bool


def transformIdentity(field, printed: bool = False) -> TransformIdentity:
    """Verify the F6 -> E12 transform as a polynomial identity.

    With X = a t^2 x, Y = b t^3 y and s = a^3 = b^2 in {1, -1}, the image
    residual on y^2 = x^3 + s (t^12 + 1) equals s t^6 times the F6
    residual y^2 - x^3 - t^6 - t^-6; both sides are expanded in Q[x, y, t].
    """
    a, b = transform_scalars(field, printed)
    a3, b2 = a ** 3, b ** 2
    if not (a3.is_rational() and b2.is_rational()):
        raise DomainError("transform scalars are not cube/square roots of rationals")
    a3, b2 = a3.rational_value(), b2.rational_value()
    vs = ("x", "y", "t")
    x, y, t = (MultiPoly.gen(vs, v) for v in vs)
    ok = a3 == b2 and abs(a3) == 1
    s = a3
    image = y ** 2 * t ** 6 * b2 - x ** 3 * t ** 6 * a3 - (t ** 12 + 1) * s
    cleared = (y ** 2 * t ** 6 - x ** 3 * t ** 6 - t ** 12 - 1) * s
    ok = ok and image == cleared
    return TransformIdentity(a3, b2, int(s) if ok else 0, ok)

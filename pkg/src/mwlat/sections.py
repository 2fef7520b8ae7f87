"""Points of E_m : y^2 = x^3 + t^m + 1 over K(t).

A section keeps numerator polynomials and a constant scale u, meaning
x = xNum / u^2 and y = yNum / u^3.  Most sections are polynomial and have
u = 1.  The zero section is a separate flag.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ShapeError, SpecializationError
from .polyring.univariate import QQ, UniPoly, common_field, polyGcd
from .towerfield import TowerElement, TowerField


def _as_poly(p, field, var="t") -> UniPoly:
    if isinstance(p, UniPoly):
        return UniPoly(p.coeffs, p.var, field)
    return UniPoly(list(p), var, field)


@dataclass(frozen=True)
class Section:
    m: int
    field: object
    xNum: UniPoly
    yNum: UniPoly
    uScale: object = 1
    isZero: bool = False

    @classmethod
    def make(cls, m: int, x, y, field=None, u=1) -> "Section":
        """Build a section from coefficient lists or polynomials (lowest degree first)."""
        if field is None:
            field = QQ
            for p in (x, y):
                if isinstance(p, UniPoly):
                    field = common_field(field, p.field)
        return cls(m, field, _as_poly(x, field), _as_poly(y, field), field(u))

    @classmethod
    def zero(cls, m: int, field=QQ) -> "Section":
        empty = UniPoly([], "t", field)
        return cls(m, field, empty, empty, 1, True)

    # plain coordinates

    @property
    def x(self) -> UniPoly:
        if self.uScale == 1:
            return self.xNum
        return self.xNum * (1 / self.uScale ** 2)

    @property
    def y(self) -> UniPoly:
        if self.uScale == 1:
            return self.yNum
        return self.yNum * (1 / self.uScale ** 3)

    def is_polynomial_form(self) -> bool:
        return self.uScale == 1

    def with_coordinates(self, x: UniPoly, y: UniPoly, m: int | None = None) -> "Section":
        return Section(self.m if m is None else m, self.field, x, y, _unit(self.field))

    def __eq__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        if self.isZero or other.isZero:
            return self.isZero == other.isZero and self.m == other.m
        return self.m == other.m and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.m, self.isZero, self.x.coeffs if not self.isZero else ()))

    def __str__(self):
        if self.isZero:
            return "O"
        return f"({self.x}, {self.y})"

    def to_json(self) -> dict:
        field = self.field
        u = field.element_to_json(self.uScale)
        return {"m": self.m, "x": self.xNum.to_json(), "y": self.yNum.to_json(), "u": u, "zero": self.isZero}

    @classmethod
    def from_json(cls, data, field=QQ) -> "Section":
        if data.get("zero"):
            return cls.zero(data["m"], field)
        x = UniPoly.from_json(data["x"], field)
        y = UniPoly.from_json(data["y"], field)
        u = field.element_from_json(data.get("u", "1"))
        return cls(data["m"], field, x, y, u)


def _unit(field):
    return Fraction(1) if field is QQ else field.one()


def curve_rhs(m: int, field=QQ) -> UniPoly:
    return UniPoly.monomial(m, 1, "t", field) + 1


def onCurve(P: Section) -> bool:
    """Exact check of yNum^2 = xNum^3 + u^6 (t^m + 1)."""
    if P.isZero:
        return True
    try:
        rhs = P.xNum ** 3 + curve_rhs(P.m, P.field) * (P.uScale ** 6)
        return P.yNum * P.yNum == rhs
    except (DomainError, TypeError, AttributeError):
        return False


def negate(P: Section) -> Section:
    if P.isZero:
        return P
    return Section(P.m, P.field, P.xNum, -P.yNum, P.uScale)


def find_zeta3(field) -> TowerElement:
    """A primitive cube root of unity expressed in the given tower."""
    if isinstance(field, TowerField):
        names = field.names()
        if "zeta3" in names:
            return field.gen("zeta3")
        if "zeta12" in names:
            return field.gen("zeta12") ** 4
        if "zeta6" in names:
            return field.gen("zeta6") ** 2
    raise DomainError("the coefficient field does not contain zeta3")


def zetaTwist(P: Section, k: int = 1) -> Section:
    """The automorphism (x, y) -> (zeta3^k x, y)."""
    if P.isZero:
        return P
    z = find_zeta3(P.field)
    k %= 3
    if k == 0:
        return P
    return Section(P.m, P.field, P.xNum * (z ** k), P.yNum, P.uScale)


def _reduce_fraction(num: UniPoly, den: UniPoly) -> tuple[UniPoly, UniPoly]:
    g = polyGcd(num, den)
    if not g.is_constant():
        num, den = num.exact_div(g), den.exact_div(g)
    lc = den.lc()
    inv = 1 / lc if den.field is QQ else lc.inverse()
    return num * inv, den * inv


def _polynomial_part(num: UniPoly, den: UniPoly, what: str) -> UniPoly:
    num, den = _reduce_fraction(num, den)
    if not den.is_constant():
        raise ShapeError(f"{what} of the result is not a polynomial in t")
    return num


def chordAdd(P: Section, Q: Section) -> Section:
    """P + Q for distinct affine points via the chord through them."""
    if P.m != Q.m:
        raise DomainError("sections live on different surfaces")
    if P.isZero:
        return Q
    if Q.isZero:
        return P
    field = common_field(P.field, Q.field)
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y1 == -y2:
            return Section.zero(P.m, field)
        raise DomainError("doubling a section is not supported")
    # lambda = (y1 - y2) / (x1 - x2), kept as a reduced fraction N / D
    lam_n, lam_d = _reduce_fraction(y1 - y2, x1 - x2)
    x3_num = lam_n * lam_n - (x1 + x2) * lam_d * lam_d
    x3_den = lam_d * lam_d
    x3 = _polynomial_part(x3_num, x3_den, "x")
    y3_num = lam_n * (x1 - x3) - y1 * lam_d
    y3 = _polynomial_part(y3_num, lam_d, "y")
    return Section(P.m, field, x3, y3, _unit(field))


def chordSubtract(P: Section, Q: Section) -> Section:
    """P - Q; P - P is O, P - (-P) would need doubling and is rejected."""
    if not Q.isZero and not P.isZero and P == Q:
        return Section.zero(P.m, P.field)
    return chordAdd(P, negate(Q))


def shift_section(P: Section, c) -> Section:
    """The point with coordinates x(t + c), y(t + c), on the shifted curve."""
    return Section(P.m, P.field, P.xNum.shift(c), P.yNum.shift(c), P.uScale)


SPECIALIZATIONS = ("atZero_b_over_d", "atOne_a0_over_b0", "atInfinity_leadX")


def specialize(P: Section, spec: str, shift=0, degree: int = 1):
    """Coefficient ratios used as specialisation maps.

    atZero_b_over_d and atOne_a0_over_b0 both return x(shift) / y(shift), the
    ratio of the constant coefficients of the translated point; the m = 3 and
    m = 9 catalog entries use shift = -1.  atInfinity_leadX returns the
    coefficient of t^degree in x.
    """
    if P.isZero:
        raise SpecializationError("the zero section has no coordinates")
    if spec in ("atZero_b_over_d", "atOne_a0_over_b0"):
        num = P.x(P.field(shift) if P.field is not QQ else Fraction(shift))
        den = P.y(P.field(shift) if P.field is not QQ else Fraction(shift))
        if not den:
            raise SpecializationError("denominator coefficient vanishes")
        return num / den
    if spec == "atInfinity_leadX":
        return P.x.coeff(degree)
    raise SpecializationError(f"unknown specialisation {spec!r}")


def substitute_t_power(P: Section, n: int) -> Section:
    if n < 1:
        raise DomainError("base change exponent must be positive")
    if P.isZero:
        return Section.zero(P.m * n, P.field)
    return Section(P.m * n, P.field, P.xNum.substitute_power(n), P.yNum.substitute_power(n), P.uScale)

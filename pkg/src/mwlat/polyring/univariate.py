"""Dense univariate polynomials over Q or over a tower field.

Coefficients are stored lowest degree first with trailing zeros stripped,
so the zero polynomial has an empty coefficient tuple.  Its degree is
``NEG_INF``, a float infinity chosen so that ``c - NEG_INF`` is ``+inf`` and
``min(c - NEG_INF, d) == d``.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

from ..errors import DomainError, NormalizationError, ReductionError
from ..exact import rat_to_str, to_rational
from . import intpoly

NEG_INF = float("-inf")
POS_INF = float("inf")


class RationalField:
    """The field Q, in the same protocol as TowerField."""

    name = "QQ"
    degree = 1
    levels = ()

    def __call__(self, value) -> Fraction:
        return to_rational(value)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_prefix_of(self, other) -> bool:
        return True

    def element_to_json(self, c):
        return rat_to_str(c)

    def element_from_json(self, data):
        return to_rational(data)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _field_of(value):
    f = getattr(value, "field", None)
    return f if f is not None else QQ


def common_field(f, g):
    if f is g or f == g:
        return f
    if f is QQ:
        return g
    if g is QQ:
        return f
    raise DomainError(f"mixed coefficient fields {f!r} and {g!r}")


class UniPoly:
    __slots__ = ("coeffs", "var", "field")

    def __init__(self, coeffs: Iterable = (), var: str = "t", field=None):
        raw = list(coeffs)
        if field is None:
            field = QQ
            for c in raw:
                field = common_field(field, _field_of(c))
        cs = [field(c) for c in raw]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var
        self.field = field

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "t", field=None) -> "UniPoly":
        return cls([0] * k + [c], var, field)

    @classmethod
    def gen(cls, var: str = "t", field=None) -> "UniPoly":
        return cls([0, 1], var, field)

    # basic queries

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]

    def __len__(self):
        return len(self.coeffs)

    # arithmetic

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.var, common_field(self.field, _field_of(other)))

    def _like(self, coeffs, field=None) -> "UniPoly":
        return UniPoly(coeffs, self.var, field or self.field)

    def __add__(self, other):
        other = self._coerce(other)
        f = common_field(self.field, other.field)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._like(out, f)

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = common_field(self.field, other.field)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like([], f)
        if f is QQ and len(a) * len(b) > 64:
            ia, da = _clear(a)
            ib, db = _clear(b)
            return self._like([Fraction(c, da * db) for c in intpoly.dense_mul(ia, ib)], f)
        if len(b) == 1:
            c = b[0]
            return self._like([x * c for x in a], f)
        if len(a) == 1:
            c = a[0]
            return self._like([c * x for x in b], f)
        out = [f.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
        return self._like(out, f)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        result = self._like([self.field.one()])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: "UniPoly"):
        other = self._coerce(other)
        f = common_field(self.field, other.field)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = 1 / other.coeffs[-1] if f is QQ else other.coeffs[-1].inverse()
        quo = [f.zero()] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv
            quo[k - db] = q
            for j, bc in enumerate(other.coeffs):
                rem[k - db + j] = rem[k - db + j] - q * bc
        return self._like(quo, f), self._like(rem[:db] if db else [], f)

    __divmod__ = divmod

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        """Quotient when other divides self; DomainError otherwise."""
        other = self._coerce(other)
        if self.field is QQ and other.field is QQ and other.coeffs:
            if not self.coeffs:
                return self
            ia, da = _clear(self.coeffs)
            ib, db = _clear(other.coeffs)
            ga, gb = intpoly.content(dict(enumerate(ia))), intpoly.content(dict(enumerate(ib)))
            q = intpoly.dense_divexact([c // ga for c in ia], [c // gb for c in ib])
            s = Fraction(ga * db, gb * da)
            return self._like([s * c for c in q])
        q, r = self.divmod(other)
        if r:
            raise DomainError("polynomial does not divide exactly")
        return q

    def divides(self, other: "UniPoly") -> bool:
        """True when self divides other exactly."""
        try:
            other.exact_div(self)
        except DomainError:
            return False
        return True

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        try:
            return self == self._coerce(other)
        except (TypeError, DomainError):
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # evaluation and substitution

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.field.zero()
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = self._like([])
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def substitute_power(self, n: int) -> "UniPoly":
        if n < 1:
            raise DomainError("power must be positive")
        out = [self.field.zero()] * ((len(self.coeffs) - 1) * n + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[k * n] = c
        return self._like(out)

    def shift(self, c) -> "UniPoly":
        """p(t + c)."""
        return self.compose(self._like([c, 1], common_field(self.field, _field_of(c))))

    def reverse(self, n: int) -> "UniPoly":
        """t^n p(1/t); requires deg p <= n."""
        if self.degree() > n:
            raise DomainError("degree exceeds reversal bound")
        cs = list(self.coeffs) + [self.field.zero()] * (n + 1 - len(self.coeffs))
        return self._like(cs[::-1])

    def derivative(self) -> "UniPoly":
        return self._like([k * c for k, c in enumerate(self.coeffs)][1:])

    def map_coeffs(self, fn, field=None) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs], self.var, field)

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var, self.field)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        inv = 1 / lc if self.field is QQ else lc.inverse()
        return self._like([c * inv for c in self.coeffs])

    # printing and serialisation

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if self.field is QQ:
                cs = rat_to_str(c)
                if mono and c == 1:
                    parts.append(mono)
                elif mono and c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(cs + ("*" + mono if mono else ""))
            else:
                parts.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [self.field.element_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, field=None) -> "UniPoly":
        field = field or QQ
        return cls([field.element_from_json(c) for c in data["coeffs"]], data.get("var", "t"), field)

    def integer_coeffs(self) -> list[int]:
        if self.field is not QQ:
            raise DomainError("integer coefficients need a polynomial over Q")
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise DomainError("non-integral coefficient")
            out.append(c.numerator)
        return out


def _clear(coeffs) -> tuple[list[int], int]:
    d = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [int(c * d) for c in coeffs], d


def polyGcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    f = common_field(p.field, q.field)
    if not p.coeffs and not q.coeffs:
        return UniPoly([], p.var, f)
    if f is QQ:
        a = dict(((k,), c) for k, c in enumerate(_clear(p.coeffs)[0]) if c)
        b = dict(((k,), c) for k, c in enumerate(_clear(q.coeffs)[0]) if c)
        g = intpoly.gcd_poly(a, b, 1)
        top = max(e[0] for e in g)
        return UniPoly([g.get((k,), 0) for k in range(top + 1)], p.var).monic()
    a, b = UniPoly(p.coeffs, p.var, f), UniPoly(q.coeffs, p.var, f)
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def normalizePrimitive(p: UniPoly) -> UniPoly:
    """Integer-primitive associate with positive leading coefficient."""
    if p.field is not QQ:
        raise NormalizationError("normalisation is defined for polynomials over Q")
    if not p.coeffs:
        raise NormalizationError("cannot normalise the zero polynomial")
    ints, _ = _clear(p.coeffs)
    g = intpoly.content(dict(enumerate(ints)))
    if ints[-1] < 0:
        g = -g
    return UniPoly([c // g for c in ints], p.var)


def reduceByPower(p: UniPoly, k: int, var: str = "U") -> UniPoly:
    """Rewrite p(u) as a polynomial in U = u^k."""
    if k < 1:
        raise ReductionError("power must be positive")
    bad = [e for e in p.support() if e % k]
    if bad:
        raise ReductionError(f"exponents {bad[:5]} are not divisible by {k}")
    return UniPoly(p.coeffs[::k], var, p.field)


def substituteTPower(p: UniPoly, n: int) -> UniPoly:
    return p.substitute_power(n)

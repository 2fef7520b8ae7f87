"""Number fields as towers of simple extensions.

A field is a chain Q = K_0 < K_1 < ... < K_n where K_k = K_{k-1}[x]/(f_k)
for a monic f_k.  An element of K_k is stored as a tuple of deg f_k elements
of K_{k-1} (lowest power first), recursively down to Fractions, and every
level is kept reduced.  Equality is therefore equality of nested tuples.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, EmbeddingError
from .exact import rat_to_str, to_rational
from .polyring.univariate import QQ, UniPoly


@dataclass(frozen=True)
class Level:
    name: str
    minpoly: tuple  # raw coefficients over the previous level, monic, lowest first
    embed: complex | None = None

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def key(self):
        return (self.name, self.minpoly)


# raw arithmetic, parameterised by the list of levels and a depth


def _zero(levels, k):
    if k == 0:
        return Fraction(0)
    z = _zero(levels, k - 1)
    return (z,) * levels[k - 1].degree


def _one(levels, k):
    if k == 0:
        return Fraction(1)
    z = _zero(levels, k - 1)
    return (_one(levels, k - 1),) + (z,) * (levels[k - 1].degree - 1)


def _from_rational(levels, k, q):
    if k == 0:
        return q
    z = _zero(levels, k - 1)
    return (_from_rational(levels, k - 1, q),) + (z,) * (levels[k - 1].degree - 1)


def _is_zero(a, k):
    if k == 0:
        return not a
    return all(_is_zero(x, k - 1) for x in a)


def _add(a, b, k):
    if k == 0:
        return a + b
    return tuple(_add(x, y, k - 1) for x, y in zip(a, b))


def _sub(a, b, k):
    if k == 0:
        return a - b
    return tuple(_sub(x, y, k - 1) for x, y in zip(a, b))


def _neg(a, k):
    if k == 0:
        return -a
    return tuple(_neg(x, k - 1) for x in a)


def _scale(a, q, k):
    if k == 0:
        return a * q
    return tuple(_scale(x, q, k - 1) for x in a)


def _reduce(levels, k, prod: list):
    """Reduce a coefficient list over K_{k-1} modulo f_k, in place; returns a tuple."""
    level = levels[k - 1]
    d = level.degree
    tail = level.minpoly[:-1]
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if _is_zero(c, k - 1):
            continue
        for j, m in enumerate(tail):
            if not _is_zero(m, k - 1):
                prod[i - d + j] = _sub(prod[i - d + j], _mul(levels, c, m, k - 1), k - 1)
    z = _zero(levels, k - 1)
    out = prod[:d]
    out += [z] * (d - len(out))
    return tuple(out)


def _mul(levels, a, b, k):
    if k == 0:
        return a * b
    nz_a = [(i, x) for i, x in enumerate(a) if not _is_zero(x, k - 1)]
    nz_b = [(j, y) for j, y in enumerate(b) if not _is_zero(y, k - 1)]
    d = levels[k - 1].degree
    z = _zero(levels, k - 1)
    if not nz_a or not nz_b:
        return (z,) * d
    prod = [z] * (2 * d - 1)
    for i, x in nz_a:
        for j, y in nz_b:
            prod[i + j] = _add(prod[i + j], _mul(levels, x, y, k - 1), k - 1)
    return _reduce(levels, k, prod)


def _inv(levels, a, k):
    if k == 0:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a
    if _is_zero(a, k):
        raise ZeroDivisionError("inverse of zero")
    sub = k - 1

    def strip(p):
        p = list(p)
        while p and _is_zero(p[-1], sub):
            p.pop()
        return p

    def pmul(p, q):
        if not p or not q:
            return []
        out = [_zero(levels, sub)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] = _add(out[i + j], _mul(levels, x, y, sub), sub)
        return strip(out)

    def psub(p, q):
        n = max(len(p), len(q))
        z = _zero(levels, sub)
        p = list(p) + [z] * (n - len(p))
        q = list(q) + [z] * (n - len(q))
        return strip(_sub(x, y, sub) for x, y in zip(p, q))

    def pdivmod(p, q):
        p = list(p)
        inv_lc = _inv(levels, q[-1], sub)
        dq = len(q) - 1
        quo = [_zero(levels, sub)] * max(len(p) - dq, 1)
        for i in range(len(p) - 1, dq - 1, -1):
            c = p[i]
            if _is_zero(c, sub):
                continue
            f = _mul(levels, c, inv_lc, sub)
            quo[i - dq] = f
            for j, y in enumerate(q):
                p[i - dq + j] = _sub(p[i - dq + j], _mul(levels, f, y, sub), sub)
        return strip(quo), strip(p[:dq])

    r0, r1 = strip(levels[k - 1].minpoly), strip(a)
    s0, s1 = [], [_one(levels, sub)]
    while len(r1) > 1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        if not r1:
            raise ZeroDivisionError("element is a zero divisor: a tower level is reducible")
    c = _inv(levels, r1[0], sub)
    d = levels[k - 1].degree
    out = [_mul(levels, x, c, sub) for x in s1]
    if len(out) > d:
        out = list(_reduce(levels, k, out))
    out += [_zero(levels, sub)] * (d - len(out))
    return tuple(out)


def _lift(levels, raw, src, dst):
    for k in range(src + 1, dst + 1):
        z = _zero(levels, k - 1)
        raw = (raw,) + (z,) * (levels[k - 1].degree - 1)
    return raw


def _normalize(levels, k, data):
    """Turn nested lists/strings into a reduced raw element of K_k."""
    if k == 0:
        return to_rational(data)
    if not isinstance(data, (list, tuple)):
        return _from_rational(levels, k, to_rational(data))
    d = levels[k - 1].degree
    parts = [_normalize(levels, k - 1, x) for x in data]
    if len(parts) > d:
        return _reduce(levels, k, parts)
    return tuple(parts) + (_zero(levels, k - 1),) * (d - len(parts))


class TowerField:
    def __init__(self, levels: Sequence[Level] = ()):
        self.levels = tuple(levels)
        self.depth = len(self.levels)
        deg = 1
        for lv in self.levels:
            if lv.degree < 1:
                raise DomainError(f"defining polynomial of {lv.name} is constant")
            deg *= lv.degree
        self.degree = deg
        self._key = tuple(lv.key() for lv in self.levels)

    # construction

    @classmethod
    def rationals(cls) -> "TowerField":
        return cls(())

    def extend(self, name: str, minpoly: Sequence, embed: complex | None = None) -> "TowerField":
        """Adjoin a root of minpoly (coefficients in self, lowest first, monic)."""
        if name in self.names():
            raise DomainError(f"generator {name} already present")
        raw = tuple(self(c).raw for c in minpoly)
        if len(raw) < 2:
            raise DomainError("defining polynomial must be nonconstant")
        if raw[-1] != _one(self.levels, self.depth):
            raise DomainError("defining polynomial must be monic")
        return TowerField(self.levels + (Level(name, raw, embed),))

    def names(self) -> list[str]:
        return [lv.name for lv in self.levels]

    def __call__(self, value) -> "TowerElement":
        if isinstance(value, TowerElement):
            if value.field == self:
                return value
            if value.field.is_prefix_of(self):
                return TowerElement(self, _lift(self.levels, value.raw, value.field.depth, self.depth))
            raise DomainError(f"element of {value.field!r} does not embed into {self!r}")
        if isinstance(value, (list, tuple)):
            return TowerElement(self, _normalize(self.levels, self.depth, value))
        return TowerElement(self, _from_rational(self.levels, self.depth, to_rational(value)))

    def zero(self) -> "TowerElement":
        return TowerElement(self, _zero(self.levels, self.depth))

    def one(self) -> "TowerElement":
        return TowerElement(self, _one(self.levels, self.depth))

    def gen(self, name: str) -> "TowerElement":
        for k, lv in enumerate(self.levels, start=1):
            if lv.name == name:
                z = _zero(self.levels, k - 1)
                raw = (z, _one(self.levels, k - 1)) + (z,) * (lv.degree - 2) if lv.degree > 1 \
                    else _normalize(self.levels, k, [_zero(self.levels, k - 1), _one(self.levels, k - 1)])
                return TowerElement(self, _lift(self.levels, raw, k, self.depth))
        raise DomainError(f"no generator named {name}")

    def gens(self) -> list["TowerElement"]:
        return [self.gen(n) for n in self.names()]

    def subfield(self, depth: int) -> "TowerField":
        return TowerField(self.levels[:depth])

    def minpoly(self, name: str) -> UniPoly:
        """Defining polynomial of a generator, as a UniPoly over its base level."""
        for k, lv in enumerate(self.levels):
            if lv.name == name:
                base = self.subfield(k)
                coeffs = [TowerElement(base, c) if k else c for c in lv.minpoly]
                return UniPoly(coeffs, "x", base if k else QQ)
        raise DomainError(f"no generator named {name}")

    # comparisons

    def is_prefix_of(self, other) -> bool:
        if other is QQ:
            return self.depth == 0
        return other._key[:self.depth] == self._key

    def __eq__(self, other):
        if isinstance(other, TowerField):
            return self._key == other._key
        if other is QQ:
            return self.depth == 0
        return NotImplemented

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if not self.levels:
            return "TowerField(Q)"
        return "TowerField(Q(" + ")(".join(self.names()) + "))"

    # random elements for property tests

    def random_element(self, rng: random.Random, bound: int = 5, den: int = 3) -> "TowerElement":
        def rec(k):
            if k == 0:
                return Fraction(rng.randint(-bound, bound), rng.randint(1, den))
            return tuple(rec(k - 1) for _ in range(self.levels[k - 1].degree))
        return TowerElement(self, rec(self.depth))

    # serialisation

    def element_to_json(self, c):
        return self(c).to_json()

    def element_from_json(self, data):
        return self(data)

    def to_json(self) -> dict:
        out = []
        for k, lv in enumerate(self.levels):
            entry = {"gen": lv.name, "minpoly": [_raw_json(c, k) for c in lv.minpoly]}
            if lv.embed is not None:
                entry["embed"] = {"re": repr(lv.embed.real), "im": repr(lv.embed.imag)}
            out.append(entry)
        return {"levels": out}

    @classmethod
    def from_json(cls, data) -> "TowerField":
        field = cls.rationals()
        for entry in data["levels"]:
            emb = entry.get("embed")
            z = complex(float(emb["re"]), float(emb["im"])) if emb else None
            field = field.extend(entry["gen"], [field(c) for c in entry["minpoly"]], z)
        return field


def _raw_json(raw, k):
    if k == 0:
        return rat_to_str(raw)
    return [_raw_json(x, k - 1) for x in raw]


class TowerElement:
    __slots__ = ("field", "raw")

    def __init__(self, field: TowerField, raw):
        self.field = field
        self.raw = raw

    def _other(self, other):
        if isinstance(other, TowerElement):
            if other.field == self.field:
                return self.field, self, other
            if other.field.is_prefix_of(self.field):
                return self.field, self, self.field(other)
            if self.field.is_prefix_of(other.field):
                return other.field, other.field(self), other
            raise DomainError(f"mismatched fields {self.field!r} and {other.field!r}")
        if isinstance(other, (int, Fraction)):
            return self.field, self, self.field(other)
        return None, None, None

    def __add__(self, other):
        f, a, b = self._other(other)
        if f is None:
            return NotImplemented
        return TowerElement(f, _add(a.raw, b.raw, f.depth))

    __radd__ = __add__

    def __sub__(self, other):
        f, a, b = self._other(other)
        if f is None:
            return NotImplemented
        return TowerElement(f, _sub(a.raw, b.raw, f.depth))

    def __rsub__(self, other):
        f, a, b = self._other(other)
        if f is None:
            return NotImplemented
        return TowerElement(f, _sub(b.raw, a.raw, f.depth))

    def __neg__(self):
        return TowerElement(self.field, _neg(self.raw, self.field.depth))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerElement(self.field, _scale(self.raw, Fraction(other), self.field.depth))
        f, a, b = self._other(other)
        if f is None:
            return NotImplemented
        return TowerElement(f, _mul(f.levels, a.raw, b.raw, f.depth))

    __rmul__ = __mul__

    def inverse(self) -> "TowerElement":
        return TowerElement(self.field, _inv(self.field.levels, self.raw, self.field.depth))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return TowerElement(self.field, _scale(self.raw, 1 / Fraction(other), self.field.depth))
        f, a, b = self._other(other)
        if f is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        f, a, b = self._other(other)
        if f is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __bool__(self):
        return not _is_zero(self.raw, self.field.depth)

    def is_zero(self) -> bool:
        return _is_zero(self.raw, self.field.depth)

    def __eq__(self, other):
        f, a, b = self._other(other)
        if f is None:
            return NotImplemented
        return a.raw == b.raw

    def __hash__(self):
        # rationals hash like their Fraction so mixed dict keys behave
        if self.is_rational():
            return hash(self.rational_value())
        return hash((self.field, self.raw))

    def is_rational(self) -> bool:
        raw = self.raw
        for k in range(self.field.depth, 0, -1):
            if not all(_is_zero(x, k - 1) for x in raw[1:]):
                return False
            raw = raw[0]
        return True

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is not rational")
        raw = self.raw
        for _ in range(self.field.depth):
            raw = raw[0]
        return raw

    def coefficients(self) -> tuple:
        """Top-level coefficients as elements of the previous level."""
        if self.field.depth == 0:
            return (self.raw,)
        base = self.field.subfield(self.field.depth - 1)
        if base.depth == 0:
            return tuple(self.raw)
        return tuple(TowerElement(base, x) for x in self.raw)

    def flat(self) -> list[Fraction]:
        """All rational coordinates in the power basis, in nesting order."""
        out = []

        def rec(x, k):
            if k == 0:
                out.append(x)
            else:
                for y in x:
                    rec(y, k - 1)
        rec(self.raw, self.field.depth)
        return out

    def to_json(self):
        return _raw_json(self.raw, self.field.depth)

    def __repr__(self):
        return f"TowerElement({self})"

    def __str__(self):
        return _format(self.raw, self.field.levels, self.field.depth)


def _format(raw, levels, k) -> str:
    if k == 0:
        return rat_to_str(raw)
    name = levels[k - 1].name
    parts = []
    for i, c in enumerate(raw):
        if _is_zero(c, k - 1):
            continue
        cs = _format(c, levels, k - 1)
        mono = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        elif ("+" in cs or " - " in cs):
            parts.append(f"({cs})*{mono}")
        else:
            parts.append(f"{cs}*{mono}")
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def verifyRoot(p: UniPoly, a) -> bool:
    """Exact test that p(a) = 0 in a's field."""
    field = a.field if isinstance(a, TowerElement) else QQ
    if p.field is not QQ:
        if field is QQ or not p.field.is_prefix_of(field):
            raise EmbeddingError(f"coefficients of p do not embed into {field!r}")
    val = p(a)
    return not val


def embedSubfield(a, target: TowerField) -> TowerElement:
    if not isinstance(a, TowerElement):
        return target(a)
    if not a.field.is_prefix_of(target):
        raise EmbeddingError(f"{a.field!r} is not a prefix of {target!r}")
    return target(a)


def descend(a: TowerElement, target: TowerField) -> TowerElement:
    """Inverse of embedSubfield: move a down to the prefix field target."""
    if not target.is_prefix_of(a.field):
        raise EmbeddingError(f"{target!r} is not a prefix of {a.field!r}")
    raw = a.raw
    for k in range(a.field.depth, target.depth, -1):
        if not all(_is_zero(x, k - 1) for x in raw[1:]):
            raise EmbeddingError("element does not lie in the subfield")
        raw = raw[0]
    if target.depth == 0:
        return raw
    return TowerElement(target, raw)

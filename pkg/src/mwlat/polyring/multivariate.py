"""Sparse multivariate polynomials over Q."""
from __future__ import annotations

import ast
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from ..errors import DomainError, EliminationError
from ..exact import rat_to_str, to_rational
from . import intpoly


class MultiPoly:
    """Polynomial in an ordered tuple of named variables.

    Terms are stored as {exponent tuple: Fraction}; zero coefficients are
    never stored.  Printing and ``terms()`` use graded-lex order.
    """

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise DomainError("exponent vector does not match variable list")
            c = to_rational(c)
            if c:
                clean[e] = c
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, variables, c) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gen(cls, variables, name: str) -> "MultiPoly":
        variables = tuple(variables)
        e = tuple(1 if v == name else 0 for v in variables)
        if not any(e):
            raise DomainError(f"unknown variable {name}")
        return cls(variables, {e: 1})

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "MultiPoly":
        """Parse an arithmetic expression such as ``"3*a^2*b - 2*c*d - 6"``."""
        variables = tuple(variables)
        tree = ast.parse(text.replace("^", "**"), mode="eval")
        gens = {v: cls.gen(variables, v) for v in variables}

        def walk(node):
            if isinstance(node, ast.Expression):
                return walk(node.body)
            if isinstance(node, ast.BinOp):
                left, right = walk(node.left), walk(node.right)
                if isinstance(node.op, ast.Add):
                    return left + right
                if isinstance(node.op, ast.Sub):
                    return left - right
                if isinstance(node.op, ast.Mult):
                    return left * right
                if isinstance(node.op, ast.Div):
                    if not right.is_constant():
                        raise DomainError("division by a non-constant")
                    return left * (1 / right.constant_value())
                if isinstance(node.op, ast.Pow):
                    if not right.is_constant():
                        raise DomainError("non-constant exponent")
                    k = right.constant_value()
                    if k.denominator != 1 or k < 0:
                        raise DomainError("exponent must be a nonnegative integer")
                    return left ** int(k)
            if isinstance(node, ast.UnaryOp):
                val = walk(node.operand)
                if isinstance(node.op, ast.USub):
                    return -val
                if isinstance(node.op, ast.UAdd):
                    return val
            if isinstance(node, ast.Constant) and isinstance(node.value, int):
                return cls.constant(variables, node.value)
            if isinstance(node, ast.Name):
                if node.id not in gens:
                    raise DomainError(f"unknown variable {node.id}")
                return gens[node.id]
            raise DomainError(f"unsupported syntax in {text!r}")

        return walk(tree)

    # basic queries

    def terms(self):
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def term_dict(self) -> dict:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError("polynomial is not constant")
        return self._terms.get((0,) * len(self.vars), Fraction(0))

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise DomainError(f"variable {var} not in {self.vars}") from None

    def degree(self, var: str | None = None):
        from .univariate import NEG_INF
        if not self._terms:
            return NEG_INF
        if var is None:
            return max(sum(e) for e in self._terms)
        i = self.index(var)
        return max(e[i] for e in self._terms)

    def involves(self, var: str) -> bool:
        i = self.index(var)
        return any(e[i] for e in self._terms)

    def used_vars(self) -> list[str]:
        return [v for i, v in enumerate(self.vars) if any(e[i] for e in self._terms)]

    def coefficients(self, var: str) -> list["MultiPoly"]:
        """Coefficients in var (lowest first) as polynomials in the same ring."""
        i = self.index(var)
        buckets: dict[int, dict] = {}
        for e, c in self._terms.items():
            buckets.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        if not buckets:
            return []
        return [MultiPoly(self.vars, buckets.get(k, {})) for k in range(max(buckets) + 1)]

    def leading_coefficient(self, var: str) -> "MultiPoly":
        return self.coefficients(var)[-1]

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise DomainError("polynomials live in different rings")
            return other
        return MultiPoly.constant(self.vars, to_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if len(other._terms) == 1 and other.is_constant():
            c = other.constant_value()
            return MultiPoly(self.vars, {e: c * v for e, v in self._terms.items()})
        a, da = self.to_integer()
        b, db = other.to_integer()
        return MultiPoly._from_int(self.vars, intpoly.mul(a, b), da * db)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        a, d = self.to_integer()
        return MultiPoly._from_int(self.vars, intpoly.power(a, k, len(self.vars)), d ** k)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self._terms == other._terms
        try:
            return self == self._coerce(other)
        except (TypeError, DomainError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(rat_to_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rat_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # integer conversion

    def to_integer(self) -> tuple[dict, int]:
        """Return (integer term dict, d) with self = dict / d."""
        if not self._terms:
            return {}, 1
        d = lcm(*(c.denominator for c in self._terms.values()))
        return {e: int(c * d) for e, c in self._terms.items()}, d

    @classmethod
    def _from_int(cls, variables, terms: dict, den: int = 1) -> "MultiPoly":
        p = cls.__new__(cls)
        p.vars = tuple(variables)
        if den == 1:
            p._terms = {e: Fraction(c) for e, c in terms.items() if c}
        else:
            p._terms = {e: Fraction(c, den) for e, c in terms.items() if c}
        p._hash = None
        return p

    def primitive(self) -> "MultiPoly":
        """Integer-primitive associate with positive lead term (graded-lex)."""
        if not self._terms:
            return self
        a, _ = self.to_integer()
        g = intpoly.content(a)
        lead = self.terms()[0][1]
        if lead < 0:
            g = -g
        return MultiPoly._from_int(self.vars, {e: c // g for e, c in a.items()})

    def strip_monomial(self) -> tuple["MultiPoly", tuple[int, ...]]:
        """Divide out the largest monomial factor; returns (quotient, exponents)."""
        if not self._terms:
            return self, (0,) * len(self.vars)
        low = [min(e[i] for e in self._terms) for i in range(len(self.vars))]
        if not any(low):
            return self, tuple(low)
        return (MultiPoly(self.vars, {tuple(x - y for x, y in zip(e, low)): c
                                      for e, c in self._terms.items()}), tuple(low))

    # substitution and evaluation

    def substitute(self, assignments: Mapping[str, object]) -> "MultiPoly":
        """Replace variables by polynomials (in this ring) or constants."""
        idx = {self.index(v): (val if isinstance(val, MultiPoly) else self._coerce(val))
               for v, val in assignments.items()}
        powers: dict[tuple[int, int], MultiPoly] = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = idx[i] ** k
            return powers[key]

        total = MultiPoly(self.vars)
        groups: dict[tuple, dict] = {}
        for e, c in self._terms.items():
            fixed = tuple(0 if i in idx else x for i, x in enumerate(e))
            moving = tuple(e[i] for i in sorted(idx))
            groups.setdefault(moving, {})[fixed] = c
        order = sorted(idx)
        for moving, rest in groups.items():
            term = MultiPoly(self.vars, rest)
            for i, k in zip(order, moving):
                if k:
                    term = term * pw(i, k)
            total = total + term
        return total

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at values for every used variable; values may be any ring elements."""
        acc = None
        for e, c in self._terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * values[v] ** k
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    def to_univariate(self, var: str):
        from .univariate import UniPoly
        others = [v for v in self.used_vars() if v != var]
        if others:
            raise DomainError(f"polynomial still involves {others}")
        return UniPoly([c.constant_value() for c in self.coefficients(var)], var)

    def to_json(self) -> dict:
        return {"vars": list(self.vars),
                "terms": [[list(e), rat_to_str(c)] for e, c in self.terms()]}

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        return cls(data["vars"], {tuple(e): to_rational(c) for e, c in data["terms"]})


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Resultant with respect to var, computed by a subresultant chain.

    The integer content is stripped from the result (positive divisor), so
    the sign of the true resultant is kept.
    """
    if p.vars != q.vars:
        raise DomainError("polynomials live in different rings")
    if not (p.involves(var) or q.involves(var)):
        raise EliminationError(f"{var} occurs in neither polynomial")
    i = p.index(var)
    n = len(p.vars)
    a, _ = p.to_integer()
    b, _ = q.to_integer()
    (a, b), strides = intpoly.compress_strides([a, b], i, n)
    res = intpoly.resultant_coeffs(intpoly.split(a, i), intpoly.split(b, i), n)
    res = intpoly.expand_strides(res, strides)
    g = intpoly.content(res)
    if g > 1:
        res = {e: c // g for e, c in res.items()}
    return MultiPoly._from_int(p.vars, res)


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Multivariate gcd over Z (primitive, positive lead term)."""
    if p.vars != q.vars:
        raise DomainError("polynomials live in different rings")
    a, _ = p.to_integer()
    b, _ = q.to_integer()
    return MultiPoly._from_int(p.vars, intpoly.gcd_poly(a, b, len(p.vars)))


def exact_quotient(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    a, da = p.to_integer()
    b, db = q.to_integer()
    g = intpoly.content(b)
    b = {e: c // g for e, c in b.items()}
    quo = intpoly.divexact(a, b)
    return MultiPoly(p.vars, {e: Fraction(c * db, g * da) for e, c in quo.items()})

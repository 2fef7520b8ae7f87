"""Exact rationals and dense rational matrices.

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  The matrix type is immutable and
computes determinants by fraction-free (Bareiss) elimination on an integer
matrix obtained by clearing row denominators.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError, ShapeError

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_to_str(q) -> str:
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def bareiss_det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


class RatMatrix:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(tuple(to_rational(x) for x in row) for row in entries)
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise DimensionError("ragged matrix rows")
        self._entries = data
        self.rows = len(data)
        self.cols = widths.pop() if widths else 0

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scaled(cls, factor, entries) -> "RatMatrix":
        f = to_rational(factor)
        return cls([[f * to_rational(x) for x in row] for row in entries])

    def __getitem__(self, ij):
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> tuple:
        return self._entries[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._entries]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        body = "; ".join(" ".join(rat_to_str(x) for x in r) for r in self._entries)
        return f"RatMatrix([{body}])"

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise DimensionError("incompatible shapes for product")
            cols = list(zip(*other._entries))
            return RatMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                              for r in self._entries])
        f = to_rational(other)
        return RatMatrix([[f * x for x in r] for r in self._entries])

    __rmul__ = __mul__

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("incompatible shapes for sum")
        return RatMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)])

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._entries)) if self.rows else RatMatrix([])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self._entries[i][j] == self._entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[self._entries[i][j] for j in cols] for i in rows])

    def permuted(self, perm: Sequence[int], signs: Sequence[int] | None = None) -> "RatMatrix":
        """Return D P^T M P D for the permutation perm and sign vector signs."""
        n = self.rows
        s = signs or [1] * n
        return RatMatrix([[s[i] * s[j] * self._entries[perm[i]][perm[j]] for j in range(n)]
                          for i in range(n)])

    def det(self) -> Fraction:
        return ratDet(self)

    def to_json(self) -> list[list[str]]:
        return [[rat_to_str(x) for x in r] for r in self._entries]

    @classmethod
    def from_json(cls, data) -> "RatMatrix":
        return cls([[to_rational(x) for x in r] for r in data])


def ratDet(m: RatMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination after clearing row denominators."""
    if not m.is_square():
        raise DimensionError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    scale = 1
    rows = []
    for r in m.tolist():
        den = lcm(*(x.denominator for x in r)) if r else 1
        scale *= den
        rows.append([int(x * den) for x in r])
    return Fraction(bareiss_det_int(rows), scale)


def leadingMinors(m: RatMatrix) -> list[Fraction]:
    if not m.is_square():
        raise DimensionError("leading minors need a square matrix")
    if not m.is_symmetric():
        raise ShapeError("leading minors are only defined here for symmetric input")
    return [ratDet(m.submatrix(range(k), range(k))) for k in range(1, m.rows + 1)]


def is_positive_definite(m: RatMatrix) -> bool:
    return all(x > 0 for x in leadingMinors(m))


def block_diagonal(blocks: Sequence[RatMatrix]) -> RatMatrix:
    n = sum(b.rows for b in blocks)
    out = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for b in blocks:
        if not b.is_square():
            raise DimensionError("blocks must be square")
        for i in range(b.rows):
            for j in range(b.cols):
                out[off + i][off + j] = b[i, j]
        off += b.rows
    return RatMatrix(out)


def quadratic_form(G: RatMatrix, v: Sequence[int]) -> Fraction:
    n = G.rows
    return sum((G[i, j] * v[i] * v[j] for i in range(n) for j in range(n)), Fraction(0))


def short_vectors(G: RatMatrix, bound) -> list[tuple[tuple[int, ...], Fraction]]:
    """Nonzero integer vectors v (one of each pair +-v) with v G v^T <= bound.

    Fincke-Pohst enumeration over the exact LDL^T decomposition.  Returns
    (v, norm) pairs sorted by norm then v.
    """
    n = G.rows
    if not is_positive_definite(G):
        raise ShapeError("short vector enumeration needs a positive definite matrix")
    bound = Fraction(bound)
    # q[i][i] = d_i, q[i][j] = l_ji for j > i, so Q(x) = sum d_i (x_i + sum_j q_ij x_j)^2
    q = [[Fraction(0)] * n for _ in range(n)]
    a = [[G[i, j] for j in range(n)] for i in range(n)]
    for i in range(n):
        d = a[i][i]
        q[i][i] = d
        for j in range(i + 1, n):
            q[i][j] = a[i][j] / d
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= q[i][j] * a[i][k]
    qf = [[float(x) for x in row] for row in q]
    out = []
    x = [0] * n
    slack = 1e-9 * (1 + float(bound))

    def rec(i, remaining):
        centre = -sum(qf[i][j] * x[j] for j in range(i + 1, n))
        width = (max(remaining, 0.0) / qf[i][i]) ** 0.5
        lo, hi = int(centre - width) - 1, int(centre + width) + 1
        for xi in range(lo, hi + 1):
            r = remaining - qf[i][i] * (xi - centre) ** 2
            if r < -slack:
                continue
            x[i] = xi
            if i == 0:
                if any(x):
                    out.append(tuple(x))
            else:
                rec(i - 1, r)
        x[i] = 0

    rec(n - 1, float(bound))
    seen = set()
    result = []
    for v in out:
        if tuple(-c for c in v) in seen:
            continue
        norm = quadratic_form(G, v)
        if 0 < norm <= bound:
            seen.add(v)
            result.append((v, norm))
    result.sort(key=lambda p: (p[1], p[0]))
    return result


def minimum_and_kissing(G: RatMatrix) -> tuple[Fraction, int]:
    """Minimal norm and the number of minimal vectors (counting +-v)."""
    bound = min(G[i, i] for i in range(G.rows))
    vecs = short_vectors(G, bound)
    mu = min(norm for _, norm in vecs)
    return mu, 2 * sum(1 for _, norm in vecs if norm == mu)

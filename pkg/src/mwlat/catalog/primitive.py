"""Search for a root of a minimal polynomial among small field elements."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import BudgetError, DimensionError
from ..numeric import evalComplex
from ..polyring.univariate import UniPoly
from ..towerfield import TowerField, verifyRoot


def power_basis(field: TowerField) -> list:
    """Basis in the order of TowerElement.flat()."""
    if field.depth == 0:
        return [field.one()]
    prev = power_basis(field.subfield(field.depth - 1))
    g = field.gen(field.names()[-1])
    d = field.levels[-1].degree
    return [field(b) * g ** k for k in range(d) for b in prev]


def _vectors(n: int, total: int, bound: int):
    """Integer vectors of length n with sum |c_i| = total, |c_i| <= bound, lexicographic."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for c in range(-min(bound, total), min(bound, total) + 1):
        rest = total - abs(c)
        if rest > (n - 1) * bound:
            continue
        for tail in _vectors(n - 1, rest, bound):
            yield (c,) + tail


@dataclass
class RootSearch:
    found: object
    coefficients: tuple | None
    candidates: int
    exhausted: bool

    def to_json(self) -> dict:
        return {
            "found": None if self.found is None else str(self.found),
            "coefficients": None if self.coefficients is None else list(self.coefficients),
            "candidates": self.candidates, "exhausted": self.exhausted,
        }


def findPrimitiveRoot(g: UniPoly, field: TowerField, searchBound: int, max_candidates: int = 200000) -> RootSearch:
    """First root of g of the form sum c_i b_i over the power basis, |c_i| <= searchBound.

    Candidates are ordered by sum |c_i|, then lexicographically.  A float
    screen discards most of them; survivors are checked exactly.
    """
    total_degree = 1
    for lev in field.levels:
        total_degree *= lev.degree
    if g.degree() != total_degree:
        raise DimensionError(f"deg g = {g.degree()} but the field has degree {total_degree}")
    basis = power_basis(field)
    approx = [complex(evalComplex(b, 64)) for b in basis]
    coeffs = [float(c) for c in g.coeffs]
    scale = max(abs(c) for c in coeffs)
    n = len(basis)
    seen = 0
    for total in range(1, n * searchBound + 1):
        for vec in _vectors(n, total, searchBound):
            seen += 1
            if seen > max_candidates:
                return RootSearch(None, None, seen - 1, False)
            z = sum(c * b for c, b in zip(vec, approx) if c)
            acc = 0j
            mag = 0.0
            for c in reversed(coeffs):
                acc = acc * z + c
                mag = mag * abs(z) + abs(c)
            if abs(acc) > 1e-6 * max(mag, scale):
                continue
            elem = sum((field(c) * b for c, b in zip(vec, basis) if c), field.zero())
            if verifyRoot(g, elem):
                return RootSearch(elem, vec, seen, False)
    return RootSearch(None, None, seen, True)


def require_budget(result: RootSearch) -> RootSearch:
    if not result.exhausted and result.found is None:
        raise BudgetError(f"search stopped after {result.candidates} candidates")
    return result

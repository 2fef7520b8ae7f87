"""Surface invariants and the lattice data table for m dividing 360."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..errors import DomainError, InconsistencyError

FIBER_BY_RESIDUE = {
    0: ("regular", "none", 1),
    1: ("II*", "E8", 1),
    2: ("IV*", "E6", 3),
    3: ("I0*", "D4", 4),
    4: ("IV", "A2", 3),
    5: ("II", "none", 1),
}


@dataclass(frozen=True)
class SurfaceInvariants:
    m: int
    chi: int
    fiberAtInfinity: str
    trivialLatticeType: str
    trivialDet: int
    rank: int

    def to_json(self) -> dict:
        return {
            "m": self.m, "chi": self.chi, "fiber_at_infinity": self.fiberAtInfinity,
            "trivial_lattice": self.trivialLatticeType, "trivial_det": self.trivialDet, "rank": self.rank,
        }


@dataclass(frozen=True)
class Component:
    """One summand L_base[scale], its tilde image, or an H-type piece."""

    kind: str  # "L", "~L" or "H"
    base: int
    scale: int = 1

    def __str__(self):
        core = f"L{self.base}" if self.kind != "H" else f"H{self.base}"
        core += f"[{self.scale}]" if self.scale != 1 else ""
        return "~" + core if self.kind == "~L" else core


@dataclass(frozen=True)
class LatticeDescriptor:
    name: str
    rank: int
    det: Fraction
    minNorm: Fraction | None
    kissing: int | None
    components: tuple = ()
    orthogonal: bool = True  # False when the printed structure uses "+" (not a direct sum)

    def to_json(self) -> dict:
        from ..exact import rat_to_str
        return {
            "name": self.name, "rank": self.rank, "det": rat_to_str(self.det),
            "min_norm": None if self.minNorm is None else rat_to_str(self.minNorm),
            "kissing": self.kissing,
        }


def _row(name, rank, det, mu, tau, parts=(), orthogonal=True):
    comps = tuple(Component(*p) for p in parts)
    return LatticeDescriptor(name, rank, Fraction(det), None if mu is None else Fraction(mu), tau,
                             comps, orthogonal)


_F = Fraction
LATTICE_TABLE: dict = {
    1: _row("0", 0, 0, None, None),
    2: _row("A2*", 2, _F(1, 3), _F(2, 3), 6),
    3: _row("D4*", 4, _F(1, 4), 1, 24),
    4: _row("E6*", 6, _F(1, 3), _F(4, 3), 54),
    5: _row("E8", 8, 1, 2, 240),
    6: _row("E8", 8, 1, 2, 240),
    8: _row("L4[2]", 6, _F(2**6, 3), _F(8, 3), 54, [("L", 4, 2)]),
    9: _row("L9", 10, _F(3**5, 4), 3, 240),
    10: _row("L5[2]+L2[5]", 10, _F(2**8 * 5**2, 3), _F(10, 3), 6, [("L", 5, 2), ("L", 2, 5)]),
    12: _row("L6[2]+L4[3]+~L4[3]+H3", 16, 2**4 * 3**4, 4, 1848,
             [("L", 6, 2), ("L", 4, 3), ("~L", 4, 3), ("H", 3)], False),
    15: _row("L5[3]+L3[5]", 12, _F(3**8 * 5**4, 4), 5, 24, [("L", 5, 3), ("L", 3, 5)]),
    18: _row("L9[2]+~L9[2]+L6[3]", 20, 2**12 * 3**10, 6, 674,
             [("L", 9, 2), ("~L", 9, 2), ("L", 6, 3)], False),
    20: _row("L5[4]+L4[5]", 14, _F(2**16 * 5**6, 3), _F(20, 3), 54, [("L", 5, 4), ("L", 4, 5)]),
    24: _row("L12[2]+H4", 24, 2**20 * 3**10, 8, 2040, [("L", 12, 2), ("H", 4)], False),
    30: _row("L6[5]+L5[6]+~L5[6]", 24, 2**16 * 3**16 * 5**8, 10, 240,
             [("L", 6, 5), ("L", 5, 6), ("~L", 5, 6)]),
    36: _row("L18[2]+L12[3]", 28, 2**28 * 3**22, 12, 2280, [("L", 18, 2), ("L", 12, 3)], False),
    40: _row("L5[8]+L4[10]", 14, _F(2**30 * 5**6, 3), _F(40, 3), 54, [("L", 5, 8), ("L", 4, 10)]),
    45: _row("L9[5]+L5[9]", 18, _F(3**21 * 5**10, 4), 15, 240, [("L", 9, 5), ("L", 5, 9)]),
    60: _row("L12[5]+L5[12]+~L5[12]+H5", 48, 2**52 * 3**36 * 5**20, 20, 1848,
             [("L", 12, 5), ("L", 5, 12), ("~L", 5, 12), ("H", 5)]),
    72: _row("L24[3]+L18[4]", 36, 2**56 * 3**38, 24, 2472, [("L", 24, 3), ("L", 18, 4)], False),
    90: _row("L18[5]+L5[18]+~L5[18]", 36, 2**28 * 3**42 * 5**20, 30, 672,
             [("L", 18, 5), ("L", 5, 18), ("~L", 5, 18)]),
    120: _row("L24[5]+L5[24]+~L5[24]+H5[2]", 56, 2**100 * 3**44 * 5**28, 40, 2040,
              [("L", 24, 5), ("L", 5, 24), ("~L", 5, 24), ("H", 5, 2)]),
    180: _row("L36[5]+L5[36]+~L5[36]+H5[3]", 60, 2**76 * 3**86 * 5**32, 60, 2280,
              [("L", 36, 5), ("L", 5, 36), ("~L", 5, 36), ("H", 5, 3)]),
    360: _row("L72[5]+L5[72]+~L5[72]+H5[6]", 68, 2**136 * 3**102 * 5**40, 120, 2472,
              [("L", 72, 5), ("L", 5, 72), ("~L", 5, 72), ("H", 5, 6)]),
}


def chiFor(m: int) -> int:
    if m < 1:
        raise DomainError("m must be positive")
    return m // 6 if m % 6 == 0 else m // 6 + 1


def expectedLattice(m: int) -> LatticeDescriptor:
    """Table row for m | 360, otherwise the row for gcd(m, 360) rescaled."""
    if m < 1:
        raise DomainError("m must be positive")
    if m in LATTICE_TABLE:
        return LATTICE_TABLE[m]
    m1 = gcd(m, 360)
    m2 = m // m1
    base = LATTICE_TABLE[m1]
    return LatticeDescriptor(
        f"L{m1}[{m2}]", base.rank, base.det * m2 ** base.rank,
        None if base.minNorm is None else base.minNorm * m2, base.kissing,
        (Component("L", m1, m2),),
    )


def invariantsFor(m: int) -> SurfaceInvariants:
    fiber, trivial, tdet = FIBER_BY_RESIDUE[m % 6]
    return SurfaceInvariants(m, chiFor(m), fiber, trivial, tdet, expectedLattice(m).rank)


def shiodaTateRank(picard: int, reducibleFiberComponents=()) -> int:
    """picard - 2 - sum (m_v - 1)."""
    if picard < 2:
        raise InconsistencyError("Picard number must be at least 2")
    counts = list(reducibleFiberComponents)
    if any(c < 2 for c in counts):
        raise InconsistencyError("a reducible fibre has at least two components")
    rank = picard - 2 - sum(c - 1 for c in counts)
    if rank < 0:
        raise InconsistencyError(f"negative Mordell-Weil rank {rank}")
    return rank


# internal consistency of the table


def _component_data(c: Component):
    row = expectedLattice(c.base)
    mu = None if row.minNorm is None else row.minNorm * c.scale
    return row.rank, row.det * c.scale ** row.rank, mu, row.kissing


def compose_direct_sum(components) -> tuple:
    """(rank, det, min norm, kissing) of an orthogonal sum of scaled rows."""
    data = [_component_data(c) for c in components]
    rank = sum(d[0] for d in data)
    det = Fraction(1)
    for d in data:
        det *= d[1]
    mu = min(d[2] for d in data)
    tau = sum(d[3] for d in data if d[2] == mu)
    return rank, det, mu, tau


@dataclass(frozen=True)
class TableCheck:
    m: int
    quantity: str
    printed: object
    recomputed: object

    @property
    def ok(self) -> bool:
        return self.printed == self.recomputed


def checkable_rows() -> list[int]:
    # only orthogonal sums of L-type pieces can be recomputed from other rows
    return [m for m, row in sorted(LATTICE_TABLE.items())
            if row.components and row.orthogonal and all(c.kind != "H" for c in row.components)]


def tableConsistency() -> list[TableCheck]:
    out = []
    for m in checkable_rows():
        row = LATTICE_TABLE[m]
        rank, det, mu, tau = compose_direct_sum(row.components)
        out += [
            TableCheck(m, "rank", row.rank, rank),
            TableCheck(m, "det", row.det, det),
            TableCheck(m, "min_norm", row.minNorm, mu),
            TableCheck(m, "kissing", row.kissing, tau),
        ]
    return out


def trivial_det_rule(m: int) -> int:
    r = m % 6
    if r in (0, 1, 5):
        return 1
    if r in (2, 4):
        return 3
    return 4

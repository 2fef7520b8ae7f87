"""Generator points, printed Gram matrices and polynomial data per surface.

Everything here is written as Python formulas over the tower fields of
:mod:`fields`; :mod:`build` serialises it to the shipped JSON files.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

from ..exact import RatMatrix, block_diagonal
from ..polyring.univariate import QQ, UniPoly
from ..sections import Section, chordSubtract
from . import fields

F = Fraction


@dataclass
class NamedPoint:
    name: str
    section: Section
    note: str = ""


@dataclass
class RootValue:
    """value is a root of the polynomial `poly` (a key of phiData, or inline)."""

    name: str
    value: object
    poly: str
    power: int = 1  # check poly(value ** power) == 0
    note: str = ""


@dataclass
class CatalogEntry:
    m: int
    fieldName: str
    field: object
    points: list = dc_field(default_factory=list)
    extraPoints: list = dc_field(default_factory=list)
    gram: RatMatrix | None = None
    phiData: dict = dc_field(default_factory=dict)
    minpoly: UniPoly | None = None
    rootValues: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)
    errataPoints: list = dc_field(default_factory=list)  # printed forms that fail onCurve

    def sections(self) -> list[Section]:
        return [p.section for p in self.points]


def _q(coeffs, var="x") -> UniPoly:
    return UniPoly([F(c) for c in coeffs], var)


def _from_top(coeffs, var="x") -> UniPoly:
    return _q(list(reversed(coeffs)), var)


def _mat(rows, scale=1) -> RatMatrix:
    return RatMatrix([[F(x) * scale for x in r] for r in rows])


# printed Gram matrices

M2 = [[2, -1], [-1, 2]]
M3 = [[2, 1, 1, 1], [1, 2, 0, 0], [1, 0, 2, 0], [1, 0, 0, 2]]
M4 = [[4, -2, -2, 1, 1, -2], [-2, 4, 1, -2, 1, 1], [-2, 1, 4, -2, 1, 1],
      [1, -2, -2, 4, -2, 1], [1, 1, 1, -2, 4, -2], [-2, 1, 1, 1, -2, 4]]
M5 = [[2, 1, 1, 1, 0, 0, 0, 1], [1, 2, 0, 1, 1, 1, 0, 1], [1, 0, 2, 1, 0, -1, 1, 0],
      [1, 1, 1, 2, 1, 0, 1, 0], [0, 1, 0, 1, 2, 0, 1, 0], [0, 1, -1, 0, 0, 2, -1, 1],
      [0, 0, 1, 1, 1, -1, 2, -1], [1, 1, 0, 0, 0, 1, -1, 2]]
M6 = [[2, 0, 0, 0, 1, 0, 0, 1], [0, 2, 1, 0, 1, 1, 0, 0], [0, 1, 2, 1, 1, 0, 0, 1],
      [0, 0, 1, 2, 1, 0, 0, 1], [1, 1, 1, 1, 2, 0, 0, 1], [0, 1, 0, 0, 0, 2, 0, 0],
      [0, 0, 0, 0, 0, 0, 2, 1], [1, 0, 1, 1, 1, 0, 1, 2]]
M8 = [[4, -2, -2, -2, -2, 1], [-2, 4, 1, 1, 1, 1], [-2, 1, 4, 1, 1, -2],
      [-2, 1, 1, 4, 1, -2], [-2, 1, 1, 1, 4, 1], [1, 1, -2, -2, 1, 4]]
_h = F(3, 2)
M9 = [
    [3, -_h, -_h, _h, -_h, -_h, -_h, -_h, -_h, F(1, 2)],
    [-_h, 3, 0, 0, 0, 0, 0, 0, 0, -1],
    [-_h, 0, 3, 0, 1, 1, 1, 1, 1, 0],
    [_h, 0, 0, 3, -1, -1, -1, -1, -1, -1],
    [-_h, 0, 1, -1, 3, 0, 1, 1, 1, 1],
    [-_h, 0, 1, -1, 0, 3, 1, 1, 1, -1],
    [-_h, 0, 1, -1, 1, 1, 3, 1, 1, 1],
    [-_h, 0, 1, -1, 1, 1, 1, 3, 0, 0],
    [-_h, 0, 1, -1, 1, 1, 1, 0, 3, -1],
    [F(1, 2), -1, 0, -1, 1, -1, 1, 0, -1, 3],
]
M12 = [
    [4, 2, 0, 0, 0, 2, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 4, 1, 1, 1, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 4, 0, 0, -2, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0],
    [0, 1, 0, 4, -2, 0, -2, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, -2, 4, 0, 1, -2, -1, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, -2, 0, 0, 4, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0],
    [-1, -2, 0, -2, 1, 0, 4, -2, -1, 1, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 1, -2, 0, -2, 4, 0, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, -1, 0, -1, 0, 4, -2, 0, 0, 0, 2, 0, 2],
    [0, 0, 0, 0, 1, 0, 1, -1, -2, 4, 0, 0, -2, 0, -2, 0],
    [0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 4, -2, 0, 2, 0, -2],
    [0, 0, 1, 0, 0, -1, 0, 0, 0, 0, -2, 4, -2, 0, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, -2, 4, -2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, -2, 4, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 2, 0, 0, 4, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, -2, 0, 0, 0, -2, 4],
]

# row 10 has a 1 in column 5 but row 5 has a 0 in column 10; only the
# symmetric choice 1 gives a positive definite matrix (det 1296)
M12_CORRECTED = [r[:] for r in M12]
M12_CORRECTED[4][9] = 1

PRINTED_GRAMS = {
    2: _mat(M2, F(1, 3)), 3: _mat(M3, F(1, 2)), 4: _mat(M4, F(1, 3)), 5: _mat(M5),
    6: _mat(M6), 8: _mat(M8, F(2, 3)), 9: _mat(M9), 12: _mat(M12_CORRECTED),
}
RAW_PRINTED_GRAMS = dict(PRINTED_GRAMS)
RAW_PRINTED_GRAMS[12] = _mat(M12)
PRINTED_GRAMS[10] = block_diagonal([PRINTED_GRAMS[2] * 5, PRINTED_GRAMS[5] * 2])


def _section(m, bundle, x, y, u=1):
    return Section.make(m, x, y, bundle.field, u)


# m = 2


def entry2() -> CatalogEntry:
    B = fields.k2()
    z3 = B["zeta3"]
    q0 = _section(2, B, [-1], [0, 1])
    q1 = _section(2, B, [-z3], [0, 1])
    q2 = _section(2, B, [-z3 ** 2], [0, 1])
    twice = chordSubtract(q2, q0)
    printed = _section(2, B, [-z3, 0, -z3 * F(4, 3)], [0, B["i_sqrt3"], 0, B["i_sqrt3"] * F(8, 9)])
    e = CatalogEntry(2, B.name, B.field)
    e.points = [NamedPoint("P1", q0, "(-1, t)"), NamedPoint("Q2", q2, "(-zeta3^2, t)")]
    e.extraPoints = [
        NamedPoint("Q1", q1, "(-zeta3, t)"),
        NamedPoint("P2", printed, "narrow-lattice point listed next to P1"),
        NamedPoint("Q2-Q0", twice, "chord difference; coincides with P2"),
    ]
    e.gram = PRINTED_GRAMS[2]
    e.minpoly = _q([1, 1, 1])
    e.rootValues = [RootValue("zeta3", z3, "g")]
    e.phiData = {"g": e.minpoly}
    return e


# m = 3


def _three_points(B, m=3):
    z3, cb = B["zeta3"], B["cbrt2"]
    c2 = cb * cb
    w = 2 * z3 + 1  # i sqrt3
    return [
        NamedPoint("P1", _section(m, B, [0, -z3 ** 2], [1])),
        NamedPoint("P2", _section(m, B, [0, -1], [1])),
        NamedPoint("P3", _section(m, B, [-c2, -1], [-w, -w * cb])),
        NamedPoint("P4", _section(m, B, [-z3 ** 2 * c2, -1], [w, (z3 ** 2 - 1) * cb]),
                   "t coefficient of y uses 2^(1/3)"),
    ]


def entry3() -> CatalogEntry:
    B = fields.k3()
    z3, cb = B["zeta3"], B["cbrt2"]
    c2 = cb * cb
    isq = 2 * z3 + 1
    e = CatalogEntry(3, B.name, B.field)
    e.points = _three_points(B)
    e.errataPoints = [NamedPoint("P4", _section(3, B, [-z3 ** 2 * c2, -1], [isq, (z3 ** 2 - 1) * c2]),
                                 "t coefficient of y printed with 2^(2/3)")]
    e.gram = PRINTED_GRAMS[3]
    u = UniPoly.gen("u")
    phi = 27 * u ** 24 + 108 * u ** 18 - 126 * u ** 12 - 8 * u ** 6 - 1
    U = UniPoly.gen("U")
    e.phiData = {
        "phi_u": phi,
        "phi_U": 27 * U ** 4 + 108 * U ** 3 - 126 * U ** 2 - 8 * U - 1,
        "phi_factors_Q": [
            u - 1, u + 1, u ** 2 + u + 1, u ** 2 - u + 1, _q([1, 0, -3, 0, 3, 0, 3], "u"),
            _q([1, -3, 6, -9, 12, -9, 3], "u"), _q([1, 3, 6, 9, 12, 9, 3], "u"),
        ],
        "g": _from_top([1, -3, 0, 5, 0, -3, 1]),
    }
    e.minpoly = e.phiData["g"]
    Uk = UniPoly.gen("U", B.field)
    e.phiData["phi_U_split_printed"] = [Uk - 1] + [Uk + (z3 ** k * c2 + 1) ** 6 / 27 for k in range(3)]
    e.phiData["phi_U_split"] = [Uk - 1] + [Uk + (z3 ** k * cb + 1) ** 6 / 27 for k in range(3)]
    e.rootValues = [
        RootValue("u1_printed", -z3, "phi_u"),
        RootValue("u2", B.field(1), "phi_u"),
        RootValue("u3_printed", isq * (c2 + 1) / 3, "phi_u", note="expected to fail"),
        RootValue("u3", isq * (cb + 1) / 3, "phi_u", note="specialisation of P3"),
        RootValue("u4_printed", -isq * (z3 * cb + 1) / 3, "phi_u"),
    ]
    return e


# m = 4


def entry4() -> CatalogEntry:
    B = fields.k4()
    a, s3, z12, z3, z6, i = B["alpha1"], B["sqrt3"], B["zeta12"], B["zeta3"], B["zeta6"], B["i"]
    e = CatalogEntry(4, B.name, B.field)

    def P(name, x, y):
        return NamedPoint(name, _section(4, B, x, y))

    e.points = [
        P("P1", [-1], [0, 0, 1]),
        P("P2", [-z3], [0, 0, 1]),
        P("P3", [s3 - 1, a], [s3 * a ** 2 / 2, a ** 3 / 2, 1]),
        P("P4", [z3 * (s3 - 1), z12 * a], [-s3 * a ** 2 / 2, i * a ** 3 / 2, 1]),
        P("P5", [z3 ** 2 * (s3 - 1), z6 * a], [s3 * a ** 2 / 2, -a ** 3 / 2, 1]),
        P("P6", [s3 - 1, i * a], [-s3 * a ** 2 / 2, -i * a ** 3 / 2, 1]),
    ]
    e.gram = PRINTED_GRAMS[4]
    A = UniPoly.gen("a")
    e.phiData = {
        "phi_a": A ** 24 + 17280 * A ** 12 - 110592,
        "phi_factors_Q": [A ** 8 + 24 * A ** 4 - 48,
                          A ** 16 - 24 * A ** 12 + 624 * A ** 8 + 1152 * A ** 4 + 2304],
        "g": _from_top([1, -8, 38, -120, 272, -436, 472, -264, -62, 216, -128, -8, 56, -48, 32, -16, 4]),
    }
    e.minpoly = e.phiData["g"]
    # a^24 + 17280 a^12 - 110592 = (a^12 - alpha1^12)(a^12 - (zeta24 beta)^12),
    # zeta24^12 = -1 and beta^12 = 24 sqrt3 (sqrt3 + 1)^6
    Ak = UniPoly.gen("a", B.field)
    e.phiData["phi_a_split"] = [Ak - z12 ** j * a for j in range(12)] + \
        [Ak ** 12 + 24 * s3 * (s3 + 1) ** 6]
    e.rootValues = [RootValue(f"sp_inf(P{k})", e.points[k - 1].section.x.coeff(1), "phi_a")
                    for k in range(3, 7)]
    return e


# m = 5: matrix and polynomial data only


def quintic_roots(B=None) -> dict:
    """v_1 ... v_8 as elements of the degree-32 real tower."""
    B = B or fields.quintic_tower()
    s5, d1 = B["sqrt5"], B["delta1"]
    f = B.field
    rad1 = d1 * (76074 * s5 + 170252)  # 31 sqrt(654205350 + 292569486 sqrt5)
    rad3 = 31 * 31 * 154452 * s5 / rad1  # 31 sqrt(654205350 - 292569486 sqrt5)
    mult = 930249 - 416020 * s5
    rad5 = rad1 * mult  # 31 sqrt(157776180962550 - 70559653172514 sqrt5)
    # sqrt(A + B sqrt5) sqrt(A - B sqrt5) = sqrt(A^2 - 5 B^2)
    big = F(157776180962550) ** 2 - 5 * F(70559653172514) ** 2
    root = _isqrt_over_5(big)
    rad7 = 31 * 31 * root * s5 / rad5  # 31 sqrt(157776180962550 + 70559653172514 sqrt5)
    base1 = 564300 + 252495 * s5
    base3 = 564300 - 252495 * s5
    base5 = -275338800 + 123135255 * s5
    base7 = -275338800 - 123135255 * s5
    return {
        "v1": base1 + rad1, "v2": base1 - rad1, "v3": base3 + rad3, "v4": base3 - rad3,
        "v5": base5 - rad5, "v6": base5 + rad5, "v7": base7 + rad7, "v8": base7 - rad7,
        "v5_alt": base5 + d1 * (76074 * s5 + 170252),
        "_field": f,
    }


def _isqrt_over_5(n: Fraction) -> int:
    """r with r^2 * 5 = n (n a positive integer)."""
    from math import isqrt
    q = int(n) // 5
    r = isqrt(q)
    if r * r * 5 != n:
        raise ValueError("not of the form 5 r^2")
    return r


def entry5() -> CatalogEntry:
    B = fields.quintic_tower()
    e = CatalogEntry(5, B.name, B.field)
    e.gram = PRINTED_GRAMS[5]
    U = UniPoly.gen("U")
    V = UniPoly.gen("V")
    e.phiData = {
        "phi1_U": U ** 20 - 135432000 * U ** 15 + 56473225380000 * U ** 10 + 2176717249713600000 * U ** 5 + 583200000,
        "phi2_U": U ** 20 + 66081312000 * U ** 15 - 4811512860000 * U ** 10 + 1167566400000 * U ** 5 + 583200000,
        "F1_V": V ** 4 - 2257200 * V ** 3 + 15687007050 * V ** 2 + 10077394674600 * V + 45,
        "F2_V": V ** 4 + 1101355200 * V ** 3 - 1336531350 * V ** 2 + 5405400 * V + 45,
    }
    roots = quintic_roots(B)
    e.rootValues = [RootValue(k, roots[k], "F1_V" if k in ("v1", "v2", "v3", "v4") else "F2_V")
                    for k in ("v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8")]
    e.rootValues.append(RootValue("v5_printed_delta_form", roots["v5_alt"], "F2_V",
                                  note="expected to fail: reuses the v1 multiplier"))
    e.notes.append("generator coordinates are external; only linear algebra and roots are checked")
    return e


# m = 6


def _six_points(B):
    z, z3, s3, i, cb = B["zeta12"], B["zeta3"], B["sqrt3"], B["i"], B["cbrt2"]
    c2 = cb * cb
    zi = z ** 11
    h = F(3, 2)
    a5 = -(z3 * c2 + 2 * z3 ** 2 * cb + 2)
    b5 = 2 * c2 + 3 * z3 * cb + 4 * z3 ** 2
    g5 = -(z3 ** 2 * c2 + 2 * cb + 2 * z3)
    c5 = -2 * s3 * (z * c2 - zi * cb - h * i)
    d5 = -s3 * (5 * i * c2 - 6 * z * cb + 8 * zi)
    e5 = -s3 * (-5 * zi * c2 - 6 * i * cb + 8 * z)
    h5 = 2 * s3 * (z * c2 - zi * cb - h * i)
    a8 = -z3 ** 2 * (c2 + 2 * cb + 2)
    b8 = -(2 * c2 + 3 * cb + 4)
    g8 = -z3 * (c2 + 2 * cb + 2)
    c8 = 2 * i * s3 * (c2 + cb + h)
    d8 = -s3 * z * (5 * c2 + 6 * cb + 8)
    e8 = s3 * zi * (5 * c2 + 6 * cb + 8)
    h8 = 2 * i * s3 * (c2 + cb + h)
    rows = [
        ("P1", [-1], [0, 0, 0, -1], ""),
        ("P2", [0, -cb], [1, 0, 0, -1], ""),
        ("P3", [-c2, 0, -z3 ** 2], [-i * s3, 0, -i * s3 * z3 ** 2 * cb], ""),
        ("P4", [-c2, 0, -1], [i * s3, 0, i * s3 * cb], ""),
        ("P5", [g5, b5, a5], [h5, e5, d5, c5], "signs of three y coefficients corrected"),
        ("P6", [-c2, -s3 * z * cb, 2 * z3 ** 2], [i * s3, 3 * z3 * c2, -2 * s3 * zi * cb, -3], ""),
        ("P7", [-c2, s3 * z * cb, 2 * z3 ** 2], [-i * s3, 3 * z3 * c2, 2 * s3 * zi * cb, -3], ""),
        ("P8", [g8, b8, a8], [h8, e8, d8, c8], "sign of the t^3 coefficient corrected"),
    ]
    return [NamedPoint(n, _section(6, B, x, y), note) for n, x, y, note in rows]


def _six_points_printed(B):
    z, s3, i, cb = B["zeta12"], B["sqrt3"], B["i"], B["cbrt2"]
    z3 = B["zeta3"]
    c2 = cb * cb
    zi = z ** 11
    h = F(3, 2)
    a5 = -(z3 * c2 + 2 * z3 ** 2 * cb + 2)
    b5 = 2 * c2 + 3 * z3 * cb + 4 * z3 ** 2
    g5 = -(z3 ** 2 * c2 + 2 * cb + 2 * z3)
    c5 = -2 * s3 * (z * c2 - z * cb - h * i)
    d5 = -s3 * (5 * i * c2 - 6 * z * cb + 8 * zi)
    e5 = -s3 * (5 * zi * c2 - 6 * i * cb - 8 * z)
    h5 = 2 * s3 * (z * c2 + zi * cb - h * i)
    a8 = -z3 ** 2 * (c2 + 2 * cb + 2)
    b8 = -(2 * c2 + 3 * cb + 4)
    g8 = -z3 * (c2 + 2 * cb + 2)
    c8 = -2 * i * s3 * (c2 + cb + h)
    d8 = -s3 * z * (5 * c2 + 6 * cb + 8)
    e8 = s3 * zi * (5 * c2 + 6 * cb + 8)
    h8 = 2 * i * s3 * (c2 + cb + h)
    return [
        NamedPoint("P5", _section(6, B, [g5, b5, a5], [h5, e5, d5, c5]), "coefficients as printed"),
        NamedPoint("P8", _section(6, B, [g8, b8, a8], [h8, e8, d8, c8]), "coefficients as printed"),
    ]


def entry6() -> CatalogEntry:
    B = fields.k6()
    e = CatalogEntry(6, B.name, B.field)
    e.points = _six_points(B)
    e.errataPoints = _six_points_printed(B)
    e.gram = PRINTED_GRAMS[6]
    U = UniPoly.gen("U")
    e.phiData = {
        "phi6_factors_U": [
            U - 1, 4 * U + 1, 729 * U ** 3 - 17739 * U ** 2 - 189 * U - 1,
            46656 * U ** 3 + 3888 * U ** 2 + 1728108 * U + 1,
            2176782336 * U ** 6 + 49703196672 * U ** 5 + 4643867821824 * U ** 4 - 606248250624 * U ** 3
            + 273143664 * U ** 2 - 43848 * U + 1,
            2176782336 * U ** 6 + 766590179328 * U ** 5 + 870778439424 * U ** 4 + 333394631424 * U ** 3
            - 2638190736 * U ** 2 + 99673848 * U + 1,
        ],
        "g": _from_top([1, 0, -3, -8, -6, 12, 47, 78, 78, 50, 21, 6, 1]),
    }
    for k, p in enumerate(e.phiData["phi6_factors_U"], 1):
        e.phiData[f"phi6_{k}"] = p
    e.minpoly = e.phiData["g"]
    z, s3, i, cb, z3 = B["zeta12"], B["sqrt3"], B["i"], B["cbrt2"], B["zeta3"]
    c2 = cb * cb
    us = {
        "u1": (B.field(1), 1),
        "u2": ((1 + i) * cb / 2, 2),
        "u3": ((1 + cb) / s3, 3),
        "u4": ((1 + z3 * cb) / s3, 3),
        "u5": ((i - 1) * (2 - z3 ** 2 * cb) / (2 * s3), 4),
        "u6": (((1 + s3) * cb - 2) / (2 * s3), 5),
        "u7": (((1 - s3) * cb - 2) / (2 * s3), 5),
        "u8": ((i + 1) * (1 + s3 + cb) / (2 * s3), 6),
    }
    e.rootValues = [RootValue(k, v, f"phi6_{j}", power=12) for k, (v, j) in us.items()]
    # the twelfth powers as printed next to each closed form
    e.phiData["u12_printed"] = {
        "u3": (46 * c2 + 58 * cb + 73) / 9,
        "u4": (46 * z3 * c2 + 58 * z3 * cb + 73) / 36,
        "u5": (80 * z3 * c2 - 100 * z3 ** 2 * cb - 1) / 36,
        "u6": ((337 + 194 * s3) * c2 - (314 + 182 * s3) * cb - (137 + 80 * s3)) / 36,
        "u7": ((337 - 194 * s3) * c2 - (314 - 182 * s3) * cb - (137 - 80 * s3)) / 36,
        "u8": -((1327 + 766 * s3) * c2 + 2 * (833 + 481 * s3) * cb + 2113 + 1220 * s3) / 36,
    }
    return e


# m = 8 and m = 10 by base change


def entry8() -> CatalogEntry:
    from ..sections import substitute_t_power
    src = entry4()
    e = CatalogEntry(8, src.fieldName, src.field)
    e.points = [NamedPoint(p.name.replace("P", "Q"), substitute_t_power(p.section, 2), f"{p.name}(t^2)")
                for p in src.points]
    e.gram = PRINTED_GRAMS[8]
    return e


def entry10() -> CatalogEntry:
    from ..sections import substitute_t_power
    src = entry2()
    e = CatalogEntry(10, src.fieldName, src.field)
    e.points = [NamedPoint(n, substitute_t_power(p.section, 5), f"{p.name}(t^5)")
                for n, p in zip(("Q1", "Q2"), src.points)]
    printed_q2 = substitute_t_power(src.extraPoints[1].section, 5)
    e.extraPoints = [NamedPoint("Q2_printed", printed_q2, "P2(t^5) of the m = 2 list")]
    e.gram = PRINTED_GRAMS[10]
    e.notes.append("the eight t^2 images of the m = 5 generators need external coordinates")
    return e


# m = 9: matrix, Phi factors and the base-changed m = 3 points


def entry9() -> CatalogEntry:
    from ..sections import substitute_t_power
    B = fields.k6()
    e = CatalogEntry(9, B.name, B.field)
    e.gram = PRINTED_GRAMS[9]
    e.extraPoints = [NamedPoint(p.name.replace("P", "Q"), substitute_t_power(p.section, 3), f"{p.name}(t^3)")
                     for p in _three_points(B)]
    u = UniPoly.gen("u")
    phi3 = _from_top([19683, 177147, 767637, 2145447, 4369626, 6889050, 8581788, 8345592, 6016437,
                      2740311, 216513, -614547, -198288, 349920, 419904, 180792, -8019, -43983,
                      -14661, 5589, 7614, 4158, 1620, 432, 27, -27, -9, -1], "u")
    phi4 = _from_top([19683, -177147, 767637, -2145447, 4369626, -6889050, 8581788, -8345592, 6016437,
                      -2740311, 216513, 614547, -198288, -349920, 419904, -180792, -8019, 43983,
                      -14661, -5589, 7614, -4158, 1620, -432, 27, 27, -9, 1], "u")
    e.phiData = {
        "Phi0": u ** 2 - 1,
        "Phi1": _q([1, 0, -3, 0, 3, 0, 3], "u"),
        "Phi2": _q([1, 0, -9, 0, 36, 0, -72, 0, 486, 0, 810, 0, 648, 0, 972, 0, 729, 0, 243], "u"),
        "Phi3": phi3,
        "Phi4": phi4,
    }
    z, s3, i, cb, z3 = B["zeta12"], B["sqrt3"], B["i"], B["cbrt2"], B["zeta3"]
    e.rootValues = [
        RootValue("v11", i * s3 / 3 * (cb + 1), "Phi1"),
        RootValue("v12", z * s3 / 3 * (cb + z3 ** 2), "Phi1"),
        RootValue("v13", i * s3 / 3 * (z3 ** 2 * cb + 1), "Phi1"),
    ]
    e.notes.append("generators Q5..Q10 need external coordinates")
    return e


# m = 12: matrix and the transform


def entry12() -> CatalogEntry:
    B = fields.k6()
    e = CatalogEntry(12, B.name, B.field)
    e.gram = PRINTED_GRAMS[12]
    e.notes.append("generator coordinates on the K3 surface are external")
    return e


BUILDERS = {2: entry2, 3: entry3, 4: entry4, 5: entry5, 6: entry6, 8: entry8, 9: entry9,
            10: entry10, 12: entry12}
CATALOG_MS = tuple(sorted(BUILDERS))


@lru_cache(maxsize=None)
def build_entry(m: int) -> CatalogEntry:
    return BUILDERS[m]()

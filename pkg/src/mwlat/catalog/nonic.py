"""Factorisations of the degree-80 factor of the m = 9 fundamental polynomial.

Phi_1 splits over K6 into six linear factors.  Phi_2 splits into six
cubics over K6, each a product of three linear factors over K6 with one
cube root adjoined.  Phi_3 is a product over l of nonics D_l, where D_l
is computed in K6(w_l) and descends to K6.  Phi_4(u) = -Phi_3(-u).
"""
from __future__ import annotations

from ..polyring.univariate import UniPoly
from ..towerfield import descend
from . import fields
from .points import build_entry

SIGNS = (1, -1)


def _phi(name):
    return build_entry(9).phiData[name]


def _lift(p: UniPoly, field) -> UniPoly:
    return UniPoly([field(c) for c in p.coeffs], p.var, field)


def _prod(polys):
    acc = polys[0]
    for p in polys[1:]:
        acc = acc * p
    return acc


def phi1_linear_factors():
    B = fields.k6()
    u = UniPoly.gen("u", B.field)
    vals = [r.value for r in build_entry(9).rootValues if r.poly == "Phi1"]
    return [u - s * v for v in vals for s in SIGNS]


def phi1_check() -> bool:
    B = fields.k6()
    return _prod(phi1_linear_factors()) * 3 == _lift(_phi("Phi1"), B.field)


def _phi2_groups(bundle):
    """(which, radicand sign, shift, scale): v = shift + scale * zeta3^i * r, r^3 = sign * rad_which."""
    s3, i = bundle["sqrt3"], bundle["i"]
    out = []
    for s in SIGNS:
        out.append((0, 1, s * i * s3 / 3, s * i * s3 / 3))
        out.append((1, s, s3 / 3 * i * s, s3 / 3))
        out.append((2, s, -s3 / 3 * i * s, s3 / 3))
    return out


def phi2_cubics() -> list[UniPoly]:
    B = fields.k6()
    z, cb = B["zeta12"], B["cbrt2"]
    rads = [cb * (cb - 1), z * cb * (cb + z ** 10), z * cb * (z ** 10 * cb + 1)]
    u = UniPoly.gen("u", B.field)
    out = []
    for which, sign, shift, scale in _phi2_groups(B):
        # prod_i (u - shift - scale zeta3^i r) = (u - shift)^3 - scale^3 r^3
        out.append((u - shift) ** 3 - scale ** 3 * rads[which] * sign)
    return out


def phi2_product_check() -> bool:
    B = fields.k6()
    return _prod(phi2_cubics()) * 243 == _lift(_phi("Phi2"), B.field)


def phi2_linear_check():
    """Each cubic equals the product of its three linear factors in K6(r)."""
    results = []
    cubics = phi2_cubics()
    for idx, (which, sign, _, _) in enumerate(_phi2_groups(fields.k6())):
        T = fields.nonic_cube_root_tower(which)
        _, _, shift, scale = _phi2_groups(T)[idx]
        r = T["cuberoot"] * sign
        z3 = T["zeta3"]
        u = UniPoly.gen("u", T.field)
        lin = [u - (shift + scale * z3 ** k * r) for k in range(3)]
        results.append((f"group{idx}", _prod(lin) == _lift(cubics[idx], T.field)))
    return results


def phi2_roots():
    """The eighteen roots as (label, element) pairs, grouped by tower."""
    out = []
    for idx, (which, sign, _, _) in enumerate(_phi2_groups(fields.k6())):
        T = fields.nonic_cube_root_tower(which)
        _, _, shift, scale = _phi2_groups(T)[idx]
        r = T["cuberoot"] * sign
        for k in range(3):
            out.append((f"group{idx}.{k}", shift + scale * T["zeta3"] ** k * r))
    return out


def _R(T, ell, j):
    z3, cb = T["zeta3"], T["cbrt2"]
    w = T[f"w{ell}"]
    return (z3 ** j * w * w + 2 * cb * z3 ** ell * w + 3 * z3 ** ((3 - ell - j) % 3) * (cb * cb + 2 * z3 ** ell)) / w


def phi3_nonic(ell: int) -> UniPoly:
    """D_l = prod_j ((u + B_l)^3 - R_lj / 9), descended to K6."""
    T = fields.nonic_w_tower((ell,))
    z3, cb = T["zeta3"], T["cbrt2"]
    u = UniPoly.gen("u", T.field)
    shift = (z3 ** ell * cb + 1) / 3
    top = _prod([(u + shift) ** 3 - _R(T, ell, j) / 9 for j in range(3)])
    K = fields.k6().field
    return UniPoly([descend(c, K) for c in top.coeffs], "u", K)


def phi3_product_check() -> bool:
    K = fields.k6().field
    return _prod([phi3_nonic(ell) for ell in range(3)]) * 19683 == _lift(_phi("Phi3"), K)


def phi4_reflection_check() -> bool:
    p3, p4 = _phi("Phi3"), _phi("Phi4")
    return p4 == -p3.compose(UniPoly([0, -1], "u"))


def phi3_linear_roots_numeric(prec: int = 128):
    """Residuals of Phi_3 at all 27 closed-form roots (mpmath evaluation)."""
    import mpmath
    with mpmath.workprec(prec + 32):
        return _phi3_residuals(prec)


def _phi3_residuals(prec):
    import mpmath
    from ..numeric import evalComplex
    T = fields.nonic_w_tower((0, 1, 2))
    z3c = evalComplex(T["zeta3"], prec)
    cbc = evalComplex(T["cbrt2"], prec)
    roots = []
    for ell in range(3):
        for j in range(3):
            R = evalComplex(_R(T, ell, j), prec)
            base = mpmath.cbrt(3) / 3 * mpmath.root(R, 3)
            for i in range(3):
                roots.append(((ell, i, j), z3c ** i * base - (z3c ** ell * cbc + 1) / 3))
    phi = _phi("Phi3")
    coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in phi.coeffs]
    out = []
    for key, r in roots:
        val = mpmath.polyval(list(reversed(coeffs)), r)
        scale = mpmath.polyval([abs(c) for c in reversed(coeffs)], abs(r))
        out.append((key, abs(val) / scale))
    return out

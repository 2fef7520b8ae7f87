"""The number fields used by the catalog, as explicit towers.

Each builder returns a :class:`FieldBundle`: the tower plus a dictionary of
named constants (roots of unity, radicals) written as explicit elements of
that tower.  Derived constants are always expressed through the tower
generators so there is exactly one value for, say, sqrt(3) per field.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from ..polyring.univariate import UniPoly
from ..towerfield import TowerElement, TowerField, verifyRoot

ZETA3 = complex(-0.5, 3 ** 0.5 / 2)
ZETA12 = complex(3 ** 0.5 / 2, 0.5)
CBRT2 = 2 ** (1 / 3)


@dataclass
class FieldBundle:
    name: str
    field: TowerField
    constants: dict = dc_field(default_factory=dict)

    def __getitem__(self, key: str) -> TowerElement:
        return self.constants[key]

    def __contains__(self, key: str) -> bool:
        return key in self.constants

    def checks(self) -> list[tuple[str, UniPoly, TowerElement]]:
        """Defining identities of the derived constants, for verifyRoot."""
        out = []
        for key, poly in _CONSTANT_POLYS.items():
            if key in self.constants:
                out.append((key, UniPoly(poly, "x"), self.constants[key]))
        return out


_CONSTANT_POLYS = {
    "zeta3": [1, 1, 1],
    "zeta6": [1, -1, 1],
    "zeta12": [1, 0, -1, 0, 1],
    "i": [1, 0, 1],
    "sqrt3": [-3, 0, 1],
    "sqrt2": [-2, 0, 1],
    "sqrt5": [-5, 0, 1],
    "cbrt2": [-2, 0, 0, 1],
    "cbrt3": [-3, 0, 0, 1],
}


def _zeta3_constants(f: TowerField) -> dict:
    z = f.gen("zeta3")
    i_sqrt3 = 2 * z + 1
    return {"zeta3": z, "zeta6": -z ** 2, "i_sqrt3": i_sqrt3}


def _zeta12_constants(f: TowerField) -> dict:
    z = f.gen("zeta12")
    sqrt3 = z + z ** 11
    return {
        "zeta12": z, "zeta6": z ** 2, "zeta3": z ** 4, "i": z ** 3,
        "sqrt3": sqrt3, "i_sqrt3": z ** 3 * sqrt3,
    }


@lru_cache(maxsize=None)
def k2() -> FieldBundle:
    """Q(zeta3)."""
    f = TowerField.rationals().extend("zeta3", [1, 1, 1], ZETA3)
    return FieldBundle("Q(zeta3)", f, _zeta3_constants(f))


@lru_cache(maxsize=None)
def k3() -> FieldBundle:
    """Q(zeta3)(2^(1/3))."""
    f = k2().field.extend("cbrt2", [-2, 0, 0, 1], CBRT2)
    c = _zeta3_constants(f)
    c["cbrt2"] = f.gen("cbrt2")
    return FieldBundle("Q(zeta3, 2^(1/3))", f, c)


def _zeta12_field() -> TowerField:
    return TowerField.rationals().extend("zeta12", [1, 0, -1, 0, 1], ZETA12)


@lru_cache(maxsize=None)
def k6() -> FieldBundle:
    """Q(zeta12)(2^(1/3))."""
    f = _zeta12_field().extend("cbrt2", [-2, 0, 0, 1], CBRT2)
    c = _zeta12_constants(f)
    c["cbrt2"] = f.gen("cbrt2")
    return FieldBundle("Q(zeta12)(2^(1/3))", f, c)


ALPHA1 = 2 ** 0.25 * 3 ** 0.125 * (3 ** 0.5 - 1) ** 0.5


@lru_cache(maxsize=None)
def k4() -> FieldBundle:
    """Q(zeta12)(alpha1) with alpha1^4 = 8 sqrt3 - 12."""
    base = _zeta12_field()
    sqrt3 = _zeta12_constants(base)["sqrt3"]
    f = base.extend("alpha1", [12 - 8 * sqrt3, 0, 0, 0, 1], ALPHA1)
    c = _zeta12_constants(f)
    c["alpha1"] = f.gen("alpha1")
    return FieldBundle("Q(zeta12)(alpha1)", f, c)


@lru_cache(maxsize=None)
def quintic_tower() -> FieldBundle:
    """Q(sqrt2)(sqrt3)(sqrt5)(5^(1/4))(sqrt(1+sqrt5)), degree 32, all real."""
    f = TowerField.rationals().extend("sqrt2", [-2, 0, 1], 2 ** 0.5)
    f = f.extend("sqrt3", [-3, 0, 1], 3 ** 0.5)
    f = f.extend("sqrt5", [-5, 0, 1], 5 ** 0.5)
    s5 = f.gen("sqrt5")
    f = f.extend("qrt5", [-s5, 0, 1], 5 ** 0.25)
    s5 = f.gen("sqrt5")
    f = f.extend("rho", [-(1 + s5), 0, 1], (1 + 5 ** 0.5) ** 0.5)
    c = {name: f.gen(name) for name in f.names()}
    c["delta1"] = c["sqrt2"] * c["sqrt3"] * c["qrt5"] * c["rho"] / 2
    return FieldBundle("Q(sqrt2, sqrt3, sqrt5, 5^(1/4), sqrt(1+sqrt5))", f, c)


@lru_cache(maxsize=None)
def nonic_cube_root_tower(which: int) -> FieldBundle:
    """K6 extended by one cube root used for the degree-18 factor at m = 9.

    which = 0, 1, 2 adjoins the cube root of
    cbrt2 (cbrt2 - 1), zeta12 cbrt2 (cbrt2 + zeta12^10),
    zeta12 cbrt2 (zeta12^10 cbrt2 + 1) respectively.
    """
    base = k6()
    z, cb = base["zeta12"], base["cbrt2"]
    radicands = [cb * (cb - 1), z * cb * (cb + z ** 10), z * cb * (z ** 10 * cb + 1)]
    rad = radicands[which]
    approx = _approx(rad)
    f = base.field.extend(f"r{which}", [-rad, 0, 0, 1], approx ** (1 / 3))
    c = _zeta12_constants(f)
    c["cbrt2"] = f.gen("cbrt2")
    c["cuberoot"] = f.gen(f"r{which}")
    return FieldBundle(f"K6(r{which})", f, c)


@lru_cache(maxsize=None)
def nonic_w_tower(levels: tuple = (0,)) -> FieldBundle:
    """K6 extended by w_l with w_l^3 = 18 (zeta3^l cbrt2 + zeta6), for l in levels."""
    base = k6()
    f = base.field
    for ell in levels:
        z = f.gen("zeta12")
        cb = f.gen("cbrt2")
        rad = 18 * (z ** (4 * ell) * cb + z ** 2)
        f = f.extend(f"w{ell}", [-rad, 0, 0, 1], _approx(rad) ** (1 / 3))
    c = _zeta12_constants(f)
    c["cbrt2"] = f.gen("cbrt2")
    for ell in levels:
        c[f"w{ell}"] = f.gen(f"w{ell}")
    return FieldBundle("K6(" + ",".join(f"w{e}" for e in levels) + ")", f, c)


def extend_cube_root(bundle: FieldBundle, name: str, radicand: TowerElement) -> FieldBundle:
    """Adjoin the principal cube root of radicand to bundle's field."""
    f = bundle.field.extend(name, [-radicand, 0, 0, 1], _approx(radicand) ** (1 / 3))
    c = {k: f(v) for k, v in bundle.constants.items()}
    c[name] = f.gen(name)
    return FieldBundle(f"{bundle.name}({name})", f, c)


def _approx(a: TowerElement) -> complex:
    from ..numeric import evalComplex
    return complex(evalComplex(a, 64))


def principal(z: complex, n: int) -> complex:
    return cmath.exp(cmath.log(z) / n)


def all_bundles() -> dict:
    return {
        "K2": k2(), "K3": k3(), "K4": k4(), "K6": k6(),
        "T5": quintic_tower(),
    }


def verify_constants(bundle: FieldBundle) -> list[tuple[str, bool]]:
    return [(key, verifyRoot(p, a)) for key, p, a in bundle.checks()]

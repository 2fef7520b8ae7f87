"""Complex evaluation of tower elements at a chosen embedding.

Every tower level carries a double-precision approximation of the root that
fixes the embedding.  At a requested precision the root is refined by Newton
iteration on the level's defining polynomial, whose coefficients are first
evaluated at the already-refined lower levels.  This is an oracle only: it
can refute an identity, never prove one.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import ConfigurationError
from .towerfield import TowerElement, TowerField

DEFAULT_PRECISION = 128


def default_precision() -> int:
    env = os.environ.get("MWLAT_PRECISION")
    if env:
        try:
            bits = int(env)
        except ValueError:
            raise ConfigurationError(f"MWLAT_PRECISION must be an integer, got {env!r}") from None
        if bits < 64:
            raise ConfigurationError("precision must be at least 64 bits")
        return bits
    return DEFAULT_PRECISION


@dataclass(frozen=True)
class ComplexApprox:
    real: mpmath.mpf
    imag: mpmath.mpf
    precision: int

    @property
    def value(self) -> mpmath.mpc:
        # built at the stored precision; the ambient context may be coarser
        with mpmath.workprec(self.precision):
            return mpmath.mpc(self.real, self.imag)

    def __abs__(self):
        with mpmath.workprec(self.precision):
            return abs(self.value)

    def hex(self) -> dict:
        return {"re": _hex(self.real), "im": _hex(self.imag), "bits": self.precision}


def _hex(x) -> str:
    # exact binary serialisation: mantissa and exponent
    man, exp = (x if isinstance(x, mpmath.mpf) else mpmath.mpf(x)).man_exp
    return f"{int(man):#x}p{int(exp)}"


_root_cache: dict = {}


def _generator_values(field: TowerField, prec: int) -> list:
    key = (field, prec)
    if key in _root_cache:
        return _root_cache[key]
    values: list = []
    with mpmath.workprec(prec + 32):
        for k, level in enumerate(field.levels):
            if level.embed is None:
                raise ConfigurationError(f"generator {level.name} has no designated embedding")
            coeffs = [_eval_raw(c, field.levels, k, values) for c in level.minpoly]
            values.append(_newton(coeffs, mpmath.mpc(level.embed), prec, level.name))
    _root_cache[key] = values
    return values


def _newton(coeffs, start, prec, name):
    x = start
    tol = mpmath.mpf(2) ** (-prec - 8)
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    for _ in range(400):
        fx = mpmath.polyval(coeffs[::-1], x)
        dfx = mpmath.polyval(deriv[::-1], x)
        if dfx == 0:
            raise ConfigurationError(f"embedding of {name} sits on a multiple root")
        step = fx / dfx
        x -= step
        if abs(step) <= tol * max(1, abs(x)):
            break
    else:
        raise ConfigurationError(f"Newton refinement of {name} did not converge")
    if abs(x - start) > 1e-6 * max(1, abs(start)):
        raise ConfigurationError(f"embedding hint for {name} is not close to a root")
    return x


def _eval_raw(raw, levels, k, values):
    if k == 0:
        return mpmath.mpf(raw.numerator) / raw.denominator
    gen = values[k - 1]
    acc = mpmath.mpc(0)
    for c in reversed(raw):
        acc = acc * gen + _eval_raw(c, levels, k - 1, values)
    return acc


def _height_bits(a) -> int:
    if not isinstance(a, TowerElement):
        q = Fraction(a)
        return max(q.numerator.bit_length(), q.denominator.bit_length())
    return max((max(q.numerator.bit_length(), q.denominator.bit_length()) for q in a.flat()), default=0)


def _eval(a, wp: int) -> mpmath.mpc:
    """Value of a at working precision wp (no final rounding)."""
    with mpmath.workprec(wp):
        if not isinstance(a, TowerElement):
            q = Fraction(a)
            return mpmath.mpc(mpmath.mpf(q.numerator) / q.denominator)
        values = _generator_values(a.field, wp)
        return mpmath.mpc(_eval_raw(a.raw, a.field.levels, a.field.depth, values))


def _check_precision(precision):
    prec = precision or default_precision()
    if prec < 64:
        raise ConfigurationError("precision must be at least 64 bits")
    return prec


def evalElement(a, precision: int | None = None) -> ComplexApprox:
    """Value of a rounded to the requested number of bits.

    The working precision adds guard bits proportional to the size of the
    rational coordinates, since the power-basis expansion can cancel.
    """
    prec = _check_precision(precision)
    z = _eval(a, prec + 64 + _height_bits(a))
    with mpmath.workprec(prec):
        return ComplexApprox(+z.real, +z.imag, prec)


def evalComplex(a, precision: int | None = None) -> mpmath.mpc:
    return evalElement(a, precision).value


def residual(p, a, precision: int | None = None):
    """|p(a)| computed to about 2^-precision absolute accuracy."""
    prec = _check_precision(precision)
    rough = abs(_eval(a, 64))
    with mpmath.workprec(64):
        size = max((abs(_eval(c, 64)) * rough ** k for k, c in enumerate(p.coeffs)), default=mpmath.mpf(0))
        extra = int(mpmath.log(size, 2)) + 1 if size > 1 else 0
    heights = max([_height_bits(a)] + [_height_bits(c) for c in p.coeffs])
    wp = prec + 64 + extra + heights + len(p.coeffs).bit_length()
    x = _eval(a, wp)
    with mpmath.workprec(wp):
        acc = mpmath.mpc(0)
        for c in reversed(p.coeffs):
            acc = acc * x + _eval(c, wp)
        return abs(acc)


def residual_bits(value) -> float:
    """-log2 of a magnitude; +inf for exact zero."""
    if value == 0:
        return float("inf")
    return float(-mpmath.log(value, 2))

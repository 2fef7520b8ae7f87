from fractions import Fraction

import mpmath
import pytest

from mwlat import numeric
from mwlat.catalog import fields
from mwlat.catalog.build import load_entry
from mwlat.errors import ConfigurationError
from mwlat.polyring import UniPoly


def test_zeta3_value():
    z = numeric.evalComplex(fields.k2()["zeta3"], 128)
    with mpmath.workprec(128):
        assert abs(z - mpmath.mpc(-0.5, mpmath.sqrt(3) / 2)) < mpmath.mpf(2) ** -120


def test_u3_twelfth_power_for_m6():
    B = fields.k6()
    u3 = (1 + B["cbrt2"]) / B["sqrt3"]
    val = numeric.evalComplex(u3, 128)
    assert abs(val - mpmath.mpf("1.3047660265")) < 1e-9
    c = B["cbrt2"]
    target = numeric.evalComplex((46 * c * c + 58 * c + 73) / 9, 128)
    with mpmath.workprec(128):
        assert abs(val ** 12 - target) < mpmath.mpf(2) ** -64


def test_residual_detects_nonzero():
    x = UniPoly.gen("x")
    assert numeric.residual(x ** 2 - 2, Fraction(1), 128) == 1


def test_residual_of_g2_at_zeta3():
    g = load_entry(2).minpoly
    assert numeric.residual(g, fields.k2()["zeta3"], 128) < mpmath.mpf(2) ** -100


def test_residual_shrinks_with_precision():
    x = UniPoly.gen("x")
    cb = fields.k3()["cbrt2"]
    p = x ** 3 - 2
    r1, r2 = numeric.residual(p, cb, 128), numeric.residual(p, cb, 256)
    assert r1 < mpmath.mpf(2) ** -64
    assert r2 == 0 or r2 <= r1 * mpmath.mpf(2) ** -32


def test_precision_floor():
    with pytest.raises(ConfigurationError):
        numeric.evalElement(fields.k2()["zeta3"], 32)


def test_env_precision(monkeypatch):
    monkeypatch.setenv("MWLAT_PRECISION", "200")
    assert numeric.default_precision() == 200
    monkeypatch.setenv("MWLAT_PRECISION", "20")
    with pytest.raises(ConfigurationError):
        numeric.default_precision()
    monkeypatch.setenv("MWLAT_PRECISION", "many")
    with pytest.raises(ConfigurationError):
        numeric.default_precision()
    monkeypatch.delenv("MWLAT_PRECISION")
    assert numeric.default_precision() == 128


def test_hex_serialisation_is_deterministic():
    a = numeric.evalElement(fields.k6()["cbrt2"], 128).hex()
    b = numeric.evalElement(fields.k6()["cbrt2"], 128).hex()
    assert a == b and a["bits"] == 128
    man, exp = a["re"].split("p")
    assert mpmath.ldexp(int(man, 16), int(exp)) == numeric.evalElement(fields.k6()["cbrt2"], 128).real


def test_quintic_roots_numeric():
    e = load_entry(5)
    for r in e.rootValues:
        if r.note.startswith("expected to fail"):
            continue
        assert numeric.residual(e.phiData[r.poly], r.value, 128) < mpmath.mpf(2) ** -64


def test_printed_v5_delta_form_is_refuted():
    e = load_entry(5)
    alt = next(r for r in e.rootValues if r.name == "v5_printed_delta_form")
    assert numeric.residual(e.phiData["F2_V"], alt.value, 128) > 1

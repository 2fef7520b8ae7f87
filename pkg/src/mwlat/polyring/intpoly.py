"""Sparse multivariate integer polynomials as plain dicts.

A polynomial is ``dict[tuple[int, ...], int]`` mapping exponent vectors to
nonzero integers.  Large products and exact quotients go through Kronecker
substitution: the polynomial is packed into one big integer, the big-integer
routine does the work, and the digits are unpacked again.  gmpy2 handles the
big-integer multiply/divide when it is available.
"""
from __future__ import annotations

from math import gcd

try:
    import gmpy2

    _mpz = gmpy2.mpz
except ImportError:  # pragma: no cover
    gmpy2 = None
    _mpz = None

from ..errors import DomainError

# below this many term pairs the schoolbook product wins
_DIRECT_LIMIT = 400
_GMP_BITS = 20000


def _bigmul(a: int, b: int) -> int:
    if _mpz is not None and a.bit_length() + b.bit_length() > _GMP_BITS:
        return int(_mpz(a) * _mpz(b))
    return a * b


def _bigdivmod(a: int, b: int):
    if _mpz is not None and a.bit_length() > _GMP_BITS // 2:
        q, r = gmpy2.f_divmod(_mpz(a), _mpz(b))
        return int(q), int(r)
    return divmod(a, b)


def pack(coeffs: list[int], width: int) -> int:
    """Evaluate sum c_i X^i at X = 2**(8*width)."""
    pos = b"".join(c.to_bytes(width, "little") if c > 0 else bytes(width) for c in coeffs)
    neg = b"".join((-c).to_bytes(width, "little") if c < 0 else bytes(width) for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def unpack(value: int, width: int, count: int) -> list[int]:
    """Inverse of pack for balanced digits; returns count digits."""
    negative = value < 0
    if negative:
        value = -value
    nbytes = max((value.bit_length() + 7) // 8, count * width) + width
    raw = value.to_bytes(nbytes, "little")
    bits = 8 * width
    half = 1 << (bits - 1)
    full = 1 << bits
    out = []
    carry = 0
    for i in range(count):
        d = int.from_bytes(raw[i * width:(i + 1) * width], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out.append(d)
    if carry or any(raw[count * width:]):
        raise OverflowError("packed value exceeds digit range")
    if negative:
        out = [-d for d in out]
    return out


def _width_for(bound: int) -> int:
    # bytes needed to hold balanced digits of magnitude <= bound
    return (bound.bit_length() + 2 + 7) // 8


def dense_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of dense integer coefficient lists (lowest degree first)."""
    if not a or not b:
        return []
    if len(a) * len(b) <= _DIRECT_LIMIT:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    width = _width_for(ma * mb * min(len(a), len(b)))
    prod = _bigmul(pack(a, width), pack(b, width))
    return unpack(prod, width, len(a) + len(b) - 1)


def dense_divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b of dense integer polynomials; raises if inexact."""
    while a and a[-1] == 0:
        a = a[:-1]
    if not b or b[-1] == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    nq = len(a) - len(b) + 1
    if nq <= 0:
        raise DomainError("inexact polynomial division")
    if len(b) == 1:
        c = b[0]
        out = []
        for x in a:
            q, r = divmod(x, c)
            if r:
                raise DomainError("inexact polynomial division")
            out.append(q)
        return out
    amax = max(abs(x) for x in a)
    b1 = sum(abs(x) for x in b)
    width = _width_for(amax)
    while True:
        qv, r = _bigdivmod(pack(a, width), pack(b, width))
        if r:
            raise DomainError("inexact polynomial division")
        try:
            q = unpack(qv, width, nq)
        except OverflowError:
            width *= 2
            continue
        qmax = max(abs(x) for x in q)
        # the identity a = q*b is certified once q*b fits the digit range
        if qmax * b1 < (1 << (8 * width - 1)) and amax < (1 << (8 * width - 1)):
            return q
        width *= 2


# sparse multivariate layer


def _degs(p: dict) -> list[int]:
    it = iter(p)
    first = next(it)
    d = list(first)
    for e in it:
        for i, x in enumerate(e):
            if x > d[i]:
                d[i] = x
    return d


def _to_dense(p: dict, strides: list[int], length: int) -> list[int]:
    out = [0] * length
    for e, c in p.items():
        out[sum(x * s for x, s in zip(e, strides))] = c
    return out


def _from_dense(coeffs: list[int], radices: list[int]) -> dict:
    out = {}
    n = len(radices)
    for idx, c in enumerate(coeffs):
        if c:
            e = [0] * n
            k = idx
            for j in range(n):
                k, e[j] = divmod(k, radices[j])
            out[tuple(e)] = c
    return out


def add(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def neg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def scale(a: dict, c: int) -> dict:
    if not c:
        return {}
    return {e: c * x for e, x in a.items()}


def mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) * len(b) <= _DIRECT_LIMIT or len(a) == 1 or len(b) == 1:
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return out
    da, db = _degs(a), _degs(b)
    radices = [x + y + 1 for x, y in zip(da, db)]
    strides, s = [], 1
    for r in radices:
        strides.append(s)
        s *= r
    la = sum(x * st for x, st in zip(da, strides)) + 1
    lb = sum(x * st for x, st in zip(db, strides)) + 1
    prod = dense_mul(_to_dense(a, strides, la), _to_dense(b, strides, lb))
    return _from_dense(prod, radices)


def divexact(a: dict, b: dict) -> dict:
    """Exact quotient in Z[x1..xn]; raises DomainError when b does not divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return {}
    if len(b) == 1:
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            q, r = divmod(c, cb)
            d = tuple(x - y for x, y in zip(e, eb))
            if r or min(d) < 0:
                raise DomainError("inexact polynomial division")
            out[d] = q
        return out
    da, db = _degs(a), _degs(b)
    if any(y > x for x, y in zip(da, db)):
        raise DomainError("inexact polynomial division")
    radices = [x + 1 for x in da]
    strides, s = [], 1
    for r in radices:
        strides.append(s)
        s *= r
    la = sum(x * st for x, st in zip(da, strides)) + 1
    lb = sum(x * st for x, st in zip(db, strides)) + 1
    dense_b = _to_dense(b, strides, lb)
    while dense_b and dense_b[-1] == 0:
        dense_b.pop()
    q = dense_divexact(_to_dense(a, strides, la), dense_b)
    out = _from_dense(q, radices)
    dq = _degs(out) if out else [0] * len(da)
    # packing is injective on q*b only if no exponent wraps around
    if any(x + y > z for x, y, z in zip(dq, db, da)):
        raise DomainError("inexact polynomial division")
    return out


def power(a: dict, n: int, nvars: int) -> dict:
    result = {(0,) * nvars: 1}
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def content(a: dict) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def is_constant(a: dict) -> bool:
    return len(a) <= 1 and all(not any(e) for e in a)


def constant(c: int, nvars: int) -> dict:
    return {(0,) * nvars: c} if c else {}


def leading_exponent(a: dict):
    # lexicographic maximum; used only for sign normalisation
    return max(a)


# univariate views over a coefficient ring Z[rest]


def split(p: dict, index: int) -> list[dict]:
    """Coefficients of p as a polynomial in variable index, lowest first."""
    out: dict[int, dict] = {}
    for e, c in p.items():
        k = e[index]
        rest = e[:index] + (0,) + e[index + 1:]
        out.setdefault(k, {})[rest] = c
    if not out:
        return []
    top = max(out)
    return [out.get(k, {}) for k in range(top + 1)]


def join(coeffs: list[dict], index: int) -> dict:
    out = {}
    for k, c in enumerate(coeffs):
        for e, v in c.items():
            out[e[:index] + (k,) + e[index + 1:]] = v
    return out


def _strip(coeffs: list[dict]) -> list[dict]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def prem(a: list[dict], b: list[dict]) -> list[dict]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db = len(b) - 1
    lcb = b[-1]
    delta = len(a) - len(b) + 1
    steps = 0
    while len(a) - 1 >= db and a:
        lca = a[-1]
        shift = len(a) - 1 - db
        new = [mul(c, lcb) for c in a[:-1]]
        for j in range(db):
            if b[j]:
                new[shift + j] = sub(new[shift + j], mul(lca, b[j]))
        a = _strip(new)
        steps += 1
    if steps < delta and a:
        a = [mul(c, power(lcb, delta - steps, len(next(iter(lcb))))) for c in a]
    return a


def subresultant_chain(a: list[dict], b: list[dict], nvars: int, stop_at_gcd=False):
    """Run the subresultant PRS on a, b with deg a >= deg b >= 1.

    Returns (resultant, last_nonzero) where last_nonzero is the last
    nonzero polynomial reached; resultant is {} when a and b share a factor.
    """
    one = constant(1, nvars)
    g, h = one, one
    sign = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = prem(a, b)
        if not r:
            return {}, b
        divisor = mul(g, power(h, delta, nvars))
        a, b = b, [divexact(c, divisor) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divexact(power(g, delta, nvars), power(h, delta - 1, nvars))
        if len(b) == 1:
            break
    da = len(a) - 1
    lcb = b[0]
    if da == 0:
        res = lcb
    elif da == 1:
        res = lcb
    else:
        res = divexact(power(lcb, da, nvars), power(h, da - 1, nvars))
    return (scale(res, sign) if sign == -1 else res), b


def resultant_coeffs(a: list[dict], b: list[dict], nvars: int) -> dict:
    """Resultant of two univariate polys with coefficients in Z[rest]."""
    a, b = _strip(list(a)), _strip(list(b))
    if not a or not b:
        return {}
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2:
            sign = -1
    if db == 0:
        res = power(b[0], da, nvars)
    else:
        res, _ = subresultant_chain(a, b, nvars)
    return scale(res, sign) if sign == -1 else res


def gcd_poly(a: dict, b: dict, nvars: int) -> dict:
    """Greatest common divisor in Z[x1..xn], normalised to a positive lead term."""
    if not a:
        return _normalize_sign(b)
    if not b:
        return _normalize_sign(a)
    var = None
    for i in range(nvars):
        if any(e[i] for e in a) or any(e[i] for e in b):
            var = i
            break
    if var is None:
        return constant(gcd(content(a), content(b)), nvars)
    ca, cb = split(a, var), split(b, var)
    conta = _coeff_gcd(ca, nvars)
    contb = _coeff_gcd(cb, nvars)
    cont = gcd_poly(conta, contb, nvars)
    pa = [divexact(c, conta) if c else {} for c in ca]
    pb = [divexact(c, contb) if c else {} for c in cb]
    if len(pa) < len(pb):
        pa, pb = pb, pa
    if len(pb) == 1:
        return _normalize_sign(cont)
    _, last = subresultant_chain(pa, pb, nvars)
    if len(last) == 1:
        return _normalize_sign(cont)
    lc = _coeff_gcd(last, nvars)
    prim = [divexact(c, lc) if c else {} for c in last]
    return _normalize_sign(mul(join(prim, var), cont))


def _coeff_gcd(coeffs: list[dict], nvars: int) -> dict:
    g: dict = {}
    for c in coeffs:
        if c:
            g = gcd_poly(g, c, nvars) if g else _normalize_sign(c)
            if is_constant(g) and abs(next(iter(g.values()))) == 1:
                break
    return g


def _normalize_sign(a: dict) -> dict:
    if a and a[leading_exponent(a)] < 0:
        return neg(a)
    return a


def compress_strides(polys: list[dict], skip: int, nvars: int):
    """Divide exponents of each variable by the gcd of its exponents.

    Returns (new_polys, strides); strides[skip] is always 1.
    """
    strides = []
    for i in range(nvars):
        g = 0
        if i != skip:
            for p in polys:
                for e in p:
                    g = gcd(g, e[i])
        strides.append(g if g > 1 else 1)
    if all(s == 1 for s in strides):
        return polys, strides
    out = []
    for p in polys:
        out.append({tuple(x // s for x, s in zip(e, strides)): c for e, c in p.items()})
    return out, strides


def expand_strides(p: dict, strides: list[int]) -> dict:
    if all(s == 1 for s in strides):
        return p
    return {tuple(x * s for x, s in zip(e, strides)): c for e, c in p.items()}

"""Fundamental polynomials from coefficient systems by resultant chains.

Each step removes one variable.  When some equation is linear in it with
a constant coefficient the variable is substituted away, which adds no
extraneous factor.  Otherwise a pivot is chosen (lowest degree in the
variable, then constant leading coefficient, then fewest terms) and
resultants against the pivot replace the other equations.  A resultant
that vanishes means the two inputs share a component; that common factor
is split off, recorded and the quotients are used instead.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import BudgetError, DegenerateSystemError, EliminationError
from .polyring import MultiPoly, UniPoly, exact_quotient, normalizePrimitive, poly_gcd, resultant
from .polyring.univariate import polyGcd

DEFAULT_TERM_BUDGET = 20000


@dataclass
class SectionSystem:
    m: int
    variables: tuple
    equations: list
    eliminationOrder: list
    targetVariable: str
    clearingRules: list = field(default_factory=list)
    deepOnly: bool = False
    note: str = ""

    @classmethod
    def from_strings(cls, m, variables, equations, order, target, rules=(), deep_only=False, note=""):
        vs = tuple(variables)
        eqs = [MultiPoly.parse(e, vs) for e in equations]
        return cls(m, vs, eqs, list(order), target, list(rules), deep_only, note)

    def to_json(self) -> dict:
        return {
            "m": self.m, "variables": list(self.variables),
            "equations": [str(e) for e in self.equations],
            "order": list(self.eliminationOrder), "target": self.targetVariable,
            "clearing": list(self.clearingRules),
        }


@dataclass
class StepRecord:
    var: str
    mode: str  # "substitute" or "resultant"
    pivot: str
    discarded: list = field(default_factory=list)
    terms: int = 0
    stripped: list = field(default_factory=list)  # monomial factors divided out of eliminants

    def to_json(self) -> dict:
        return {"var": self.var, "mode": self.mode, "pivot": self.pivot,
                "discarded": self.discarded, "terms": self.terms, "stripped": self.stripped}


@dataclass
class PhiResult:
    raw: UniPoly
    normalized: UniPoly
    matchedFactor: UniPoly | None
    cofactor: UniPoly | None
    steps: list
    seconds: float

    def to_json(self) -> dict:
        def ints(p):
            return None if p is None else [str(c) for c in p.coeffs]
        return {
            "raw_degree": self.raw.degree(), "normalized": ints(self.normalized),
            "matched": ints(self.matchedFactor), "cofactor": ints(self.cofactor),
            "steps": [s.to_json() for s in self.steps],
        }


def _linear_solution(polys, var):
    best = None
    for p in polys:
        if p.degree(var) != 1:
            continue
        lc = p.leading_coefficient(var)
        if not lc.is_constant():
            continue
        if best is None or len(p) < len(best):
            best = p
    return best


def _pivot(polys, var):
    def key(p):
        return (p.degree(var), 0 if p.leading_coefficient(var).is_constant() else 1, len(p))
    return min(polys, key=key)


def _clean(p: MultiPoly, record: "StepRecord | None" = None) -> MultiPoly:
    q, low = p.primitive().strip_monomial()
    if record is not None and any(low):
        record.stripped.append("*".join(f"{v}^{k}" for v, k in zip(p.vars, low) if k))
    return q


def _saturate(p: MultiPoly, g: MultiPoly) -> MultiPoly:
    while True:
        h = poly_gcd(p, g)
        if h.is_constant():
            return p
        p = exact_quotient(p, h)


def _eliminate_step(polys, var, record: StepRecord, budget):
    involving = [p for p in polys if p.involves(var)]
    rest = [p for p in polys if not p.involves(var)]
    if not involving:
        return rest
    lin = _linear_solution(involving, var)
    if lin is not None:
        record.mode, record.pivot = "substitute", str(lin)
        coeffs = lin.coefficients(var)
        value = coeffs[0] * (-1 / coeffs[1].constant_value())
        out = [_clean(p.substitute({var: value}), record) for p in involving if p is not lin]
        return rest + [p for p in out if p]
    if len(involving) == 1:
        # nothing to pair with: the variable is free on this component
        record.mode, record.pivot = "drop", str(involving[0])
        return rest
    pivot = _pivot(involving, var)
    record.mode, record.pivot = "resultant", str(pivot)
    out = []
    for p in involving:
        if p is pivot:
            continue
        r = resultant(pivot, p, var)
        if not r:
            g = poly_gcd(pivot, p)
            record.discarded.append(str(g))
            a = _saturate(exact_quotient(pivot, g), g)
            b = _saturate(exact_quotient(p, g), g)
            if not (a.involves(var) and b.involves(var)):
                raise DegenerateSystemError(f"equations share the whole {var}-dependence")
            r = resultant(a, b, var)
            if not r:
                raise DegenerateSystemError("eliminant vanishes identically")
        r = _clean(r, record)
        if len(r) > budget:
            raise BudgetError(f"intermediate eliminant with {len(r)} terms exceeds budget {budget}")
        if not r.is_constant():
            out.append(r)
    record.terms = sum(len(p) for p in out)
    return rest + out


def derivePhi(sys: SectionSystem, catalog_phi: UniPoly | None = None, deep: bool = False,
              budget: int | None = None) -> PhiResult:
    """Eliminate everything but the target; compare with the catalog polynomial."""
    if sys.deepOnly and not deep:
        raise BudgetError(f"the m = {sys.m} derivation is only attempted with --deep")
    if budget is None:
        budget = 10 ** 12 if deep else DEFAULT_TERM_BUDGET
    start = time.perf_counter()
    missing = set(sys.variables) - set(sys.eliminationOrder) - {sys.targetVariable}
    if missing:
        raise EliminationError(f"elimination order misses {sorted(missing)}")
    polys = [p for p in sys.equations if p]
    steps = []
    for var in sys.eliminationOrder:
        rec = StepRecord(var, "", "")
        polys = _eliminate_step(polys, var, rec, budget)
        steps.append(rec)
    finals = [p.to_univariate(sys.targetVariable) for p in polys if p.involves(sys.targetVariable)]
    if not finals:
        raise DegenerateSystemError("no eliminant in the target variable survived")
    raw = finals[0]
    for f in finals[1:]:
        raw = polyGcd(raw, f)
    if raw.degree() < 1:
        raise DegenerateSystemError("the remaining equations have no common root")
    normalized = normalizePrimitive(raw)
    matched = cofactor = None
    if catalog_phi is not None:
        target = catalog_phi.with_var(normalized.var)
        if target.divides(normalized):
            matched = target
            cofactor = normalizePrimitive(normalized.exact_div(target))
    return PhiResult(raw, normalized, matched, cofactor, steps, time.perf_counter() - start)


def verifyFactorization(product: Sequence[UniPoly], target: UniPoly, constant=1) -> bool:
    """constant * prod(product) == target, exactly."""
    if not product:
        return False
    acc = product[0]
    for p in product[1:]:
        acc = acc * p
    return (acc * constant).coeffs == target.coeffs


def leading_ratio(product: Sequence[UniPoly], target: UniPoly):
    """The constant c with c * prod = target, if one exists."""
    acc = product[0]
    for p in product[1:]:
        acc = acc * p
    if acc.degree() != target.degree():
        return None
    c = target.lc() / acc.lc() if not hasattr(acc.lc(), "inverse") else target.lc() * acc.lc().inverse()
    return c if (acc * c).coeffs == target.coeffs else None


def coefficient_equations(m: int, x_names: Sequence[str], y_names: Sequence[str], shift=0,
                          extra_vars: Sequence[str] = ()) -> list[MultiPoly]:
    """Coefficients of y^2 - x^3 - ((t + shift)^m + 1) in t.

    x = sum x_names[k] t^k and y = sum y_names[k] t^k, where a name may be
    a number string for a fixed coefficient.
    """
    variables = tuple(n for n in list(x_names) + list(y_names) + list(extra_vars)
                      if not _is_number(n)) + ("t",)
    t = MultiPoly.gen(variables, "t")

    def build(names):
        acc = MultiPoly(variables)
        for k, n in enumerate(names):
            coeff = MultiPoly.constant(variables, Fraction(n)) if _is_number(n) else MultiPoly.gen(variables, n)
            acc = acc + coeff * t ** k
        return acc

    x, y = build(x_names), build(y_names)
    rhs = (t + shift) ** m + 1
    eq = y * y - x ** 3 - rhs
    return [c for c in eq.coefficients("t") if c]


def _is_number(s: str) -> bool:
    try:
        Fraction(s)
        return True
    except (ValueError, TypeError):
        return False


# the coefficient systems


def _system3():
    return SectionSystem.from_strings(
        3, ("a", "c", "u"),
        ["a^3 + 1", "c^2*u^2 - 3*a^2 + 3*u^2", "2*c*u - 3*a - 3*u^4"],
        ["c", "a"], "u",
        ["b = u^-2, d = u^-3", "c^2 = 3a^2 b - 3 multiplied by u^2", "2cd = 3ab^2 + 3 multiplied by u^4",
         "b^3 = d^2 holds identically"],
    )


def _system4():
    return SectionSystem.from_strings(
        4, ("a", "b", "c", "d"),
        ["2*c - a^3", "2*c*d - 3*a*b^2", "d^2 - b^3 - 1", "c^2 + 2*d - 3*a^2*b"],
        ["c", "d", "b"], "a",
    )


def _system5():
    return SectionSystem.from_strings(
        5, ("a", "b", "c", "d", "e", "U"),
        ["U + 3*a - 2*c", "3*a^2 + 3*b - 2*d - c^2", "a^3 + 6*b*a - 2*e - 2*d*c",
         "3*b^2 + 3*a^2*b - 2*e*c - d^2", "3*b^2*a - 2*e*d", "U + b^3 - e^2"],
        ["c", "d", "e", "b", "a"], "U",
        ["U = u^6; the y constant term is the unknown e"],
    )


def _system6():
    return SectionSystem.from_strings(
        6, ("a", "b", "c", "d", "e", "u"),
        ["a^3 - c^2 + 1", "3*a^2*b - 2*c*d - 6",
         "3*a*b^2*u^2 - 2*c*e*u^2 - d^2*u^2 + 3*a^2 + 15*u^2",
         "b^3*u^3 - 2*d*e*u^3 + 6*a*b*u - 20*u^3 - 2*c",
         "e^2*u^4 - 3*b^2*u^2 - 15*u^4 + 2*d*u - 3*a",
         "6*u^4 + 2*e*u - 3*b"],
        ["b", "a", "c", "d", "e"], "u",
        ["twisted surface y^2 = x^3 + t^6 - 1 with t -> t + 1", "g = u^-2, h = u^-3"],
    )


def _system9():
    # x = sum a_k t^k, y = sum b_k t^k on y^2 = x^3 + (t - 1)^9 + 1, with b_5 = 0
    eqs = coefficient_equations(9, ["a0", "a1", "a2", "a3"], ["b0", "b1", "b2", "b3", "b4"], shift=-1)
    variables = eqs[0].vars
    ring = tuple(v for v in variables if v != "t") + ("u",)

    def lift(p):
        return MultiPoly(ring, {tuple(e[:-1]) + (0,): c for e, c in p.term_dict().items()})

    u = MultiPoly.gen(ring, "u")
    cleared = []
    for p in eqs:
        q = lift(p)
        deg = max(q.degree("a0") * 2, q.degree("b0") * 3)
        # a0 = u^-2, b0 = u^-3: substitute through a0 -> A / u^2 by homogenising
        acc = MultiPoly(ring)
        for e, c in q.term_dict().items():
            k = e[0] * 2 + e[4] * 3
            mono = dict(zip(ring, e))
            mono["a0"] = 0
            mono["b0"] = 0
            mono["u"] = deg - k
            acc = acc + MultiPoly(ring, {tuple(mono[v] for v in ring): c})
        if acc:
            cleared.append(_clean(acc))
    return SectionSystem(9, ring, cleared, ["a3", "b4", "a2", "b3", "a1", "b2", "b1", "a0", "b0"], "u",
                         ["a0 = u^-2, b0 = u^-3, each equation multiplied by the least power of u"],
                         deepOnly=True)


SYSTEMS = {3: _system3, 4: _system4, 5: _system5, 6: _system6, 9: _system9}


def systemFor(m: int) -> SectionSystem:
    try:
        return SYSTEMS[m]()
    except KeyError:
        raise EliminationError(f"no coefficient system for m = {m}") from None

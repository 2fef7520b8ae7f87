"""Per-surface verification suites.

A suite is an ordered list of named checks.  Each check returns
(ok, detail) or raises Skip; results keep the suite order whatever the
execution order was.  Errata are collected separately: they record where
a printed value disagrees with what the checks establish.
"""
from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable

import mpmath

from . import numeric
from .basechange import compareUpToBasis, directSumGram, scaledGramCheck, tildeAutomorphism, transformIdentity
from .catalog import fields
from .catalog.build import load_entry
from .catalog.points import CATALOG_MS, RAW_PRINTED_GRAMS
from .catalog.table import expectedLattice, invariantsFor
from .elimination import leading_ratio
from .errors import MwlatError
from .exact import is_positive_definite, minimum_and_kissing, rat_to_str, ratDet
from .heights import find_signed_permutation, formula_for, gramMatrix, identifyLattice
from .polyring.univariate import UniPoly, reduceByPower
from .sections import onCurve, specialize
from .towerfield import verifyRoot

SUITE_MS = CATALOG_MS
NUMERIC_GATE = mpmath.mpf(2) ** -64
PHI9_KEYS = ("Phi0", "Phi1", "Phi2", "Phi3", "Phi4")


class Skip(Exception):
    pass


@dataclass
class CheckResult:
    name: str
    status: str  # pass, fail, skipped
    detail: str = ""
    evidence: str = "exact"  # "numeric" cross-checks an exact result; "unverified-symbolic" has no exact proof

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail, "evidence": self.evidence}


@dataclass
class SuiteRun:
    m: int
    checks: list
    errata: list = dc_field(default_factory=list)
    artifacts: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if any(c.status == "fail" for c in self.checks):
            return "fail"
        return "pass"


# mpmath keeps its working precision in one global context, so checks that
# evaluate numerically must not overlap when run on a thread pool
_NUMERIC_LOCK = threading.Lock()


def _call(fn, evidence):
    if evidence == "exact":
        return fn()
    with _NUMERIC_LOCK:
        return fn()


def _run_one(item) -> CheckResult:
    name, fn = item[0], item[1]
    evidence = item[2] if len(item) > 2 else "exact"
    try:
        out = _call(fn, evidence)
    except Skip as exc:
        return CheckResult(name, "skipped", str(exc), evidence)
    except MwlatError as exc:
        return CheckResult(name, "fail", f"{type(exc).__name__}: {exc}", evidence)
    ok, detail = out if isinstance(out, tuple) else (out, "")
    return CheckResult(name, "pass" if ok else "fail", detail, evidence)


def run_checks(checks: list, workers: int = 1) -> list[CheckResult]:
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(_run_one, checks))
    return [_run_one(c) for c in checks]


# building blocks


def _product(polys):
    acc = polys[0]
    for p in polys[1:]:
        acc = acc * p
    return acc


def _mat_str(G) -> list:
    return G.to_json()


def _lift(p: UniPoly, field) -> UniPoly:
    return UniPoly([field(c) for c in p.coeffs], p.var, field)


def _numeric_pair(p, a, precision):
    r1 = numeric.residual(p, a, precision)
    r2 = numeric.residual(p, a, 2 * precision)
    ok = r1 < NUMERIC_GATE and (r2 == 0 or r2 <= r1 * mpmath.mpf(2) ** -(precision // 4) or r1 == 0)
    return ok, f"residual 2^-{numeric.residual_bits(r1):.0f} at {precision} bits, 2^-{numeric.residual_bits(r2):.0f} at {2 * precision}"


class Suite:
    def __init__(self, m: int, points=None, precision: int | None = None):
        if m not in SUITE_MS:
            raise KeyError(m)
        self.m = m
        self.entry = load_entry(m)
        self.external = points is not None
        self.points = list(points) if points is not None else [p.section for p in self.entry.points]
        self.precision = precision or numeric.default_precision()
        self.row = expectedLattice(m)
        self.inv = invariantsFor(m)
        self.errata: list = []
        self._gram = None

    # helpers

    def gram(self):
        if self._gram is None:
            if not self.points:
                raise Skip("generator coordinates are external data")
            self._gram = gramMatrix(self.points, formula_for(self.m))
        return self._gram

    def lattice_gram(self):
        """Gram of a full basis: computed where possible, else the printed matrix."""
        if self.m == 10:
            block = self.gram() if self.points else RAW_PRINTED_GRAMS[2] * 5
            if block.rows == 2:
                return directSumGram([block, RAW_PRINTED_GRAMS[5] * 2])
            return block
        if self.points:
            return self.gram()
        return self.entry.gram

    def erratum(self, item: str, printed, derived, detail: str = ""):
        self.errata.append({"item": item, "printed": str(printed), "derived": str(derived), "detail": detail})

    # generic checks

    def checks(self) -> list:
        out = [("invariants", self.check_invariants)]
        if self.points:
            for k, P in enumerate(self.points):
                name = self.entry.points[k].name if not self.external and k < len(self.entry.points) else f"P{k + 1}"
                out.append((f"on_curve[{name}]", lambda P=P: onCurve(P)))
        else:
            out.append(("points", self.skip_points))
        if not self.external:
            for p in self.entry.extraPoints:
                out.append((f"on_curve[{p.name}]", lambda P=p.section: onCurve(P)))
        out += [
            ("gram_symmetric_positive_definite", self.check_definite),
            ("gram_det_vs_table", self.check_det),
            ("gram_diagonal_min_norm", self.check_diagonal),
            ("lattice_min_norm_kissing", self.check_kissing),
            ("gram_vs_printed", self.check_printed),
        ]
        for r in self.entry.rootValues:
            if r.note.startswith("expected to fail"):
                continue
            out.append((f"root[{r.name}]", lambda r=r: self.check_root(r)))
            out.append((f"numeric_root[{r.name}]", lambda r=r: self.check_root_numeric(r), "numeric"))
        out += getattr(self, f"extra_{self.m}")()
        return out

    def run(self, workers: int = 1) -> SuiteRun:
        start = time.perf_counter()
        results = run_checks(self.checks(), workers)
        self.collect_errata()
        arts = {"invariants": self.inv.to_json(), "table_row": self.row.to_json()}
        try:
            G = self.lattice_gram()
            arts["gram"] = _mat_str(G)
            arts["det"] = rat_to_str(ratDet(G))
            arts["lattice"] = identifyLattice(G).to_json()
        except (Skip, MwlatError):
            pass
        return SuiteRun(self.m, results, self.errata, arts, time.perf_counter() - start)

    def check_invariants(self):
        ok = self.inv.rank == self.row.rank
        if self.entry.gram is not None:
            ok = ok and self.entry.gram.rows == self.row.rank or (self.m == 10 and self.entry.gram.rows == 10)
        return ok, f"chi {self.inv.chi}, fibre {self.inv.fiberAtInfinity}, rank {self.inv.rank}"

    def skip_points(self):
        raise Skip("generator coordinates are external data; matrix-level checks only")

    def check_definite(self):
        G = self.lattice_gram()
        return G.is_symmetric() and is_positive_definite(G), f"rank {G.rows}"

    def check_det(self):
        G = self.lattice_gram()
        d = ratDet(G)
        return d == self.row.det, f"det {rat_to_str(d)}, table {rat_to_str(self.row.det)}"

    def check_diagonal(self):
        if not self.points:
            G = self.entry.gram
            diag = {G[i, i] for i in range(G.rows)}
            return min(diag) == self.row.minNorm, "printed diagonal " + ", ".join(sorted(rat_to_str(x) for x in diag))
        G = self.gram()
        diag = {G[i, i] for i in range(G.rows)}
        return diag == {self.row.minNorm}, "diagonal " + ", ".join(sorted(rat_to_str(x) for x in diag))

    def check_kissing(self):
        G = self.lattice_gram()
        mu, tau = minimum_and_kissing(G)
        ok = mu == self.row.minNorm and tau == self.row.kissing
        return ok, f"min {rat_to_str(mu)} kissing {tau}; table {rat_to_str(self.row.minNorm)} {self.row.kissing}"

    def check_printed(self):
        if not self.points or self.m == 10:
            raise Skip("no computed Gram to compare with the full printed matrix")
        G, P = self.gram(), self.entry.gram
        if G == P:
            return True, "equal"
        sp = find_signed_permutation(G, P)
        if sp is not None:
            perm, signs = sp
            flips = [self.entry.points[perm[i]].name for i, s in enumerate(signs) if s < 0]
            return True, f"equal after negating {', '.join(flips)}" + (" and reordering" if perm != sorted(perm) else "")
        bc = compareUpToBasis(G, P)
        if bc.ok:
            return True, f"same lattice: X G X^T = printed with X = {bc.matrix}, det X = {bc.det}"
        return False, "no basis change relates the matrices"

    def check_root(self, r):
        p = self.entry.phiData[r.poly]
        return verifyRoot(p, r.value ** r.power), f"{r.poly}({r.name}" + (f"^{r.power})" if r.power != 1 else ")") + " = 0"

    def check_root_numeric(self, r):
        p = self.entry.phiData[r.poly]
        return _numeric_pair(p, r.value ** r.power, self.precision)

    def collect_errata(self):
        for r in self.entry.rootValues:
            if r.note.startswith("expected to fail"):
                ok = verifyRoot(self.entry.phiData[r.poly], r.value ** r.power)
                self.erratum(f"root {r.name}", r.value, "not a root" if not ok else "root",
                             f"{r.poly} evaluated exactly")
        for p in self.entry.errataPoints:
            self.erratum(f"point {p.name}", p.section, "off curve" if not onCurve(p.section) else "on curve", p.note)
        getattr(self, f"errata_{self.m}", lambda: None)()

    # per-surface extras

    def extra_2(self):
        return []

    def errata_2(self):
        G = self.gram()
        self.erratum("det M2 as stated", "2/3", rat_to_str(ratDet(G)), "agrees with the lattice table")
        extra = {p.name: p.section for p in self.entry.extraPoints}
        if extra["Q2-Q0"] == extra["P2"]:
            self.erratum("basis of M2", "Gram of P1, P2", "Gram of P1, P1 + P2",
                         "P2 = (-zeta3^2, t) - (-1, t) meets the zero section; its height is 2")

    def extra_3(self):
        e = self.entry

        def factors():
            return leading_ratio(e.phiData["phi_factors_Q"], e.phiData["phi_u"]) == 1, "seven factors over Q"

        def split():
            pu = e.phiData["phi_U"]
            c = leading_ratio(e.phiData["phi_U_split"], _lift(pu, e.field))
            return c == 27, f"constant {c}"

        def powers():
            return e.phiData["phi_u"] == e.phiData["phi_U"].with_var("u").substitute_power(6), "Phi(u) = Phi(U = u^6)"

        def spec():
            vals = [specialize(P, "atZero_b_over_d", shift=-1) for P in self.points]
            return all(verifyRoot(e.phiData["phi_u"], v) for v in vals), "u = x(-1)/y(-1) for P1..P4"

        return [("phi_factorization_Q", factors), ("phi_U_split_K3", split), ("phi_u_vs_U", powers),
                ("specialisation_roots", spec)]

    def errata_3(self):
        e = self.entry
        pu = e.phiData["phi_U"]
        c = leading_ratio(e.phiData["phi_U_split_printed"], _lift(pu, e.field))
        if c is None:
            self.erratum("Phi_3(U) split", "(zeta3^k 2^(2/3) + 1)^6 / 27", "(zeta3^k 2^(1/3) + 1)^6 / 27",
                         "only the cube-root form multiplies back")
        G, P = self.gram(), e.gram
        if G != P:
            self.erratum("M3 off-diagonal signs", rat_to_str(P[0, 1]), rat_to_str(G[0, 1]),
                         "P1 is the zeta twist of P2, which forces <P1, P2> = -h/2")

    def extra_4(self):
        e = self.entry

        def factors():
            return leading_ratio(e.phiData["phi_factors_Q"], e.phiData["phi_a"]) == 1, "degree 8 and 16 factors"

        def split():
            c = leading_ratio(e.phiData["phi_a_split"], _lift(e.phiData["phi_a"], e.field))
            return c == 1, "twelve linear factors and one degree-12 factor over K4"

        return [("phi_factorization_Q", factors), ("phi_split_K4", split)]

    def extra_5(self):
        e = self.entry
        V = UniPoly.gen("V")

        def reduction(name, target):
            def run():
                W = reduceByPower(e.phiData[name], 5, "W")
                lhs = W.compose(V * 60)
                return lhs == e.phiData[target] * 12960000, f"{name}(W = 60 V) = 60^4 {target}(V)"
            return run

        def vieta():
            roots = [r.value for r in e.rootValues if r.poly == "F1_V"]
            prod = roots[0]
            for r in roots[1:]:
                prod = prod * r
            return prod == 45, "v1 v2 v3 v4 = 45"

        return [("phi1_reduction", reduction("phi1_U", "F1_V")), ("phi2_reduction", reduction("phi2_U", "F2_V")),
                ("vieta_F1", vieta)]

    def extra_6(self):
        e = self.entry

        def tilde():
            return all(tildeAutomorphism(tildeAutomorphism(P, 1), 1) == P and onCurve(tildeAutomorphism(P, 1))
                       for P in self.points), "tilde is an involution on P1..P8"

        def u2():
            r = next(r for r in e.rootValues if r.name == "u2")
            return r.value ** 12 == e.field(Fraction(-1, 4)), "u2^12 = -1/4"

        return [("tilde_involution", tilde), ("u2_twelfth_power", u2)]

    def errata_6(self):
        e = self.entry
        for r in e.rootValues:
            printed = e.phiData["u12_printed"].get(r.name)
            if printed is not None and r.value ** 12 != printed:
                self.erratum(f"{r.name}^12 radicand", printed, r.value ** 12, "closed form raised to the 12th power")

    def extra_8(self):
        src = load_entry(4)

        def scaled():
            rep = scaledGramCheck(src.sections(), 2, formula_for(4), formula_for(8))
            return rep.ok, "Gram(P(t^2)) = 2 Gram(P)"

        def printed():
            bc = compareUpToBasis(self.gram(), self.entry.gram)
            return bc.ok, f"X = {bc.matrix}, det X = {bc.det}" if bc.ok else "no basis change found"

        return [("scale_law_4_to_8", scaled), ("printed_M8_same_lattice", printed)]

    def errata_8(self):
        G = self.gram()
        if G != self.entry.gram:
            self.erratum("M8 entries", "printed basis", "2 M4 in the base-changed basis",
                         "same lattice; the printed matrix is not 2 M4 entrywise")

    def extra_9(self):
        from .catalog import nonic

        def spec():
            e = self.entry
            full = _lift(_product([e.phiData[k] for k in PHI9_KEYS]), e.field)
            vals = {p.name: specialize(p.section, "atOne_a0_over_b0", shift=-1) for p in e.extraPoints}
            roots = {r.name: r.value for r in e.rootValues}
            ok = all(verifyRoot(full, vals[q]) for q in ("Q2", "Q3", "Q4"))
            ok = ok and vals["Q2"] == 1 and vals["Q3"] == roots["v11"] and vals["Q4"] == roots["v12"]
            return ok, "Q2, Q3, Q4 specialise to 1, v11, v12"

        def numeric3():
            res = nonic.phi3_linear_roots_numeric(self.precision)
            worst = max(r for _, r in res)
            return worst < NUMERIC_GATE, f"27 roots, worst relative residual 2^-{numeric.residual_bits(worst):.0f}"

        def numeric2():
            p = self.entry.phiData["Phi2"]
            worst = max(numeric.residual(p, v, self.precision) for _, v in nonic.phi2_roots())
            return worst < NUMERIC_GATE, f"18 roots, worst residual 2^-{numeric.residual_bits(worst):.0f}"

        def linear2():
            res = nonic.phi2_linear_check()
            return all(ok for _, ok in res), f"{sum(ok for _, ok in res)} of 6 cubics split in their towers"

        def block3():
            src = load_entry(3)
            G3 = gramMatrix(src.sections(), formula_for(3))
            return self.entry.gram.submatrix(range(4), range(4)) == G3 * 3, "leading 4 x 4 block = 3 Gram(P1..P4 on E3)"

        return [
            ("printed_block_vs_base_change", block3),
            ("phi1_linear_factors_K6", lambda: (nonic.phi1_check(), "Phi1 = 3 prod (u -+ v1k)")),
            ("phi2_cubic_product_K6", lambda: (nonic.phi2_product_check(), "Phi2 = 243 prod of six cubics")),
            ("phi2_linear_factors", linear2),
            ("phi2_roots_numeric", numeric2, "numeric"),
            ("phi3_nonic_product_K6", lambda: (nonic.phi3_product_check(), "Phi3 = 19683 D0 D1 D2")),
            ("phi3_roots_numeric", numeric3, "unverified-symbolic"),
            ("phi4_reflection", lambda: (nonic.phi4_reflection_check(), "Phi4(u) = -Phi3(-u)")),
            ("specialisation_roots", spec),
        ]

    def errata_9(self):
        e = self.entry
        q1 = next(p for p in e.extraPoints if p.name == "Q1")
        v = specialize(q1.section, "atOne_a0_over_b0", shift=-1)
        u = UniPoly.gen("u")
        if not (u * u + u + 1).divides(e.phiData["Phi2"]):
            self.erratum("root of Q1", "zeta3^2, via u^2 + u + 1 dividing Phi2", v,
                         "Phi2 is even and Phi2(zeta3) != 0; the root lies outside the five listed factors")

    def extra_10(self):
        src = load_entry(2)

        def scaled():
            rep = scaledGramCheck(src.sections(), 5, formula_for(2), formula_for(10))
            return rep.ok, "Gram(P(t^5)) = 5 Gram(P)"

        def block():
            return self.gram() == RAW_PRINTED_GRAMS[2] * 5, "computed block = 5 M2"

        def matrix_level():
            M = directSumGram([RAW_PRINTED_GRAMS[2] * 5, RAW_PRINTED_GRAMS[5] * 2])
            return M == self.entry.gram and ratDet(M) == ratDet(RAW_PRINTED_GRAMS[5] * 2) * ratDet(RAW_PRINTED_GRAMS[2] * 5), \
                "block diagonal 5 M2 + 2 M5"

        return [("scale_law_2_to_10", scaled), ("block_5M2", block), ("direct_sum_5M2_2M5", matrix_level)]

    def extra_12(self):
        K = fields.k6().field

        def identity():
            ti = transformIdentity(K)
            return ti.identity_holds and ti.target_sign == 1, "image residual = t^6 (F6 residual)"

        def symmetric_fix():
            raw = RAW_PRINTED_GRAMS[12]
            return (not raw.is_symmetric()) and self.entry.gram.is_symmetric(), \
                "printed entries (5,10) = 0, (10,5) = 1; symmetric choice 1 used"

        return [("f6_transform_identity", identity), ("printed_M12_symmetrised", symmetric_fix)]

    def errata_12(self):
        K = fields.k6().field
        ti = transformIdentity(K, printed=True)
        if ti.target_sign == -1:
            self.erratum("F6 to E12 map", "(zeta12^2 t^2 x, zeta12^3 t^3 y)", "(zeta3^2 t^2 x, -t^3 y)",
                         "the printed scalars land on y^2 = x^3 - t^12 - 1")
        raw = RAW_PRINTED_GRAMS[12]
        self.erratum("M12 entry (5,10)", rat_to_str(raw[4, 9]), rat_to_str(self.entry.gram[4, 9]),
                     f"printed matrix is not symmetric; det as printed {rat_to_str(ratDet(raw))}")


def verify(m: int, points=None, precision=None, workers: int = 1) -> SuiteRun:
    return Suite(m, points, precision).run(workers)

"""mwlat command line: verification pipelines with JSON certificates.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
3 a derivation hit its budget.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__, numeric
from .basechange import baseChange, compareUpToBasis, scaledGramCheck
from .catalog.build import dumps, load_entry, shipped_json
from .catalog.table import LATTICE_TABLE, expectedLattice
from .elimination import derivePhi, systemFor
from .errors import BudgetError, ConfigurationError, FormulaError, InputError, MwlatError
from .exact import is_positive_definite, minimum_and_kissing, rat_to_str, ratDet
from .heights import formula_for, gramMatrix
from .polyring.univariate import UniPoly, reduceByPower
from .sections import Section, onCurve
from .suite import SUITE_MS, CheckResult, Skip, Suite, run_checks
from .towerfield import TowerField

SCHEMA = "mwlat-cert/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
PHI_MS = (3, 4, 5, 6, 9)


class UsageError(Exception):
    pass


def certificate(command, m, checks, artifacts=None, errata=None, seconds=0.0, status=None) -> dict:
    if status is None:
        status = "fail" if any(c.status == "fail" for c in checks) else "pass"
    return {
        "schema": SCHEMA,
        "version": __version__,
        "command": command,
        "m": m,
        "status": status,
        "checks": [c.to_json() for c in checks],
        "errata": list(errata or []),
        "artifacts": artifacts or {},
        "timing": {"seconds": round(seconds, 3)},
    }


def exit_code(cert: dict) -> int:
    return {"pass": EXIT_OK, "fail": EXIT_FAIL, "budget": EXIT_BUDGET}[cert["status"]]


# input files


def load_points(path, m: int) -> list[Section]:
    """A JSON list of sections, or {"field": ..., "points": [...]}; the catalog field is the default."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read points file {path}: {exc}") from None
    field = load_entry(m).field if m in SUITE_MS else None
    if isinstance(data, dict):
        if "field" in data:
            field = TowerField.from_json(data["field"])
        data = data.get("points", [])
    if field is None:
        raise InputError(f"no catalog field for m = {m}; put a field in the points file")
    if not isinstance(data, list) or not data:
        raise InputError("points file holds no points")
    pts = []
    for item in data:
        try:
            P = Section.from_json(item, field)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad point entry: {exc}") from None
        if P.m != m:
            raise InputError(f"point for m = {P.m} given with --m {m}")
        pts.append(P)
    return pts


def _require_m(args, allowed):
    if args.m is None:
        raise UsageError("--m is required")
    if args.m not in allowed:
        raise UsageError(f"m = {args.m} not supported here; choose from {', '.join(map(str, allowed))}")
    return args.m


def _points_arg(args, m):
    return load_points(args.points, m) if args.points else None


# verbs


def cmd_verify(args) -> dict:
    m = _require_m(args, SUITE_MS)
    run = Suite(m, _points_arg(args, m), args.precision).run(args.workers)
    return certificate("verify", m, run.checks, run.artifacts, run.errata, run.seconds)


def _catalog_phi(m: int):
    """(catalog polynomial in the system variable, U-power linking u and U, U-form)."""
    e = load_entry(m)
    d = e.phiData
    if m == 3:
        return d["phi_u"], 6, d["phi_U"]
    if m == 4:
        a = UniPoly.gen("a")
        return a ** 24 + 17280 * a ** 12 - 110592, None, None
    if m == 5:
        prod = d["phi1_U"] * d["phi2_U"]
        return prod, 6, prod
    if m == 6:
        prod = d["phi6_factors_U"][0]
        for f in d["phi6_factors_U"][1:]:
            prod = prod * f
        return prod.with_var("u").substitute_power(12), 12, prod
    return None, None, None


def _factor_checks(m: int) -> list:
    suite = Suite(m)
    return [c for c in getattr(suite, f"extra_{m}")() if c[0].startswith("phi")]


def cmd_phi(args) -> dict:
    m = _require_m(args, PHI_MS)
    var = args.var
    if var not in (None, "u", "U"):
        raise UsageError("--var takes u or U")
    if m == 4 and var == "U":
        raise UsageError("the m = 4 polynomial is in a; --var U does not apply")
    start = time.perf_counter()
    checks = run_checks(_factor_checks(m))
    sysm = systemFor(m)
    arts = {"system": sysm.to_json(), "order": list(sysm.eliminationOrder)}
    catalog, power, u_form = _catalog_phi(m)
    try:
        res = derivePhi(sysm, catalog, deep=args.deep)
    except BudgetError as exc:
        checks.append(CheckResult("derive_phi", "skipped", f"budget: {exc}"))
        status = "fail" if any(c.status == "fail" for c in checks) else "budget"
        return certificate("phi", m, checks, arts, seconds=time.perf_counter() - start, status=status)
    arts.update(res.to_json())
    arts["order"] = list(sysm.eliminationOrder)
    if catalog is None:
        checks.append(CheckResult("derive_phi", "pass", f"eliminant of degree {res.normalized.degree()}"))
    else:
        ok = res.matchedFactor is not None
        checks.append(CheckResult("catalog_phi_divides_eliminant", "pass" if ok else "fail",
                                  f"degree {res.normalized.degree()}, catalog degree {catalog.degree()}"))
        if ok:
            from .polyring import normalizePrimitive
            back = normalizePrimitive(res.matchedFactor * res.cofactor)
            checks.append(CheckResult("eliminant_equals_match_times_cofactor",
                                      "pass" if back == res.normalized else "fail",
                                      f"cofactor degree {res.cofactor.degree()}"))
    native = "U" if m == 5 else ("a" if m == 4 else "u")
    if var and var != native and res.matchedFactor is not None:
        if var == "U":
            reduced = reduceByPower(res.matchedFactor, power, "U")
            ok = reduced == u_form.with_var("U")
            arts["matched_in_U"] = [str(c) for c in reduced.coeffs]
            checks.append(CheckResult("matched_factor_in_U", "pass" if ok else "fail", f"u^{power} = U"))
        else:
            arts["matched_in_u"] = [str(c) for c in res.matchedFactor.with_var("u").substitute_power(power).coeffs]
            checks.append(CheckResult("matched_factor_in_u", "pass", f"U = u^{power}"))
    return certificate("phi", m, checks, arts, seconds=time.perf_counter() - start)


def _gram_source(args, m):
    pts = _points_arg(args, m)
    suite = Suite(m, pts, args.precision)
    try:
        return suite, suite.lattice_gram(), bool(suite.points)
    except Skip:
        return suite, suite.entry.gram, False


def cmd_gram(args) -> dict:
    m = _require_m(args, SUITE_MS)
    start = time.perf_counter()
    suite, G, computed = _gram_source(args, m)
    row = expectedLattice(m)
    det = ratDet(G)
    mu, tau = minimum_and_kissing(G)
    match = det == row.det and mu == row.minNorm and tau == row.kissing and is_positive_definite(G)
    checks = [CheckResult("gram_matches_table", "pass" if match else "fail",
                          f"det {rat_to_str(det)}, min {rat_to_str(mu)}, kissing {tau}")]
    arts = {"gram": G.to_json(), "det": rat_to_str(det), "expected": row.to_json(), "match": match,
            "source": "computed" if computed else "printed"}
    return certificate("gram", m, checks, arts, seconds=time.perf_counter() - start)


def cmd_det(args) -> dict:
    m = _require_m(args, SUITE_MS)
    start = time.perf_counter()
    suite, G, computed = _gram_source(args, m)
    row = expectedLattice(m)
    checks = [CheckResult("det_vs_table", "pass" if ratDet(G) == row.det else "fail",
                          f"{'computed' if computed else 'printed'} det {rat_to_str(ratDet(G))}, table {rat_to_str(row.det)}")]
    arts = {"det": rat_to_str(ratDet(G)), "table_det": rat_to_str(row.det),
            "printed_det": rat_to_str(ratDet(suite.entry.gram))}
    return certificate("det", m, checks, arts, seconds=time.perf_counter() - start)


def cmd_basechange(args) -> dict:
    m = args.m
    if m is None or args.n is None:
        raise UsageError("basechange needs --m and --n")
    if args.n < 1:
        raise UsageError("--n must be a positive integer")
    start = time.perf_counter()
    if args.points:
        pts = load_points(args.points, m)
    elif m in SUITE_MS and load_entry(m).points:
        pts = load_entry(m).sections()
    else:
        raise UsageError(f"no catalog points for m = {m}; supply --points")
    for k, P in enumerate(pts):
        if not onCurve(P):
            raise InputError(f"source point {k + 1} is not on E_{m}")
    target = m * args.n
    moved = [baseChange(P, args.n) for P in pts]
    checks = [CheckResult(f"on_curve[{k + 1}]", "pass" if onCurve(Q) else "fail") for k, Q in enumerate(moved)]
    arts = {"n": args.n, "target_m": target, "points": [str(Q) for Q in moved],
            "points_json": [Q.to_json() for Q in moved]}
    try:
        rep = scaledGramCheck(pts, args.n, formula_for(m), formula_for(target))
    except FormulaError as exc:
        checks.append(CheckResult("scaled_gram", "skipped", str(exc)))
        return certificate("basechange", m, checks, arts, seconds=time.perf_counter() - start)
    arts["report"] = rep.to_json()
    arts["det"] = rat_to_str(ratDet(rep.target))
    checks.append(CheckResult("scaled_gram", "pass" if rep.ok else "fail", f"Gram after t -> t^{args.n} = {args.n} Gram before"))
    if target in SUITE_MS:
        printed = load_entry(target).gram
        if printed is not None and printed.rows == rep.target.rows:
            bc = compareUpToBasis(rep.target, printed)
            checks.append(CheckResult("printed_target_gram", "pass" if bc.ok else "fail",
                                      f"X = {bc.matrix}" if bc.ok else "no basis change to the printed matrix"))
        elif printed is not None:
            block = printed.submatrix(range(rep.target.rows), range(rep.target.rows))
            checks.append(CheckResult("printed_target_block", "pass" if block == rep.target else "fail",
                                      f"leading {rep.target.rows} x {rep.target.rows} block of the printed matrix"))
    return certificate("basechange", m, checks, arts, seconds=time.perf_counter() - start)


def cmd_catalog(args) -> dict:
    start = time.perf_counter()
    if args.m is None:
        arts = {"ms": list(SUITE_MS), "table": {str(m): row.to_json() for m, row in sorted(LATTICE_TABLE.items())}}
        return certificate("catalog", None, [], arts, seconds=time.perf_counter() - start)
    m = _require_m(args, SUITE_MS)
    return certificate("catalog", m, [], {"entry": shipped_json(m)}, seconds=time.perf_counter() - start)


def cmd_eval(args) -> dict:
    m = _require_m(args, SUITE_MS)
    start = time.perf_counter()
    prec = numeric.default_precision() if args.precision is None else args.precision
    e = load_entry(m)
    checks, rows = [], []
    for r in e.rootValues:
        p = e.phiData[r.poly]
        a = r.value ** r.power
        r1 = numeric.residual(p, a, prec)
        r2 = numeric.residual(p, a, 2 * prec)
        rows.append({
            "name": r.name, "poly": r.poly, "power": r.power,
            "value": numeric.evalElement(r.value, prec).hex(),
            "residual_bits": [numeric.residual_bits(r1), numeric.residual_bits(r2)],
        })
        if r.note.startswith("expected to fail"):
            continue
        ok = r1 < numeric.mpmath.mpf(2) ** -64
        checks.append(CheckResult(f"residual[{r.name}]", "pass" if ok else "fail",
                                  f"2^-{numeric.residual_bits(r1):.0f} at {prec} bits", "numeric"))
    return certificate("eval", m, checks, {"precision": prec, "roots": rows}, seconds=time.perf_counter() - start)


VERBS = {
    "verify": cmd_verify, "phi": cmd_phi, "gram": cmd_gram, "basechange": cmd_basechange,
    "catalog": cmd_catalog, "det": cmd_det, "eval": cmd_eval,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mwlat", description="Mordell-Weil lattices of y^2 = x^3 + t^m + 1")
    ap.add_argument("--version", action="version", version=f"mwlat {__version__}")
    sub = ap.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        p = sub.add_parser(verb)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--var")
        p.add_argument("--deep", action="store_true")
        p.add_argument("--precision", type=int)
        p.add_argument("--json", metavar="PATH", help="write the certificate here; '-' for stdout")
        p.add_argument("--points", metavar="PATH")
        p.add_argument("--workers", type=int, default=1)
    return ap


def summary_lines(cert: dict):
    head = f"{cert['command']}"
    if cert["m"] is not None:
        head += f" m={cert['m']}"
    yield f"{head}: {cert['status']}"
    for c in cert["checks"]:
        tag = "" if c["evidence"] == "exact" else f" [{c['evidence']}]"
        yield f"  {c['status']:7s} {c['name']}{tag}" + (f": {c['detail']}" if c["detail"] else "")
    for e in cert["errata"]:
        yield f"  erratum {e['item']}: printed {e['printed']}, derived {e['derived']}"
    arts = cert["artifacts"]
    if "det" in arts:
        yield f"  det {arts['det']}"


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.precision is not None and args.precision < 64:
            raise UsageError("--precision must be at least 64")
        cert = VERBS[args.verb](args)
    except (UsageError, InputError, ConfigurationError) as exc:
        print(f"mwlat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"mwlat: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except MwlatError as exc:
        print(f"mwlat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = dumps(cert)
    if args.json == "-":
        sys.stdout.write(text + "\n")
    else:
        if args.json:
            Path(args.json).write_text(text + "\n")
        if args.verb == "catalog" and not args.json:
            sys.stdout.write(text + "\n")
        else:
            for line in summary_lines(cert):
                print(line)
    return exit_code(cert)


if __name__ == "__main__":
    sys.exit(main())

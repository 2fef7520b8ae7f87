"""Serialise catalog entries to the shipped JSON files and load them back.

Run ``python3 -m mwlat.catalog.build`` to regenerate src/mwlat/data.
"""
from __future__ import annotations

import json
import sys
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..exact import RatMatrix
from ..polyring.univariate import QQ, UniPoly
from ..sections import Section
from ..towerfield import TowerElement, TowerField
from .points import CATALOG_MS, RAW_PRINTED_GRAMS, CatalogEntry, NamedPoint, RootValue, build_entry
from .table import expectedLattice, invariantsFor

SCHEMA = "mwlat-catalog/1"


def _enc(value, field):
    if isinstance(value, UniPoly):
        return {"poly": value.to_json(), "over": "Q" if value.field is QQ else "K"}
    if isinstance(value, list):
        return {"list": [_enc(v, field) for v in value]}
    if isinstance(value, dict):
        return {"dict": {k: _enc(v, field) for k, v in sorted(value.items())}}
    if isinstance(value, TowerElement):
        return {"element": value.to_json()}
    raise TypeError(f"cannot serialise {type(value).__name__}")


def _dec(data, field):
    if "poly" in data:
        return UniPoly.from_json(data["poly"], QQ if data["over"] == "Q" else field)
    if "list" in data:
        return [_dec(v, field) for v in data["list"]]
    if "dict" in data:
        return {k: _dec(v, field) for k, v in data["dict"].items()}
    if "element" in data:
        return field(data["element"])
    raise ValueError(f"unknown catalog value {sorted(data)}")


def _point_json(p: NamedPoint) -> dict:
    return {"name": p.name, "note": p.note, "section": p.section.to_json()}


def entry_to_json(e: CatalogEntry) -> dict:
    out = {
        "schema": SCHEMA,
        "m": e.m,
        "invariants": invariantsFor(e.m).to_json(),
        "lattice": expectedLattice(e.m).to_json(),
        "field_name": e.fieldName,
        "field": e.field.to_json(),
        "points": [_point_json(p) for p in e.points],
        "extra_points": [_point_json(p) for p in e.extraPoints],
        "errata_points": [_point_json(p) for p in e.errataPoints],
        "gram": None if e.gram is None else e.gram.to_json(),
        "phi": {k: _enc(v, e.field) for k, v in sorted(e.phiData.items())},
        "minpoly": None if e.minpoly is None else e.minpoly.to_json(),
        "roots": [{"name": r.name, "value": _enc(r.value, e.field), "poly": r.poly, "power": r.power,
                   "note": r.note} for r in e.rootValues],
        "notes": list(e.notes),
    }
    raw = RAW_PRINTED_GRAMS.get(e.m)
    if raw is not None and e.gram is not None and raw != e.gram:
        out["gram_as_printed"] = raw.to_json()
    return out


def entry_from_json(data: dict) -> CatalogEntry:
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported catalog schema {data.get('schema')!r}")
    field = TowerField.from_json(data["field"])

    def pts(items):
        return [NamedPoint(p["name"], Section.from_json(p["section"], field), p["note"]) for p in items]

    e = CatalogEntry(data["m"], data["field_name"], field)
    e.points = pts(data["points"])
    e.extraPoints = pts(data["extra_points"])
    e.errataPoints = pts(data["errata_points"])
    e.gram = None if data["gram"] is None else RatMatrix.from_json(data["gram"])
    e.phiData = {k: _dec(v, field) for k, v in data["phi"].items()}
    e.minpoly = None if data["minpoly"] is None else UniPoly.from_json(data["minpoly"])
    e.rootValues = [RootValue(r["name"], _dec(r["value"], field), r["poly"], r["power"], r["note"])
                    for r in data["roots"]]
    e.notes = list(data["notes"])
    return e


def dumps(data: dict) -> str:
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def data_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "data"


@lru_cache(maxsize=None)
def load_entry(m: int) -> CatalogEntry:
    """The shipped catalog entry for m."""
    if m not in CATALOG_MS:
        raise KeyError(f"no catalog entry for m = {m}")
    text = resources.files("mwlat").joinpath("data", f"m{m}.json").read_text()
    return entry_from_json(json.loads(text))


def shipped_json(m: int) -> dict:
    return json.loads(resources.files("mwlat").joinpath("data", f"m{m}.json").read_text())


def rebuild_json(m: int) -> dict:
    return json.loads(dumps(entry_to_json(build_entry(m))))


def main(argv=None) -> int:
    out = Path(argv[0]) if argv else data_dir()
    out.mkdir(parents=True, exist_ok=True)
    for m in CATALOG_MS:
        (out / f"m{m}.json").write_text(dumps(entry_to_json(build_entry(m))))
        print(f"wrote m{m}.json")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

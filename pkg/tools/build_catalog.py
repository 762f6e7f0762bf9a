"""Compile the catalog sources under tools/catalog_sources into JSON data files.

Each source module exposes ``CATALOG``, a list of (family, kind, entries), and
optionally ``CORRESPONDENCE`` mapping a target family to {source id: target id}.

    python3 tools/build_catalog.py [--out DIR] [--check]
"""

from __future__ import annotations

import argparse
import importlib
import json
import pkgutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT.parent / "src"))

from askey_contiguity.catalog.expr import parse  # noqa: E402

DEFAULT_OUT = ROOT.parent / "src" / "askey_contiguity" / "catalog" / "data"


def node(src: str) -> dict:
    return {"src": src, "tree": parse(src)}


def compile_entry(kind: str, raw: dict) -> dict:
    shift = dict(raw["shift"])
    if "bar" in shift:
        shift["bar"] = {k: node(v) for k, v in shift["bar"].items()}
    out = {"id": raw["id"], "kind": kind, "shift": shift}
    if "parts" in raw:
        out["parts"] = list(raw["parts"])
    forms = {}
    for direction in ("plus", "minus"):
        if direction in raw:
            form = raw[direction]
            forms[direction] = {"lam": node(form["lam"]),
                                "coeffs": {k: node(v) for k, v in form["coeffs"].items()}}
    out["forms"] = forms
    if "printed" in raw:
        out["printed"] = {d: {k: node(v) for k, v in f.items()} for d, f in raw["printed"].items()}
    for key in ("nu_point", "chi"):
        if key in raw:
            out[key] = node(raw[key])
    if "measure" in raw:
        out["measure"] = {k: node(v) for k, v in raw["measure"].items()}
    if "defs" in raw:
        out["defs"] = {name: node(v) if isinstance(v, str) else {case: node(t) for case, t in v.items()}
                       for name, v in raw["defs"].items()}
    for key, value in raw.items():
        if key not in ("id", "shift", "parts", "plus", "minus", "printed", "nu_point", "chi", "measure", "defs"):
            out[key] = value
    return out


def collect():
    import catalog_sources

    by_family, corr = {}, {}
    for info in pkgutil.iter_modules(catalog_sources.__path__):
        module = importlib.import_module(f"catalog_sources.{info.name}")
        for family, kind, entries in getattr(module, "CATALOG", []):
            bucket = by_family.setdefault(family, [])
            bucket.extend(compile_entry(kind, e) for e in entries)
        for target, table in getattr(module, "CORRESPONDENCE", {}).items():
            corr.setdefault(target, {}).update(table)
    return by_family, corr


def render(doc) -> str:
    return json.dumps(doc, indent=1, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    ap.add_argument("--check", action="store_true", help="fail if the data files are out of date")
    args = ap.parse_args(argv)
    by_family, corr = collect()
    files = {f"{fam}.json": render({"family": fam, "format": 1, "entries": entries})
             for fam, entries in sorted(by_family.items())}
    if corr:
        files["correspondence.json"] = render(corr)
    stale = []
    args.out.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        path = args.out / name
        if path.exists() and path.read_text(encoding="utf-8") == text:
            continue
        stale.append(name)
        if not args.check:
            path.write_text(text, encoding="utf-8")
    if args.check and stale:
        print("out of date: " + ", ".join(stale))
        return 1
    print(f"{len(files)} files, {sum(len(v) for v in by_family.values())} entries")
    return 0


if __name__ == "__main__":
    sys.exit(main())

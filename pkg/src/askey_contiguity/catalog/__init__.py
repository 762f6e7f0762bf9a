"""Catalog of contiguity relations stored as expression trees, one JSON file per family."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .. import families as fam
from ..constraints import ShiftContext, ShiftMap, parse_nbar
from ..contiguity import RelationInstance, build_instance, compose_a2_to_b2, compose_a2_to_b2p
from ..errors import SingularParameters, UnknownCorrespondence, UnsupportedFamily
from ..families import ParameterSet
from ..scalar import ZERO, rational
from .expr import compile_tree, parse

DATA_DIR = Path(__file__).with_name("data")
KIND_LABELS = {"A2": "A2", "B2": "B2", "B2p": "B2'", "BI": "BI", "G": "G"}


def data_dir() -> Path:
    override = os.environ.get("ASKEY_CATALOG_DIR")
    return Path(override) if override else DATA_DIR


@dataclass(frozen=True)
class Form:
    """One direction of a relation: lambda formula plus coefficient formulas keyed by offset."""

    lam: list
    coeffs: dict
    src: dict = field(default_factory=dict, compare=False)

    @property
    def support(self) -> tuple:
        return tuple(sorted(self.coeffs, reverse=True))


@dataclass(frozen=True)
class RelationEntry:
    id: str
    family: str
    kind: str
    shift: dict
    forms: dict
    parts: tuple = ()
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def directions(self) -> tuple:
        return tuple(self.forms)

    def shift_map(self, params: ParameterSet | None = None) -> ShiftMap:
        return ShiftMap.from_json(self.family, self.shift)

    def to_json(self) -> dict:
        out = {"id": self.id, "family": self.family, "kind": self.kind, "shift": self.shift}
        if self.parts:
            out["parts"] = list(self.parts)
        out["forms"] = {d: {"lam": f.src.get("lambda"), "coeffs": {str(e): f.src.get(e) for e in f.support}}
                        for d, f in self.forms.items()}
        out.update(self.extra)
        return out


def _read_form(data: dict) -> Form:
    lam = data["lam"]
    coeffs, src = {}, {"lambda": lam["src"]}
    for key, node in data["coeffs"].items():
        coeffs[int(key)] = node["tree"]
        src[int(key)] = node["src"]
    return Form(lam["tree"], coeffs, src)


def printed_entry(entry: RelationEntry) -> RelationEntry:
    """The entry with its uncorrected formulas, where a correction was stored."""
    printed = entry.extra.get("printed")
    if not printed:
        return entry
    forms = dict(entry.forms)
    for direction, changes in printed.items():
        form = forms[direction]
        lam, coeffs, src = form.lam, dict(form.coeffs), dict(form.src)
        for key, node in changes.items():
            if key == "lambda":
                lam = node["tree"]
                src["lambda"] = node["src"]
            else:
                coeffs[int(key)] = node["tree"]
                src[int(key)] = node["src"]
        forms[direction] = Form(lam, coeffs, src)
    extra = {k: v for k, v in entry.extra.items() if k not in ("printed", "correction")}
    return RelationEntry(entry.id, entry.family, entry.kind, entry.shift, forms, entry.parts, extra)


def corrected_entries() -> list:
    """Entries that carry a correction of their formulas."""
    return [e for e in all_relations() if "printed" in e.extra]


def _read_entry(family: str, data: dict) -> RelationEntry:
    forms = {d: _read_form(f) for d, f in data["forms"].items()}
    known = {"id", "kind", "shift", "forms", "parts"}
    extra = {k: v for k, v in data.items() if k not in known}
    return RelationEntry(data["id"], family, data["kind"], data["shift"], forms, tuple(data.get("parts", ())), extra)


@lru_cache(maxsize=None)
def _load(directory: str, family: str) -> tuple:
    path = Path(directory) / f"{family}.json"
    if not path.exists():
        return ()
    doc = json.loads(path.read_text(encoding="utf-8"))
    return tuple(_read_entry(family, e) for e in doc["entries"])


def families() -> list:
    """Family tags with a catalog file."""
    return sorted(p.stem for p in data_dir().glob("*.json") if p.stem != "correspondence")


def list_relations(family: str, kind: str | None = None) -> list:
    """Catalog relations of a family, optionally restricted to one kind."""
    if kind == "B2'":
        kind = "B2p"
    entries = _load(str(data_dir()), family)
    return [e for e in entries if kind is None or e.kind == kind]


def all_relations(kind: str | None = None) -> list:
    return [e for f in families() for e in list_relations(f, kind)]


def get_entry(relation_id: str, family: str | None = None) -> RelationEntry:
    pool = list_relations(family) if family else all_relations()
    for entry in pool:
        if entry.id == relation_id:
            return entry
    raise KeyError(f"no catalog relation {relation_id!r}")


def raw_source(relation_id: str) -> dict:
    """The stored JSON record of an entry, trees included."""
    entry = get_entry(relation_id)
    doc = json.loads((data_dir() / f"{entry.family}.json").read_text(encoding="utf-8"))
    return next(e for e in doc["entries"] if e["id"] == relation_id)


def _env(params: ParameterSet) -> dict:
    env = dict(params.named)
    env["N"] = rational(params.N)
    env["Ne"], env["Np"] = (rational(v) for v in divmod(params.N, 2))
    return env


def _with_index(env: dict, name: str, value: int) -> dict:
    """Bind an integer variable together with its even part and parity bit."""
    half, bit = divmod(int(value), 2)
    return {**env, name: rational(value), name + "e": rational(half), name + "p": rational(bit)}


def _compile_defs(entry: RelationEntry, resolve) -> dict:
    """Per-degree constants of an entry; a dict value is split on the parity of i."""
    out = {}
    for name, spec in entry.extra.get("defs", {}).items():
        if "tree" in spec:
            out[name] = compile_tree(spec["tree"], resolve)
        else:
            cases = {case: compile_tree(node["tree"], resolve) for case, node in spec.items()}
            out[name] = lambda env, cases=cases: cases["odd" if env["ip"] else "even"](env)
    return out


def form_evaluators(entry: RelationEntry, params: ParameterSet, direction: str = "plus"):
    """Return (lam(x), coeff(i, eps), support) bound to ``params``."""
    try:
        form = entry.forms[direction]
    except KeyError:
        raise UnsupportedFamily(f"{entry.id} has no {direction} form in the catalog") from None
    base = _env(params)
    lam_fn = None
    coeff_fns, defs = {}, {}

    def resolve(name, env):
        if name == "lambda":
            return lam_fn(env)
        if name in defs:
            return defs[name](env)
        return coeff_fns[int(name)](env)

    defs = _compile_defs(entry, resolve)
    lam_fn = compile_tree(form.lam, resolve)
    coeff_fns = {e: compile_tree(t, resolve) for e, t in form.coeffs.items()}

    def lam(x):
        return lam_fn(_with_index(_with_index(base, "x", x), "i", 0))

    def coeff(i, e):
        if e not in coeff_fns:
            return 0
        return coeff_fns[e](_with_index(_with_index(base, "i", i), "x", 0))

    return lam, coeff, form.support


def bar_evaluators(entry: RelationEntry, params: ParameterSet):
    """Partner parameter values and partner N for an entry that stores an explicit bar map."""
    env = _env(params)
    named = {k: compile_tree(node["tree"])(env) for k, node in entry.shift["bar"].items()}
    return named, params.N + parse_nbar(entry.shift.get("N_bar", "N"))


def instantiate(entry: RelationEntry, params: ParameterSet, direction: str = "plus") -> RelationInstance:
    """Bind a catalog entry to concrete parameters."""
    if entry.kind == "BI":
        from ..banita import instantiate_bi

        return instantiate_bi(entry, params, direction)
    if params.family != entry.family:
        raise UnsupportedFamily(f"{entry.id} belongs to {entry.family}, not {params.family}")
    ctx = ShiftContext(params, entry.shift_map(params))
    lam, coeff, support = form_evaluators(entry, params, direction)
    rel = build_instance(entry.id, entry.kind, direction, ctx, lam, coeff, support)
    rel.meta["catalog"] = True
    return rel


def check_denominators(entry: RelationEntry, params: ParameterSet) -> None:
    """Raise SingularParameters if any stored formula is undefined on the working grid."""
    for direction in entry.directions:
        rel = instantiate(entry, params, direction)
        for x in rel.points():
            rel.lam(x)
        for i in rel.degrees():
            for e in rel.support:
                if i + e >= 0:
                    rel.coeff(i, e)


def applicable_N(entry: RelationEntry, N: int) -> bool:
    """Whether the entry is stated for this N (BI relations fix the parity of N)."""
    if entry.kind == "BI":
        return N % 2 == (0 if entry.shift["parity"] == "even" else 1)
    return N + parse_nbar(entry.shift.get("N_bar", "N")) >= 0


def sample_parameters(entry: RelationEntry, N: int, rng, retries: int = 100) -> ParameterSet:
    """Random admissible parameters at which every formula of the entry is defined.

    The shifted parameters must be admissible too.  Raises SingularParameters
    when no draw succeeds within ``retries``.
    """
    if entry.kind == "BI":
        from ..banita import random_bi_parameters

        return random_bi_parameters(entry, N, rng, retries)

    def usable(p):
        check_denominators(entry, p)
        problem = fam.admissibility_problem(entry.shift_map().apply(p))
        if problem:
            raise SingularParameters(problem)

    return fam.random_parameters(entry.family, N, rng, retries=retries, extra_check=usable)


def verify_entry(entry: RelationEntry, params: ParameterSet, printed: bool = False):
    """Verify every stored direction of an entry; one combined report.

    With ``printed`` the uncorrected formulas are used where a correction was stored.
    """
    from ..constraints import VerificationReport
    from ..contiguity import verify_relation

    if printed:
        entry = printed_entry(entry)
    if entry.kind == "BI":
        from ..banita import verify_bi_relation

        return verify_bi_relation(entry, params)
    parts = []
    for direction in entry.directions:
        try:
            rel = instantiate(entry, params, direction)
        except (SingularParameters, ZeroDivisionError) as exc:
            return VerificationReport(entry.id, params.to_json(), False, status="skipped", detail=str(exc))
        parts.append((direction, verify_relation(rel, params)))
    locus = [dict(loc, direction=d) for d, r in parts for loc in r.residual_locus]
    statuses = {r.status for _, r in parts}
    report = VerificationReport(entry.id, params.to_json(), statuses == {"pass"}, residual_locus=locus,
                                checked=sum(r.checked for _, r in parts))
    if not locus and statuses != {"pass"}:
        report.status = "skipped" if "skipped" in statuses else "inconclusive"
        report.detail = "; ".join(r.detail for _, r in parts if r.detail)
    report.extra["directions"] = {d: r.status for d, r in parts}
    if "printed" in entry.extra or printed:
        report.extra["formulas"] = "printed" if printed else "corrected"
    return report


def identity_instance(params: ParameterSet) -> RelationInstance:
    """The trivial relation R_i = R_i."""
    ctx = ShiftContext(params, ShiftMap.identity(params.family))
    return build_instance("trivial", "A2", "plus", ctx, lambda x: 1, lambda i, e: 1 if e == 0 else 0, (0,))


def compose_parts(entry: RelationEntry, params: ParameterSet) -> RelationInstance:
    """Rebuild a B2 or B2' entry at ``params`` by chaining the two A2 entries it is made of.

    B2: plus form of the first part, then the minus form of the second part
    landing on the first part's shifted parameters. B2': two plus forms.
    """
    if entry.kind not in ("B2", "B2p") or len(entry.parts) != 2:
        raise ValueError(f"{entry.id} is not a composed entry")
    first, second = (get_entry(rid, entry.family) for rid in entry.parts)
    rel_first = instantiate(first, params, "plus")
    middle = first.shift_map().apply(params)
    if entry.kind == "B2":
        start = second.shift_map().inverse().apply(middle)
        return compose_a2_to_b2(rel_first, instantiate(second, start, "minus"))
    return compose_a2_to_b2p(rel_first, instantiate(second, middle, "plus"))


@lru_cache(maxsize=None)
def _correspondence(directory: str) -> dict:
    path = Path(directory) / "correspondence.json"
    return json.loads(path.read_text(encoding="utf-8")) if path.exists() else {}


def limit_correspondence(source_id: str, target_family: str) -> str:
    """Catalog image of a relation under a limit to ``target_family``; "trivial" when it degenerates."""
    table = _correspondence(str(data_dir())).get(target_family, {})
    if source_id not in table:
        raise UnknownCorrespondence(f"no stated correspondence for {source_id} -> {target_family}")
    return table[source_id]


def correspondence_table() -> dict:
    return {k: dict(v) for k, v in _correspondence(str(data_dir())).items()}


def stored_nodes(data, path: str = ""):
    """Yield (path, node) for every {"src", "tree"} pair inside a stored entry."""
    if isinstance(data, dict):
        if "src" in data and "tree" in data:
            yield path, data
            return
        for key, value in data.items():
            yield from stored_nodes(value, f"{path}/{key}" if path else str(key))


def tree_matches_source(entry_json: dict) -> list:
    """Paths of stored trees that differ from a fresh parse of their source string."""
    return [path for path, node in stored_nodes(entry_json) if parse(node["src"]) != node["tree"]]


__all__ = [
    "Form", "RelationEntry", "list_relations", "all_relations", "get_entry", "instantiate",
    "limit_correspondence", "correspondence_table", "families", "identity_instance",
    "check_denominators", "form_evaluators", "bar_evaluators", "stored_nodes", "applicable_N", "sample_parameters",
    "verify_entry", "compose_parts", "printed_entry", "corrected_entries", "tree_matches_source", "data_dir", "raw_source",
    "SingularParameters",
]

"""Command-line front end: list, verify, sweep, classify, spectral and report.

Every command writes a JSON report {version, config_echo, results, summary}
and exits 0 when no check failed, 1 when at least one failed and 2 on a
configuration error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__, catalog, search, spectral
from . import families as fam
from .constraints import ShiftMap
from .contiguity import generic_relation, verify_relation
from .errors import AskeyError, InsufficientSamples, SingularParameters
from .families import ParameterSet
from .scalar import rational

REPORT_VERSION = 1
DEFAULT_OUTPUT = "askey-contiguity-report.json"
DEFAULT_SEED = 7
PARAM_FLAGS = ("alpha", "beta", "gamma", "delta", "q", "z")
KIND_CHOICES = ("A2", "B2", "B2'", "B2p", "BI", "G")


class ConfigError(Exception):
    pass


def parse_range(text: str) -> list:
    """"3" -> [3], "2..5" -> [2, 3, 4, 5]."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise ConfigError(f"bad N range {text!r}; use 3 or 2..5") from None
    if lo < 0 or hi < lo:
        raise ConfigError(f"bad N range {text!r}")
    return list(range(lo, hi + 1))


def _kind(text: str | None) -> str | None:
    return "B2p" if text in ("B2'", "B2p") else text


def _explicit_params(args) -> dict:
    out = {}
    for name in PARAM_FLAGS:
        value = getattr(args, name, None)
        if value is not None:
            try:
                out[name] = rational(value)
            except (ValueError, ZeroDivisionError):
                raise ConfigError(f"--{name} must be a p/q rational, got {value!r}") from None
    return out


def _status_counts(results: list) -> dict:
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        status = r.get("status")
        if status == "pass":
            summary["pass"] += 1
        elif status == "fail":
            summary["fail"] += 1
        else:
            summary["skipped"] += 1
    return summary


def exit_status(summary: dict) -> int:
    return 1 if summary.get("fail", 0) else 0


def _sample(entry, N, rng, retries):
    try:
        return catalog.sample_parameters(entry, N, rng, retries), None
    except SingularParameters as exc:
        return None, str(exc)


# ---------------------------------------------------------------------------
# commands


def cmd_list(args) -> list:
    kind = _kind(args.kind)
    entries = catalog.list_relations(args.family, kind) if args.family else catalog.all_relations(kind)
    for e in entries:
        print(e.id)
    return [{"relation_id": e.id, "family": e.family, "kind": catalog.KIND_LABELS.get(e.kind, e.kind),
             "status": "listed"} for e in entries]


def _find_entry(args):
    try:
        return catalog.get_entry(args.relation, args.family)
    except KeyError:
        raise ConfigError(f"unknown relation {args.relation!r}") from None


def cmd_verify(args) -> list:
    if not args.relation and not args.shift:
        raise ConfigError("verify needs --relation or --shift")
    if args.relation and args.shift:
        raise ConfigError("give either --relation or --shift, not both")
    Ns = parse_range(args.N)
    explicit = _explicit_params(args)
    rng = random.Random(args.seed)
    results = []
    if args.relation:
        entry = _find_entry(args)
        family = entry.family
        for N in Ns:
            if not catalog.applicable_N(entry, N):
                results.append({"relation_id": entry.id, "N": N, "status": "skipped",
                                "detail": "relation not stated for this N"})
                continue
            for params in _param_sets(family, N, explicit, args, rng, entry):
                if isinstance(params, dict):
                    results.append(params)
                    continue
                results.append(catalog.verify_entry(entry, params, printed=args.printed).to_json())
        return results
    if not args.family:
        raise ConfigError("--shift needs --family")
    try:
        shift = ShiftMap.from_json(args.family, json.loads(args.shift))
    except (ValueError, AskeyError) as exc:
        raise ConfigError(f"bad --shift: {exc}") from None
    kind = _kind(args.kind) or "A2"
    for N in Ns:
        for params in _param_sets(args.family, N, explicit, args, rng, None):
            if isinstance(params, dict):
                results.append(params)
                continue
            for direction in ("plus", "minus"):
                try:
                    rel = generic_relation(kind, direction, params, shift)
                    rep = verify_relation(rel, params).to_json()
                except (SingularParameters, AskeyError) as exc:
                    rep = {"relation_id": f"{kind}[{shift.label()}]", "params": params.to_json(),
                           "status": "skipped", "detail": str(exc)}
                rep["direction"] = direction
                results.append(rep)
    return results


def _param_sets(family, N, explicit, args, rng, entry):
    f = fam.get_family(family)
    if explicit:
        missing = [p for p in f.params if p not in explicit]
        if missing:
            raise ConfigError(f"{family} also needs {', '.join('--' + m for m in missing)}")
        extra = [p for p in explicit if p not in f.params]
        if extra:
            raise ConfigError(f"{family} does not take {', '.join('--' + m for m in extra)}")
        try:
            yield ParameterSet.make(family, N, explicit)
        except (ValueError, AskeyError) as exc:
            raise ConfigError(str(exc)) from None
        return
    for _ in range(args.samples):
        if entry is not None:
            params, why = _sample(entry, N, rng, args.retries)
        else:
            try:
                params, why = fam.random_parameters(family, N, rng, retries=args.retries), None
            except SingularParameters as exc:
                params, why = None, str(exc)
        if params is None:
            yield {"relation_id": entry.id if entry else family, "N": N, "status": "skipped", "detail": why}
        else:
            yield params


def _select_entries(args) -> list:
    kind = _kind(args.kind)
    if args.all:
        return catalog.all_relations(kind)
    if not args.family and not args.relation:
        raise ConfigError("sweep needs --all, --family or --relation")
    entries = []
    for family in args.family or []:
        if family not in catalog.families():
            raise ConfigError(f"no catalog for family {family!r}")
        entries.extend(catalog.list_relations(family, kind))
    for rid in args.relation or []:
        try:
            entries.append(catalog.get_entry(rid))
        except KeyError:
            raise ConfigError(f"unknown relation {rid!r}") from None
    return entries


def cmd_sweep(args) -> list:
    Ns = parse_range(args.N)
    rng = random.Random(args.seed)
    results = []
    for entry in _select_entries(args):
        for N in Ns:
            if not catalog.applicable_N(entry, N):
                continue
            for _ in range(args.samples):
                params, why = _sample(entry, N, rng, args.retries)
                if params is None:
                    results.append({"relation_id": entry.id, "N": N, "status": "skipped", "detail": why})
                    continue
                rep = catalog.verify_entry(entry, params, printed=args.printed).to_json()
                rep["N"] = N
                results.append(rep)
    if not args.quiet:
        _print_table(results)
    return results


def cmd_classify(args) -> list:
    kind = _kind(args.kind) or "A2"
    families = args.family or ["K", "dqK", "aqK"]
    results = []
    for family in families:
        space = search.SearchSpace.default(family, samples=args.samples, Ns=tuple(parse_range(args.N)))
        try:
            rep = search.classify(space, kind, seed=args.seed)
        except InsufficientSamples as exc:
            results.append({"relation_id": f"classify:{family}", "status": "skipped", "detail": str(exc)})
            continue
        summary = search.summarize(rep)
        rep["relation_id"] = f"classify:{family}:{kind}"
        rep["status"] = "pass" if summary.exact else "fail"
        print(f"{family} {kind}: matched {', '.join(rep['matched'])}; unmatched {rep['unmatched'] or 'none'}; "
              f"missing {rep['missing'] or 'none'}")
        results.append(rep)
    return results


def cmd_spectral(args) -> list:
    ids = args.relation or ["qRI", "qRII", "qRIII", "qRIV", "RI", "RII", "RIII", "RIV"]
    rng = random.Random(args.seed)
    results = []
    for rid in ids:
        try:
            entry = catalog.get_entry(rid)
        except KeyError:
            raise ConfigError(f"unknown relation {rid!r}") from None
        if "nu_point" not in entry.extra:
            raise ConfigError(f"{rid} has no stored spectral data")
        for N in parse_range(args.N):
            for _ in range(args.samples):
                params, why = _sample(entry, N, rng, args.retries)
                if params is None:
                    results.append({"relation_id": rid, "N": N, "status": "skipped", "detail": why})
                    continue
                checks = [("transforms", spectral.verify_christoffel_geronimus(params, entry.shift_map(), rid)),
                          ("printed_nu", spectral.verify_printed_nu(entry, params))]
                if rid in spectral.MEASURE_RELATIONS:
                    checks.append(("measure", spectral.verify_measure_identity(rid, params)))
                if args.chi:
                    checks.append(("geronimus_chi", spectral.verify_geronimus_chi(entry, params)))
                for name, rep in checks:
                    out = rep.to_json()
                    out["check"] = name
                    out["N"] = N
                    results.append(out)
    _print_table(results, key="check")
    return results


def cmd_report(args) -> list:
    path = Path(args.input)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        results = doc["results"]
        summary = doc["summary"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"cannot read report {path}: {exc}") from None
    recomputed = _status_counts(results)
    if recomputed != {k: summary.get(k) for k in recomputed}:
        raise ConfigError(f"summary {summary} does not match its results {recomputed}")
    _print_table(results)
    return results


def _print_table(results: list, key: str | None = None) -> None:
    for r in results:
        label = r.get("relation_id", "?")
        if key and key in r:
            label = f"{label}:{r[key]}"
        N = r.get("N", r.get("params", {}).get("N", ""))
        line = f"{r.get('status', '?'):<12} {label:<16} N={N}"
        if r.get("status") == "fail" and r.get("residual_locus"):
            line += f"  first residual at {r['residual_locus'][0]}"
        elif r.get("detail"):
            line += f"  {r['detail']}"
        print(line)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="askey-contiguity", description="Exact checks of contiguity relations.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, samples=3):
        p.add_argument("--output", "-o", default=DEFAULT_OUTPUT, help="report path")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--samples", type=int, default=samples)
        p.add_argument("--retries", type=int, default=100, help="resampling attempts per draw")

    p = sub.add_parser("list", help="list catalog relations")
    p.add_argument("--family")
    p.add_argument("--kind", choices=KIND_CHOICES)
    p.add_argument("--output", "-o", default=DEFAULT_OUTPUT)

    p = sub.add_parser("verify", help="verify one relation")
    common(p, samples=1)
    p.add_argument("--family")
    p.add_argument("--relation")
    p.add_argument("--shift", help='shift as JSON, e.g. {"eta": 0, "N_bar": "N-1", "map": {"beta": "q*beta"}}')
    p.add_argument("--kind", choices=KIND_CHOICES, help="relation kind for --shift (default A2)")
    p.add_argument("--N", default="3")
    p.add_argument("--printed", action="store_true", help="use the uncorrected formulas")
    for name in PARAM_FLAGS:
        p.add_argument(f"--{name}", help="p/q rational")

    p = sub.add_parser("sweep", help="verify many catalog relations on random samples")
    common(p)
    p.add_argument("--all", action="store_true")
    p.add_argument("--family", action="append")
    p.add_argument("--relation", action="append")
    p.add_argument("--kind", choices=KIND_CHOICES)
    p.add_argument("--N", default="2..5")
    p.add_argument("--printed", action="store_true")
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("classify", help="brute-force search for shifts and compare with the catalog")
    common(p)
    p.add_argument("--family", action="append")
    p.add_argument("--kind", choices=("A2", "B2", "B2'", "B2p"), default="A2")
    p.add_argument("--N", default="6")
    p.set_defaults(seed=search.DEFAULT_SEED)

    p = sub.add_parser("spectral", help="Christoffel/Geronimus and measure checks")
    common(p)
    p.add_argument("--relation", action="append")
    p.add_argument("--N", default="2..4")
    p.add_argument("--chi", action="store_true", help="also test the stored chi against the Geronimus condition")

    p = sub.add_parser("report", help="summarize a saved report")
    p.add_argument("input")
    p.add_argument("--output", "-o", default=None)
    return ap


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "sweep": cmd_sweep, "classify": cmd_classify,
            "spectral": cmd_spectral, "report": cmd_report}


def _config_echo(args) -> dict:
    return {k: v for k, v in vars(args).items() if k != "output"}


def write_report(path: str, args, results: list) -> dict:
    doc = {"version": REPORT_VERSION, "config_echo": _config_echo(args), "results": results,
           "summary": _status_counts(results)}
    Path(path).write_text(json.dumps(doc, indent=1, default=str) + "\n", encoding="utf-8")
    return doc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        results = COMMANDS[args.command](args)
    except (ConfigError, AskeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.output:
            write_report(args.output, args, [{"relation_id": args.command, "status": "error", "detail": str(exc)}])
        return 2
    if args.output:
        doc = write_report(args.output, args, results)
        summary = doc["summary"]
    else:
        summary = _status_counts(results)
    print(f"pass {summary['pass']}  fail {summary['fail']}  skipped {summary['skipped']}")
    return exit_status(summary)


if __name__ == "__main__":
    sys.exit(main())

"""Brute-force enumeration of shift maps, constraint testing and comparison with the catalog."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import families as fam
from .constraints import ShiftMap, check_constraints, shift_scalars
from .contiguity import generic_relation, verify_relation
from .errors import InsufficientSamples, InvalidShift, SingularParameters
from .families import ParameterSet
from .scalar import rational

DEFAULT_SEED = 20240517


@dataclass(frozen=True)
class SearchSpace:
    """Finite set of candidate shifts for one family.

    ``moves`` are powers of q for q-families and additive steps otherwise.
    Parameters fixed by spectral matching are not enumerated; their move is
    derived and the candidate is dropped when it falls outside ``moves``.
    """

    family: str
    etas: tuple = (-1, 0, 1)
    moves: tuple = (-2, -1, 0, 1, 2)
    dNs: tuple = (-2, -1, 0, 1, 2)
    samples: int = 3
    Ns: tuple = (6,)
    movable: tuple | None = None

    @classmethod
    def default(cls, family: str, **kw) -> "SearchSpace":
        if family == "BI":
            kw.setdefault("moves", tuple(rational(k) / 2 for k in range(-4, 5)))
        return cls(family, **kw)

    def free_parameters(self) -> tuple:
        f = fam.get_family(self.family)
        if self.movable is not None:
            return tuple(self.movable)
        return tuple(p for p in f.params if p not in ("q", f.forced))

    def to_json(self) -> dict:
        return {"family": self.family, "etas": list(self.etas), "moves": [str(m) for m in self.moves],
                "dNs": list(self.dNs), "samples": self.samples, "Ns": list(self.Ns),
                "free": list(self.free_parameters())}


@dataclass(frozen=True)
class Candidate:
    shift: ShiftMap

    def scalars(self, params: ParameterSet):
        """(zeta, xi) of the shift at ``params``."""
        return shift_scalars(self.shift.family, self.shift, params)

    @property
    def label(self) -> str:
        return "identity" if self.shift.is_identity else self.shift.label()


def _forced_in_range(space: SearchSpace, shift: ShiftMap) -> bool:
    f = fam.get_family(space.family)
    if not f.forced or space.family == "BI":
        return True
    return shift.move(f.forced) in space.moves


def enumerate_shifts(space: SearchSpace):
    """Yield every consistent Candidate of the space, identity first."""
    free = space.free_parameters()
    seen = set()
    identity = ShiftMap.identity(space.family)
    yield Candidate(identity)
    seen.add(identity)
    for eta, dN in itertools.product(space.etas, space.dNs):
        for combo in itertools.product(space.moves, repeat=len(free)):
            try:
                shift = ShiftMap.make(space.family, eta, dN, dict(zip(free, combo)))
            except InvalidShift:
                continue
            if shift in seen or not _forced_in_range(space, shift):
                continue
            seen.add(shift)
            yield Candidate(shift)


def draw_samples(space: SearchSpace, seed: int = DEFAULT_SEED) -> list:
    rng = random.Random(seed)
    out = []
    for N in space.Ns:
        for _ in range(space.samples):
            try:
                out.append(fam.random_parameters(space.family, N, rng))
            except SingularParameters as exc:
                raise InsufficientSamples(f"cannot sample {space.family} at N={N}: {exc}") from None
    return out


def verdict(kind: str, candidate: Candidate, samples) -> str:
    """"fail" if any sample fails, "pass" if every sample passes, else the first other status."""
    other = None
    for p in samples:
        try:
            status = check_constraints(kind, p, candidate.shift).status
        except (InvalidShift, SingularParameters, ZeroDivisionError):
            status = "skipped"
        if status == "fail":
            return "fail"
        if status != "pass" and other is None:
            other = status
    return other or "pass"


def survives(kind: str, candidate: Candidate, samples) -> bool:
    return verdict(kind, candidate, samples) == "pass"


def _rank(rows: list) -> int:
    """Rank of a matrix of exact rationals by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [u - f * v for u, v in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def a2_span_test(candidate: Candidate, p: ParameterSet) -> bool:
    """Direct test of an A2 plus relation: R_i(x) lies in the span of Rbar_i, Rbar_{i-1} at x + eta on the grid.

    Used when the constraint expressions are undefined (an identically vanishing denominator).
    """
    shift = candidate.shift
    bar = shift.apply(p)
    left, right = fam.series_table(p), fam.series_table(bar)
    xs = [x for x in range(p.N + 1) if 0 <= x + shift.eta <= bar.N]
    for i in range(min(p.N, bar.N) + 1):
        cols = [[right[j][x + shift.eta] for x in xs] for j in (i, i - 1) if j >= 0]
        target = [left[i][x] for x in xs]
        rows = [list(r) for r in zip(*cols)]
        if _rank(rows) != _rank([r + [t] for r, t in zip(rows, target)]):
            return False
    return True


def _resolve(kind: str, candidate: Candidate, samples) -> str:
    if kind != "A2":
        return "undecided"
    try:
        return "pass" if all(a2_span_test(candidate, p) for p in samples) else "fail"
    except (SingularParameters, InvalidShift):
        return "undecided"


# Parameter transformations that leave a family's polynomials unchanged,
# written as shifts to compose with a discovered one before comparing.
# Empty for the families where the brute-force search finds no duplicates.
CANONICAL_SYMMETRIES: dict = {}


def canonical(shift: ShiftMap) -> ShiftMap:
    return CANONICAL_SYMMETRIES.get(shift.family, {}).get(shift, shift)


def _catalog_shifts(family: str, kind: str) -> dict:
    from .catalog import list_relations

    return {canonical(e.shift_map()): e.id for e in list_relations(family, kind)}


def confirm(kind: str, candidate: Candidate, p: ParameterSet) -> str:
    """Instantiate the generic plus relation for a discovered shift and verify it."""
    if candidate.shift.is_identity:
        return "pass"
    try:
        return verify_relation(generic_relation(kind, "plus", p, candidate.shift)).status
    except (SingularParameters, InvalidShift) as exc:
        return f"skipped: {exc}"


def classify(space: SearchSpace, kind: str = "A2", seed: int = DEFAULT_SEED) -> dict:
    """Shifts passing the constraints on every sample, compared with the catalog."""
    samples = draw_samples(space, seed)
    known = _catalog_shifts(space.family, kind)
    discovered, matched, unmatched, undecided, resolved = [], [], [], [], []
    tested = 0
    for cand in enumerate_shifts(space):
        tested += 1
        status = verdict(kind, cand, samples)
        if status not in ("pass", "fail"):
            status = _resolve(kind, cand, samples)
            (undecided if status == "undecided" else resolved).append(cand.label)
        if status != "pass":
            continue
        shift = canonical(cand.shift)
        record = {"shift": cand.shift.to_json(), "label": cand.label, "confirmed": confirm(kind, cand, samples[0])}
        if shift.is_identity:
            record["id"] = "identity"
            matched.append("identity")
        elif shift in known:
            record["id"] = known[shift]
            matched.append(known[shift])
        else:
            unmatched.append(cand.label)
        discovered.append(record)
    missing = sorted(set(known.values()) - set(matched))
    return {
        "family": space.family,
        "kind": kind,
        "seed": seed,
        "tested": tested,
        "undecided": undecided,
        "resolved_by_span_test": resolved,
        "discovered": discovered,
        "matched": matched,
        "unmatched": unmatched,
        "missing": missing,
        "space": space.to_json(),
    }


@dataclass
class ClassificationSummary:
    family: str
    matched: list = field(default_factory=list)
    unmatched: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    undecided: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return not self.unmatched and not self.missing and not self.undecided


def summarize(report: dict) -> ClassificationSummary:
    return ClassificationSummary(report["family"], report["matched"], report["unmatched"], report["missing"],
                                 report["undecided"])


__all__ = ["SearchSpace", "Candidate", "enumerate_shifts", "draw_samples", "survives", "verdict", "a2_span_test", "classify", "canonical",
           "CANONICAL_SYMMETRIES", "summarize", "ClassificationSummary", "DEFAULT_SEED"]

"""Shift maps and the existence conditions for A2, B2 and B2' relations."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from . import families as fam
from .errors import DenominatorVanishes, InsufficientRange, InvalidShift, SingularParameters
from .families import ParameterSet
from .scalar import ONE, ZERO, fmt, rational

KINDS = ("A2", "B2", "B2p")


@dataclass(frozen=True)
class ShiftMap:
    """A contiguity move: x -> x + eta, N -> N + dN and per-parameter moves.

    For q-families a move e multiplies the parameter by q**e; for classical
    families it is added.  Parameters fixed by the spectral matching rule are
    filled in by ``make`` when omitted.
    """

    family: str
    eta: int
    dN: int
    moves: tuple = ()

    @classmethod
    def make(cls, family: str, eta: int = 0, dN: int = 0, moves: Mapping | None = None, N: int | None = None):
        f = fam.get_family(family)
        given = {k: rational(v) for k, v in (moves or {}).items() if v != 0}
        for name in given:
            if name not in f.params or name == "q":
                raise InvalidShift(f"{family} has no movable parameter {name!r}")
        if f.forced:
            need = cls._forced_move(f, eta, dN, given, N)
            if need is not None:
                if f.forced in given and given[f.forced] != need:
                    raise InvalidShift(
                        f"{family}: {f.forced} must move by {fmt(need)} for eta={eta}, dN={dN}")
                if need != 0:
                    given[f.forced] = need
        if f.is_q and any(v.denominator != 1 for v in given.values()):
            raise InvalidShift("q-family moves must be integer powers of q")
        items = tuple(sorted((k, int(v) if v.denominator == 1 else v) for k, v in given.items()))
        return cls(family, int(eta), int(dN), items)

    @staticmethod
    def _forced_move(f, eta, dN, given, N):
        tag = f.tag
        if tag in ("qR", "R"):
            return rational(dN - 2 * eta)
        if tag in ("dqH", "dH"):
            return -given.get("alpha", ZERO) - 2 * eta
        if tag == "dqK":
            return rational(-2 * eta)
        if tag == "BI":
            if N is None:
                return None
            return rational((N + dN) // 2 - N // 2 - eta)
        return None

    @classmethod
    def identity(cls, family: str) -> "ShiftMap":
        return cls(family, 0, 0, ())

    @property
    def is_identity(self) -> bool:
        return self.eta == 0 and self.dN == 0 and not self.moves

    def move(self, name: str):
        for k, v in self.moves:
            if k == name:
                return v
        return 0

    def apply(self, p: ParameterSet) -> ParameterSet:
        if p.family != self.family:
            raise InvalidShift(f"shift for {self.family} applied to {p.family}")
        f = fam.get_family(self.family)
        named = p.named
        for name, e in self.moves:
            named[name] = named[name] * p["q"] ** e if f.is_q else named[name] + e
        if self.family == "BI":
            # the gamma move depends on the parity of N
            need = (p.N + self.dN) // 2 - p.N // 2 - self.eta
            named["gamma"] = p["gamma"] + need
        if p.N + self.dN < 0:
            raise InvalidShift("shifted N is negative")
        return ParameterSet.make(p.family, p.N + self.dN, named)

    def inverse(self) -> "ShiftMap":
        return ShiftMap(self.family, -self.eta, -self.dN, tuple((k, -v) for k, v in self.moves))

    def to_json(self) -> dict:
        f = fam.get_family(self.family)
        out = {}
        for name, e in self.moves:
            if self.family == "BI" and name == "gamma":
                continue
            out[name] = _move_text(name, e, f.is_q)
        N_bar = "N" if self.dN == 0 else f"N{self.dN:+d}"
        return {"eta": self.eta, "N_bar": N_bar, "map": out}

    @classmethod
    def from_json(cls, family: str, data: Mapping) -> "ShiftMap":
        f = fam.get_family(family)
        moves = {name: _parse_move(name, text, f.is_q) for name, text in data.get("map", {}).items()}
        return cls.make(family, int(data.get("eta", 0)), parse_nbar(data.get("N_bar", "N")), moves)

    def label(self) -> str:
        d = self.to_json()
        parts = [f"eta={self.eta}", f"N_bar={d['N_bar']}"] + [f"{k}->{v}" for k, v in d["map"].items()]
        return ", ".join(parts)


def _move_text(name: str, e, is_q: bool) -> str:
    if is_q:
        e = int(e)
        if e == 0:
            return name
        mag = "q" if abs(e) == 1 else f"q^{abs(e)}"
        return f"{mag}*{name}" if e > 0 else f"{name}/{mag}"
    e = rational(e)
    if e == 0:
        return name
    return f"{name}+{fmt(e)}" if e > 0 else f"{name}-{fmt(-e)}"


_Q_MOVE = re.compile(r"^(?:q(?:\^(\d+))?\*)?(\w+)(?:/q(?:\^(\d+))?)?$")
_ADD_MOVE = re.compile(r"^(\w+)\s*([+-]\s*\d+(?:/\d+)?)?$")


def _parse_move(name: str, text: str, is_q: bool):
    text = text.replace(" ", "")
    if is_q:
        m = _Q_MOVE.match(text)
        if not m or m.group(2) != name or (text.startswith("q") and "/" in text):
            raise InvalidShift(f"cannot read move {text!r} for {name}")
        if text == name:
            return 0
        if text.startswith("q"):
            return int(m.group(1) or 1)
        return -int(m.group(3) or 1)
    m = _ADD_MOVE.match(text)
    if not m or m.group(1) != name:
        raise InvalidShift(f"cannot read move {text!r} for {name}")
    return rational(m.group(2).replace("+", "")) if m.group(2) else ZERO


def parse_nbar(text: str) -> int:
    text = str(text).replace(" ", "")
    if text == "N":
        return 0
    m = re.fullmatch(r"N([+-]\d+)", text)
    if not m:
        raise InvalidShift(f"cannot read N_bar {text!r}")
    return int(m.group(1))


def shift_scalars(family: str, shift_data, params: ParameterSet):
    """Return (zeta, xi) for a shift given as a ShiftMap or (eta, barred params, N_bar)."""
    f = fam.get_family(family)
    if isinstance(shift_data, ShiftMap):
        eta = shift_data.eta
        bar = shift_data.apply(params)
    else:
        eta, bar_named, N_bar = shift_data
        bar = ParameterSet.make(family, N_bar, {**params.named, **bar_named})
    if f.forced:
        need = f.forced_value(params, eta, bar.N, bar.named)
        if need is not None and bar[f.forced] != need:
            raise InvalidShift(f"{family}: barred {f.forced} violates the spectral matching rule")
    return f.zeta_xi(params, eta)


class ShiftContext:
    """Recurrence data of a parameter set and of its shifted partner."""

    def __init__(self, p: ParameterSet, shift: ShiftMap):
        self.p = p
        self.shift = shift
        self.bar = shift.apply(p)
        self.zeta, self.xi = shift_scalars(p.family, shift, p)
        self.eta = shift.eta
        self._cache: dict = {}

    def _get(self, key, fn, which, i):
        k = (key, which, i)
        if k not in self._cache:
            self._cache[k] = fn(self.bar if which else self.p, i)
        return self._cache[k]

    def A(self, i, bar=False):
        return self._get("A", fam.coeff_A, bar, i)

    def C(self, i, bar=False):
        return self._get("C", fam.coeff_C, bar, i)

    def X(self, i, bar=False):
        return self._get("X", fam.coeff_X, bar, i)

    def Y(self, i, bar=False):
        return self._get("Y", fam.coeff_Y, bar, i)

    def xprod(self, i):
        """Product of Xbar_k / X_k for k = 1..i."""
        out = ONE
        for k in range(1, i + 1):
            out *= self.X(k, True) / self.X(k)
        return out

    @cached_property
    def common_N(self) -> int:
        return min(self.p.N, self.bar.N)

    def lam_matching_residuals(self) -> list:
        f = fam.get_family(self.p.family)
        out = []
        lo, hi = max(0, -self.eta), min(self.p.N, self.bar.N - self.eta)
        for x in range(lo, hi + 1):
            out.append(f.lam(self.p, x) - self.zeta * f.lam(self.bar, x + self.eta) + self.xi)
        return out


def _guard(fn, ctx: ShiftContext, i: int, label: str):
    try:
        return fn()
    except ZeroDivisionError:
        raise DenominatorVanishes(f"{label}: denominator vanishes at i={i}", locus={"i": i}) from None


def a2_constraint_exprs(params: ParameterSet, shift: ShiftMap | ShiftContext, i: int):
    ctx = shift if isinstance(shift, ShiftContext) else ShiftContext(params, shift)
    z, xi = ctx.zeta, ctx.xi
    X, Y = ctx.X, ctx.Y

    def e1():
        return z ** (2 * i) * (z * Y(i, True) - Y(i) - xi) / (X(i + 1) - z**2 * X(i, True)) * ctx.xprod(i)

    def e2():
        return (z ** (2 * i) * (X(i + 1) - z**2 * X(i + 1, True))
                / ((z * Y(i, True) - Y(i + 1) - xi) * X(i + 1)) * ctx.xprod(i))

    return _guard(e1, ctx, i, "A2 first expression"), _guard(e2, ctx, i, "A2 second expression")


def b2_constraint_exprs(params: ParameterSet, shift: ShiftMap | ShiftContext, i: int):
    ctx = shift if isinstance(shift, ShiftContext) else ShiftContext(params, shift)
    z, xi = ctx.zeta, ctx.xi
    X, Y = ctx.X, ctx.Y

    def D(k):
        return xi + Y(k) - z * Y(k, True)

    def f1():
        num = ((z**2 * X(i + 1, True) - X(i)) / D(i) - (z**2 * X(i + 2, True) - X(i + 1)) / D(i + 1)
               + z * Y(i + 1, True) - Y(i) - xi)
        den = (X(i + 1) / (z**2 * X(i + 1, True)) * (z**2 * X(i + 1, True) - X(i + 2)) / D(i + 1)
               - (z**2 * X(i, True) - X(i + 1)) / D(i))
        return z ** (2 * i) * num / den * ctx.xprod(i)

    def f2():
        num = ((z**2 * X(i + 1, True) - X(i)) / D(i)
               - z**2 * X(i + 1, True) / X(i + 1) * (z**2 * X(i + 2, True) - X(i + 1)) / D(i + 1))
        den = ((z**2 * X(i + 1, True) - X(i + 2)) / D(i + 1) - (z**2 * X(i, True) - X(i + 1)) / D(i)
               + z * Y(i, True) - Y(i + 1) - xi)
        return z ** (2 * i) * num / den * ctx.xprod(i)

    return _guard(f1, ctx, i, "B2 first expression"), _guard(f2, ctx, i, "B2 second expression")


def b2p_constraint_exprs(params: ParameterSet, shift: ShiftMap | ShiftContext, i: int):
    ctx = shift if isinstance(shift, ShiftContext) else ShiftContext(params, shift)
    z, xi = ctx.zeta, ctx.xi
    X, Y = ctx.X, ctx.Y

    def E(j, k):
        return z * Y(j, True) - Y(k) - xi

    def f1():
        num = ((X(i) - z**2 * X(i, True)) / E(i - 1, i) - (X(i + 1) - z**2 * X(i + 1, True)) / E(i, i + 1)
               + z * Y(i, True) - Y(i) - xi)
        den = (X(i + 1) * (X(i + 2) - z**2 * X(i, True)) / E(i, i + 1)
               - z**2 * X(i, True) * (X(i + 1) - z**2 * X(i - 1, True)) / E(i - 1, i))
        return z ** (2 * i) * num / den * ctx.xprod(i)

    def f2():
        num = ((X(i + 1) - z**2 * X(i + 1, True)) / E(i, i + 1)
               - z**2 * X(i + 1, True) / X(i + 2) * (X(i + 2) - z**2 * X(i + 2, True)) / E(i + 1, i + 2))
        den = (((X(i + 3) - z**2 * X(i + 1, True)) / E(i + 1, i + 2) - (X(i + 2) - z**2 * X(i, True)) / E(i, i + 1)
                + z * Y(i, True) - Y(i + 2) - xi) * X(i + 1))
        return z ** (2 * i) * num / den * ctx.xprod(i)

    return _guard(f1, ctx, i, "B2' first expression"), _guard(f2, ctx, i, "B2' second expression")


_EXPRS = {"A2": a2_constraint_exprs, "B2": b2_constraint_exprs, "B2p": b2p_constraint_exprs}
# how many extra indices beyond i each expression pair reaches
_REACH = {"A2": 1, "B2": 2, "B2p": 3}


@dataclass
class VerificationReport:
    relation_id: str
    params: dict
    passed: bool
    residual_locus: list = field(default_factory=list)
    status: str = ""
    checked: int = 0
    detail: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.status:
            self.status = "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {
            "relation_id": self.relation_id,
            "params": self.params,
            "pass": self.passed,
            "status": self.status,
            "checked": self.checked,
            "residual_locus": self.residual_locus,
        }
        if self.detail:
            out["detail"] = self.detail
        if self.extra:
            out["extra"] = self.extra
        return out


def constraint_values(kind: str, params: ParameterSet, shift: ShiftMap) -> list:
    """Return [(i, e1, e2)] over every usable index; skipped indices are omitted."""
    ctx = ShiftContext(params, shift)
    fn = _EXPRS[kind]
    top = ctx.common_N - _REACH[kind]
    out = []
    for i in range(0, top + 1):
        try:
            e1, e2 = fn(params, ctx, i)
        except (DenominatorVanishes, SingularParameters):
            continue
        out.append((i, e1, e2))
    return out


def check_constraints(kind: str, params: ParameterSet, shift: ShiftMap, relation_id: str = "") -> VerificationReport:
    if kind not in _EXPRS:
        raise ValueError(f"unknown constraint kind {kind!r}")
    rid = relation_id or f"{kind}[{shift.label()}]"
    values = constraint_values(kind, params, shift)
    if len(values) < 2:
        report = VerificationReport(rid, params.to_json(), False, status="inconclusive", checked=len(values),
                                    detail=f"only {len(values)} usable indices")
        report.extra["error"] = InsufficientRange.__name__
        return report
    target = values[0][1]
    locus = [{"i": i} for i, e1, e2 in values if e1 != target or e2 != target]
    report = VerificationReport(rid, params.to_json(), not locus, residual_locus=locus, checked=len(values))
    if not locus:
        report.extra["value"] = fmt(target)
    return report


def swapped_context(ctx: ShiftContext) -> ShiftContext:
    """Exchange the roles of the two parameter sets, with zeta -> 1/zeta and xi -> -xi/zeta."""
    out = ShiftContext.__new__(ShiftContext)
    out.p, out.bar = ctx.bar, ctx.p
    out.shift = ctx.shift.inverse()
    out.zeta, out.xi = 1 / ctx.zeta, -ctx.xi / ctx.zeta
    out.eta = -ctx.eta
    out._cache = {}
    return out

"""Finite families of the (q-)Askey scheme: spectra, recurrences, series and weights."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import SingularParameters, SingularSeries, UnsupportedFamily
from .scalar import (
    ONE,
    ZERO,
    SeriesSpec,
    check_base,
    fmt,
    hyp_terminating,
    pochhammer,
    q_hyp_terminating,
    q_pochhammer,
    rational,
)

PARAM_ORDER = ("alpha", "beta", "gamma", "delta", "q", "z")


@dataclass(frozen=True)
class ParameterSet:
    family: str
    N: int
    values: tuple

    @classmethod
    def make(cls, family: str, N: int, params: Mapping | None = None, **kw) -> "ParameterSet":
        merged = dict(params or {})
        merged.update(kw)
        fam = get_family(family)
        missing = [name for name in fam.params if name not in merged]
        if missing:
            raise ValueError(f"{family} needs parameters {missing}")
        extra = [name for name in merged if name not in fam.params]
        if extra:
            raise ValueError(f"{family} does not take parameters {extra}")
        if N < 0:
            raise ValueError("N must be non-negative")
        if "q" in merged:
            check_base(rational(merged["q"]))
        items = tuple((name, rational(merged[name])) for name in fam.params)
        return cls(family, int(N), items)

    def __getitem__(self, name: str):
        for key, value in self.values:
            if key == name:
                return value
        raise KeyError(name)

    def get(self, name: str, default=None):
        try:
            return self[name]
        except KeyError:
            return default

    @property
    def named(self) -> dict:
        return dict(self.values)

    def replace(self, N: int | None = None, **changes) -> "ParameterSet":
        named = self.named
        named.update(changes)
        return ParameterSet.make(self.family, self.N if N is None else N, named)

    def to_json(self) -> dict:
        return {"family": self.family, "N": self.N, "params": {k: fmt(v) for k, v in self.values}}

    @classmethod
    def from_json(cls, data: Mapping) -> "ParameterSet":
        return cls.make(data["family"], int(data["N"]), data.get("params", {}))

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={fmt(v)}" for k, v in self.values)
        return f"{self.family}(N={self.N}, {inner})"


@dataclass(frozen=True)
class RecurrencePair:
    A: object
    C: object
    X: object
    Y: object


class Family:
    """Shared behaviour; subclasses provide the closed forms."""

    tag = ""
    params: tuple = ()
    is_q = False
    # parameter fixed by the spectral matching rule, if any
    forced: str | None = None
    has_weight = False
    # series() returns the monic polynomial rather than the one normalized by R_i(0) = 1
    monic = False

    def point(self, p: ParameterSet, x: int):
        return p["q"] ** x if self.is_q else rational(x)

    def lam(self, p: ParameterSet, x: int):
        return self.lam_at(p, self.point(p, x))

    def lam_at(self, p: ParameterSet, point):
        raise NotImplementedError

    def A(self, p: ParameterSet, i: int):
        raise NotImplementedError

    def C(self, p: ParameterSet, i: int):
        raise NotImplementedError

    def X(self, p: ParameterSet, i: int):
        return coeff_A(p, i - 1) * coeff_C(p, i)

    def Y(self, p: ParameterSet, i: int):
        return -(coeff_A(p, i) + coeff_C(p, i))

    def series(self, p: ParameterSet, i: int, x: int):
        raise NotImplementedError

    def weight(self, p: ParameterSet, x: int):
        raise UnsupportedFamily(f"no stored weight for {self.tag}")

    def zeta_xi(self, p: ParameterSet, eta: int):
        raise NotImplementedError

    def forced_value(self, p: ParameterSet, eta: int, N_bar: int, bar: Mapping):
        return None


def _qpow(p, k):
    return p["q"] ** k


class QRacah(Family):
    tag, params, is_q, forced, has_weight = "qR", ("alpha", "beta", "gamma", "q"), True, "gamma", True

    def lam_at(self, p, t):
        return -(1 - 1 / t) * (1 - p["gamma"] * t * _qpow(p, -p.N))

    def A(self, p, i):
        a, b, g, q, N = p["alpha"], p["beta"], p["gamma"], p["q"], p.N
        return ((1 - q ** (i - N)) * (1 - a * q ** (i + 1)) * (1 - a * b * q ** (i + 1)) * (1 - b * g * q ** (i + 1))
                / ((1 - a * b * q ** (2 * i + 1)) * (1 - a * b * q ** (2 * i + 2))))

    def C(self, p, i):
        a, b, g, q, N = p["alpha"], p["beta"], p["gamma"], p["q"], p.N
        return ((1 - q**i) * (1 - b * q**i) * (1 - a * b * q ** (i + N + 1)) * (g - a * q**i)
                / (q**N * (1 - a * b * q ** (2 * i)) * (1 - a * b * q ** (2 * i + 1))))

    def series(self, p, i, x):
        a, b, g, q, N = p["alpha"], p["beta"], p["gamma"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (a * b * q ** (i + 1), q**-x, g * q ** (x - N)), (a * q, b * g * q, q**-N), q)
        return q_hyp_terminating(spec, q, i)

    def weight(self, p, x):
        a, b, g, q, N = p["alpha"], p["beta"], p["gamma"], p["q"], p.N
        num = ONE
        for c in (a * q, b * g * q, q**-N, q**-N * g):
            num *= q_pochhammer(c, q, x)
        den = ONE
        for c in (q, g * q**-N / a, q**-N / b, g * q):
            den *= q_pochhammer(c, q, x)
        return num * (1 - g * q ** (2 * x - N)) / (den * (a * b * q) ** x * (1 - g * q**-N))

    def zeta_xi(self, p, eta):
        q = p["q"]
        return q**eta, (1 - q**eta) * (1 - p["gamma"] * q ** (-eta - p.N))

    def forced_value(self, p, eta, N_bar, bar):
        return p["gamma"] * p["q"] ** (N_bar - p.N - 2 * eta)


class QHahn(Family):
    tag, params, is_q = "qH", ("alpha", "beta", "q"), True

    def lam_at(self, p, t):
        return -(1 - 1 / t)

    def A(self, p, i):
        a, b, q, N = p["alpha"], p["beta"], p["q"], p.N
        return ((1 - q ** (i - N)) * (1 - a * q ** (i + 1)) * (1 - a * b * q ** (i + 1))
                / ((1 - a * b * q ** (2 * i + 1)) * (1 - a * b * q ** (2 * i + 2))))

    def C(self, p, i):
        a, b, q, N = p["alpha"], p["beta"], p["q"], p.N
        return (-a * q ** (i - N) * (1 - q**i) * (1 - b * q**i) * (1 - a * b * q ** (i + N + 1))
                / ((1 - a * b * q ** (2 * i)) * (1 - a * b * q ** (2 * i + 1))))

    def series(self, p, i, x):
        a, b, q, N = p["alpha"], p["beta"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (a * b * q ** (i + 1), q**-x), (a * q, q**-N), q)
        return q_hyp_terminating(spec, q, i)

    def zeta_xi(self, p, eta):
        q = p["q"]
        return q**eta, 1 - q**eta


class DualQHahn(Family):
    tag, params, is_q, forced = "dqH", ("alpha", "beta", "q"), True, "beta"

    def lam_at(self, p, t):
        return -(1 - 1 / t) * (1 - p["alpha"] * p["beta"] * p["q"] * t)

    def A(self, p, i):
        q = p["q"]
        return (1 - q ** (i - p.N)) * (1 - p["alpha"] * q ** (i + 1))

    def C(self, p, i):
        q = p["q"]
        return p["alpha"] * q * (1 - q**i) * (p["beta"] - q ** (i - p.N - 1))

    def series(self, p, i, x):
        a, b, q, N = p["alpha"], p["beta"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (q**-x, a * b * q ** (x + 1)), (a * q, q**-N), q)
        return q_hyp_terminating(spec, q, i)

    def zeta_xi(self, p, eta):
        q = p["q"]
        return q**eta, (1 - q**eta) * (1 - p["alpha"] * p["beta"] * q ** (1 - eta))

    def forced_value(self, p, eta, N_bar, bar):
        return p["alpha"] * p["beta"] / bar["alpha"] * p["q"] ** (-2 * eta)


class QuantumQKrawtchouk(Family):
    tag, params, is_q = "qqK", ("alpha", "q"), True

    def lam_at(self, p, t):
        return -(1 - 1 / t)

    def A(self, p, i):
        q = p["q"]
        return (1 - q ** (i - p.N)) / (p["alpha"] * q ** (2 * i + 1))

    def C(self, p, i):
        q = p["q"]
        return (1 - q**i) * (1 - p["alpha"] * q**i) / (p["alpha"] * q ** (2 * i))

    def series(self, p, i, x):
        a, q, N = p["alpha"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (q**-x,), (q**-N,), a * q ** (i + 1))
        return q_hyp_terminating(spec, q, i)

    def zeta_xi(self, p, eta):
        q = p["q"]
        return q**eta, 1 - q**eta


class QKrawtchouk(QuantumQKrawtchouk):
    tag = "qK"

    def A(self, p, i):
        a, q, N = p["alpha"], p["q"], p.N
        return (1 - q ** (i - N)) * (1 - a * q**i) / ((1 - a * q ** (2 * i)) * (1 - a * q ** (2 * i + 1)))

    def C(self, p, i):
        a, q, N = p["alpha"], p["q"], p.N
        return (a * q ** (2 * i - N - 1) * (1 - a * q ** (i + N)) * (1 - q**i)
                / ((1 - a * q ** (2 * i - 1)) * (1 - a * q ** (2 * i))))

    def series(self, p, i, x):
        a, q, N = p["alpha"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (a * q**i, q**-x), (q**-N, ZERO), q)
        return q_hyp_terminating(spec, q, i)


class AffineQKrawtchouk(QuantumQKrawtchouk):
    tag = "aqK"

    def A(self, p, i):
        q = p["q"]
        return (1 - q ** (i - p.N)) * (1 - p["alpha"] * q ** (i + 1))

    def C(self, p, i):
        q = p["q"]
        return -p["alpha"] * q ** (i - p.N) * (1 - q**i)

    def series(self, p, i, x):
        a, q, N = p["alpha"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (ZERO, q**-x), (a * q, q**-N), q)
        return q_hyp_terminating(spec, q, i)


class DualQKrawtchouk(Family):
    tag, params, is_q, forced = "dqK", ("alpha", "q"), True, "alpha"

    def lam_at(self, p, t):
        return -(1 - 1 / t) * (1 - p["alpha"] * t)

    def A(self, p, i):
        return 1 - p["q"] ** (i - p.N)

    def C(self, p, i):
        return p["alpha"] * (1 - p["q"] ** i)

    def series(self, p, i, x):
        a, q, N = p["alpha"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (q**-x, a * q**x), (q**-N, ZERO), q)
        return q_hyp_terminating(spec, q, i)

    def zeta_xi(self, p, eta):
        q = p["q"]
        return q**eta, (1 - q**eta) * (1 - p["alpha"] * q**-eta)

    def forced_value(self, p, eta, N_bar, bar):
        return p["alpha"] * p["q"] ** (-2 * eta)


class Racah(Family):
    tag, params, forced, has_weight = "R", ("alpha", "beta", "gamma"), "gamma", True

    def lam_at(self, p, x):
        return x * (x + p["gamma"] - p.N)

    def A(self, p, i):
        a, b, g, N = p["alpha"], p["beta"], p["gamma"], p.N
        return ((i - N) * (i + a + 1) * (i + a + b + 1) * (i + b + g + 1)
                / ((2 * i + a + b + 1) * (2 * i + a + b + 2)))

    def C(self, p, i):
        a, b, g, N = p["alpha"], p["beta"], p["gamma"], p.N
        return (i * (i + a - g) * (i + a + b + N + 1) * (i + b)
                / ((2 * i + a + b) * (2 * i + a + b + 1)))

    def series(self, p, i, x):
        a, b, g, N = p["alpha"], p["beta"], p["gamma"], p.N
        spec = SeriesSpec.classical(i, (i + a + b + 1, rational(-x), x + g - N), (a + 1, b + g + 1, rational(-N)))
        return hyp_terminating(spec, i)

    def weight(self, p, x):
        a, b, g, N = p["alpha"], p["beta"], p["gamma"], p.N
        num = ONE
        for c in (a + 1, b + g + 1, rational(-N), g - N, (g - N + 2) / 2):
            num *= pochhammer(c, x)
        den = ONE
        for c in (-a - N + g, -b - N, (g - N) / 2, g + 1, ONE):
            den *= pochhammer(c, x)
        return num / den

    def zeta_xi(self, p, eta):
        return ONE, eta * (p["gamma"] - p.N - eta)

    def forced_value(self, p, eta, N_bar, bar):
        return p["gamma"] + N_bar - p.N - 2 * eta


class Hahn(Family):
    tag, params = "H", ("alpha", "beta")

    def lam_at(self, p, x):
        return -rational(x)

    def A(self, p, i):
        a, b, N = p["alpha"], p["beta"], p.N
        return (i + a + b + 1) * (i + a + 1) * (N - i) / ((2 * i + a + b + 1) * (2 * i + a + b + 2))

    def C(self, p, i):
        a, b, N = p["alpha"], p["beta"], p.N
        return i * (i + a + b + N + 1) * (i + b) / ((2 * i + a + b) * (2 * i + a + b + 1))

    def series(self, p, i, x):
        a, b, N = p["alpha"], p["beta"], p.N
        spec = SeriesSpec.classical(i, (i + a + b + 1, rational(-x)), (a + 1, rational(-N)))
        return hyp_terminating(spec, i)

    def zeta_xi(self, p, eta):
        return ONE, rational(-eta)


class DualHahn(Family):
    tag, params, forced = "dH", ("alpha", "beta"), "beta"

    def lam_at(self, p, x):
        return x * (x + p["alpha"] + p["beta"] + 1)

    def A(self, p, i):
        return (i + p["alpha"] + 1) * (i - p.N)

    def C(self, p, i):
        return i * (i - p["beta"] - p.N - 1)

    def series(self, p, i, x):
        a, b, N = p["alpha"], p["beta"], p.N
        spec = SeriesSpec.classical(i, (rational(-x), x + a + b + 1), (a + 1, rational(-N)))
        return hyp_terminating(spec, i)

    def zeta_xi(self, p, eta):
        return ONE, eta * (p["alpha"] + p["beta"] - eta + 1)

    def forced_value(self, p, eta, N_bar, bar):
        return p["alpha"] + p["beta"] - bar["alpha"] - 2 * eta


class Krawtchouk(Family):
    tag, params = "K", ("alpha",)

    def lam_at(self, p, x):
        return -rational(x)

    def A(self, p, i):
        return p["alpha"] * (p.N - i)

    def C(self, p, i):
        return i * (1 - p["alpha"])

    def series(self, p, i, x):
        spec = SeriesSpec.classical(i, (rational(-x),), (rational(-p.N),), 1 / p["alpha"])
        return hyp_terminating(spec, i)

    def zeta_xi(self, p, eta):
        return ONE, rational(-eta)


class Generalized(Family):
    """The non-balanced 4phi3 extension of q-Racah with free delta and argument z."""

    tag, params, is_q = "G", ("alpha", "beta", "gamma", "delta", "q", "z"), True

    def lam_at(self, p, t):
        return -(1 - 1 / t) * (1 - p["gamma"] * t * _qpow(p, -p.N))

    def series(self, p, i, x):
        a, b, g, d, q, N = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"], p.N
        spec = SeriesSpec.basic(i, q, (a * b * q ** (i + 1), q**-x, g * q ** (x - N)), (a * q, d, q**-N), p["z"])
        return q_hyp_terminating(spec, q, i)

    def zeta_xi(self, p, eta):
        q = p["q"]
        return q**eta, (1 - q**eta) * (1 - p["gamma"] * q ** (-eta - p.N))

    def A(self, p, i):
        raise UnsupportedFamily("the generalized 4phi3 has no three-term recurrence in this form")

    C = A


_FAMILIES = {
    f.tag: f
    for f in (QRacah(), QHahn(), DualQHahn(), QuantumQKrawtchouk(), QKrawtchouk(), AffineQKrawtchouk(),
              DualQKrawtchouk(), Racah(), Hahn(), DualHahn(), Krawtchouk(), Generalized())
}

ASKEY_TAGS = ("qR", "qH", "dqH", "qqK", "qK", "aqK", "dqK", "R", "H", "dH", "K")


def get_family(tag: str) -> Family:
    if tag not in _FAMILIES and tag in ("BI", "CBI"):
        from . import banita  # noqa: F401  registers itself

    try:
        return _FAMILIES[tag]
    except KeyError:
        raise UnsupportedFamily(f"unknown family {tag!r}") from None


def register(family: Family) -> None:
    _FAMILIES[family.tag] = family


def lam(p: ParameterSet, x: int):
    return get_family(p.family).lam(p, x)


def _checked(fn, p, i):
    try:
        return fn(p, i)
    except ZeroDivisionError:
        raise SingularParameters(f"{p}: denominator vanishes at i={i}") from None


def coeff_A(p: ParameterSet, i: int):
    """A_i with the convention A_i = 0 for i < 0."""
    if i < 0:
        return ZERO
    return _checked(get_family(p.family).A, p, i)


def coeff_C(p: ParameterSet, i: int):
    if i <= 0:
        return ZERO
    return _checked(get_family(p.family).C, p, i)


def coeff_X(p: ParameterSet, i: int):
    if i <= 0:
        return ZERO
    return _checked(get_family(p.family).X, p, i)


def coeff_Y(p: ParameterSet, i: int):
    if i < 0:
        return ZERO
    return _checked(get_family(p.family).Y, p, i)


def recurrence_coeffs(p: ParameterSet, i: int) -> RecurrencePair:
    return RecurrencePair(coeff_A(p, i), coeff_C(p, i), coeff_X(p, i), coeff_Y(p, i))


@lru_cache(maxsize=4096)
def series_table(p: ParameterSet) -> tuple:
    """R_i(x) for 0 <= i, x <= N from the series definition, indexed [i][x]."""
    fam = get_family(p.family)
    try:
        return tuple(tuple(fam.series(p, i, x) for x in range(p.N + 1)) for i in range(p.N + 1))
    except (ZeroDivisionError, SingularSeries) as exc:
        raise SingularParameters(f"{p}: series evaluation failed ({exc})") from None


@lru_cache(maxsize=4096)
def recurrence_table(p: ParameterSet) -> tuple:
    """R_i(x) generated by the three-term recurrence, indexed [i][x]."""
    if get_family(p.family).monic:
        return _monic_recurrence_table(p)
    rows = [[ONE] * (p.N + 1)]
    prev = [ZERO] * (p.N + 1)
    A = [coeff_A(p, i) for i in range(p.N + 1)]
    C = [coeff_C(p, i) for i in range(p.N + 1)]
    lams = [lam(p, x) for x in range(p.N + 1)]
    for i in range(p.N):
        if A[i] == 0:
            raise SingularParameters(f"{p}: A_{i} vanishes before the end of the support")
        cur = rows[-1]
        nxt = [((lams[x] + A[i] + C[i]) * cur[x] - C[i] * prev[x]) / A[i] for x in range(p.N + 1)]
        prev = cur
        rows.append(nxt)
    return tuple(tuple(r) for r in rows)


def _monic_recurrence_table(p: ParameterSet) -> tuple:
    lams = [lam(p, x) for x in range(p.N + 1)]
    rows, prev = [[ONE] * (p.N + 1)], [ZERO] * (p.N + 1)
    for i in range(p.N):
        X, Y = coeff_X(p, i), coeff_Y(p, i)
        cur = rows[-1]
        rows.append([(lams[x] - Y) * cur[x] - X * prev[x] for x in range(p.N + 1)])
        prev = cur
    return tuple(tuple(r) for r in rows)


def eval_poly_hypergeometric(p: ParameterSet, i: int, x: int):
    if not (0 <= i <= p.N and 0 <= x <= p.N):
        raise ValueError(f"(i, x) = ({i}, {x}) outside the grid of {p}")
    return series_table(p)[i][x]


def eval_poly_recurrence(p: ParameterSet, i: int, x: int):
    if not (0 <= i <= p.N and 0 <= x <= p.N):
        raise ValueError(f"(i, x) = ({i}, {x}) outside the grid of {p}")
    return recurrence_table(p)[i][x]


def weight(p: ParameterSet, x: int):
    fam = get_family(p.family)
    if not fam.has_weight:
        raise UnsupportedFamily(f"no stored weight for {p.family}")
    try:
        return fam.weight(p, x)
    except ZeroDivisionError:
        raise SingularParameters(f"{p}: weight denominator vanishes at x={x}") from None


def orthogonality_sums(p: ParameterSet) -> dict:
    """sum_x w(x) R_i(x) R_j(x) for every pair i < j; all zero for an orthogonal family."""
    table = series_table(p)
    w = [weight(p, x) for x in range(p.N + 1)]
    return {(i, j): sum((w[x] * table[i][x] * table[j][x] for x in range(p.N + 1)), ZERO)
            for i in range(p.N + 1) for j in range(i + 1, p.N + 1)}


def admissibility_problem(p: ParameterSet) -> str | None:
    """Describe the first generic-parameter violation, or None when admissible."""
    fam = get_family(p.family)
    try:
        if fam.monic:
            for i in range(1, p.N + 1):
                if coeff_X(p, i) == 0:
                    return f"X_{i} = 0"
        elif fam.tag != "G":
            for i in range(p.N + 1):
                a, c = coeff_A(p, i), coeff_C(p, i)
                if i < p.N and a == 0:
                    return f"A_{i} = 0"
                if i > 0 and c == 0:
                    return f"C_{i} = 0"
        lams = [lam(p, x) for x in range(p.N + 1)]
        if len(set(lams)) != len(lams):
            return "spectrum is degenerate"
        if fam.has_weight:
            for x in range(p.N + 1):
                if weight(p, x) == 0:
                    return f"weight vanishes at x={x}"
        series_table(p)
    except (SingularParameters, ZeroDivisionError, SingularSeries) as exc:
        return str(exc)
    return None


def admissible(p: ParameterSet) -> bool:
    return admissibility_problem(p) is None


def _random_rational(rng, size: int = 9):
    while True:
        value = rational(rng.randint(-size, size)) / rng.randint(1, size)
        if value not in (0, 1, -1):
            return value


def random_parameters(family: str, N: int, rng, fixed: Mapping | None = None, retries: int = 100,
                      extra_check=None) -> ParameterSet:
    """Draw an admissible ParameterSet with small random rational entries.

    ``extra_check(p)`` may raise SingularParameters to reject a draw (for example
    when a relation's own denominators vanish).
    """
    fam = get_family(family)
    fixed = dict(fixed or {})
    last = "no draw"
    for _ in range(retries):
        named = {name: fixed[name] if name in fixed else _random_rational(rng) for name in fam.params}
        if fam.is_q and "q" not in fixed:
            named["q"] = _random_rational(rng, 7)
        try:
            p = ParameterSet.make(family, N, named)
        except (ValueError, ZeroDivisionError) as exc:
            last = str(exc)
            continue
        problem = admissibility_problem(p)
        if problem is None and extra_check is not None:
            try:
                extra_check(p)
            except (SingularParameters, ZeroDivisionError) as exc:
                problem = str(exc)
        if problem is None:
            return p
        last = problem
    raise SingularParameters(f"no admissible {family} draw with N={N} after {retries} tries ({last})")

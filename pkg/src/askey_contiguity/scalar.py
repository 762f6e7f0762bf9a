"""Exact rationals, Pochhammer symbols and terminating (q-)hypergeometric sums.

The rational type is ``gmpy2.mpq`` when gmpy2 is importable and
``fractions.Fraction`` otherwise.  Setting ``ASKEY_SCALAR_BACKEND=fraction``
forces the pure-Python type.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidBase, SingularSeries

BACKEND = "fraction"
Q = Fraction
if os.environ.get("ASKEY_SCALAR_BACKEND", "").lower() != "fraction":
    try:
        from gmpy2 import mpq as Q  # type: ignore[no-redef]

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on the environment
        pass

ZERO = Q(0)
ONE = Q(1)


def rational(value) -> "Q":
    """Coerce ints, Fractions, mpq values and "p/q" strings to the exact type."""
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not a p/q rational: {value!r}")
        return Q(Fraction(text))
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted")
    if isinstance(value, Fraction):
        return Q(value.numerator, value.denominator)
    return Q(value)


def fmt(value) -> str:
    """Serialize a rational as "p/q" (or "p" for integers)."""
    value = rational(value)
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def check_base(q) -> None:
    if q == 0 or q == 1 or q == -1:
        raise InvalidBase(f"q must avoid 0 and +-1, got {fmt(q)}")


def pochhammer(a, k: int):
    """Rising factorial a(a+1)...(a+k-1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = ONE
    for ell in range(k):
        out *= a + ell
    return out


def q_pochhammer(a, q, k: int):
    """Product of (1 - a q^l) for l = 0..k-1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = ONE
    qk = ONE
    for _ in range(k):
        out *= 1 - a * qk
        qk *= q
    return out


def int_log(value, q) -> int | None:
    """Return m with q**m == value, or None when no integer m exists."""
    value = rational(value)
    q = rational(q)
    if value == 0:
        return None
    if value == 1:
        return 0
    if q == 0 or q == 1 or q == -1:
        return None
    # |q| != 1, so the height of q**m is at least 2**|m|.
    height = max(abs(int(value.numerator)), int(value.denominator))
    bound = height.bit_length() + 1
    up = down = ONE
    for m in range(1, bound + 1):
        up *= q
        down /= q
        if up == value:
            return m
        if down == value:
            return -m
    return None


@dataclass(frozen=True)
class SeriesSpec:
    """A terminating series: top[0] is the terminating parameter (-i or q^-i)."""

    top: tuple
    bottom: tuple
    argument: object

    @property
    def order(self) -> tuple[int, int]:
        return len(self.top), len(self.bottom)

    @classmethod
    def classical(cls, i: int, top: Iterable, bottom: Iterable, argument=1) -> "SeriesSpec":
        return cls((rational(-i),) + tuple(top), tuple(bottom), rational(argument))

    @classmethod
    def basic(cls, i: int, q, top: Iterable, bottom: Iterable, argument) -> "SeriesSpec":
        return cls((rational(q) ** -i,) + tuple(top), tuple(bottom), rational(argument))


def _classical_sum(top: Sequence, bottom: Sequence, z, terms: int):
    total = term = ONE
    for k in range(terms - 1):
        num = ONE
        for a in top:
            num *= a + k
        if num == 0:
            break
        den = Q(k + 1)
        for b in bottom:
            den *= b + k
        if den == 0:
            raise SingularSeries(f"bottom Pochhammer vanishes at k={k + 1}")
        term = term * num * z / den
        total += term
    return total


def _basic_sum(top: Sequence, bottom: Sequence, q, z, terms: int):
    total = term = ONE
    qk = ONE
    for k in range(terms - 1):
        num = ONE
        for a in top:
            num *= 1 - a * qk
        if num == 0:
            break
        den = 1 - qk * q
        for b in bottom:
            den *= 1 - b * qk
        if den == 0:
            raise SingularSeries(f"bottom q-Pochhammer vanishes at k={k + 1}")
        term = term * num * z / den
        total += term
        qk *= q
    return total


def hyp_terminating(spec: SeriesSpec, i: int):
    """Sum of (-i)_k (a)_k ... z^k / ((b)_k ... k!) for k = 0..i."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    if spec.top[0] != -i:
        raise ValueError("first top parameter must be -i")
    return _classical_sum(spec.top, spec.bottom, spec.argument, i + 1)


def q_hyp_terminating(spec: SeriesSpec, q, i: int):
    """Sum of (q^-i, a, ...; q)_k z^k / (q, b, ...; q)_k for k = 0..i."""
    check_base(q)
    if i < 0:
        raise ValueError("degree must be non-negative")
    if spec.top[0] != rational(q) ** -i:
        raise ValueError("first top parameter must be q^-i")
    return _basic_sum(spec.top, spec.bottom, q, spec.argument, i + 1)


def hyp_auto(top: Sequence, bottom: Sequence, z=ONE):
    """Classical series terminated by whichever top parameter is a non-positive integer."""
    lengths = [-int(a) for a in top if a <= 0 and rational(a).denominator == 1]
    if not lengths:
        raise SingularSeries("series does not terminate")
    return _classical_sum(top, bottom, z, min(lengths) + 1)


def is_k_balanced(spec: SeriesSpec, q, i: int) -> int | None:
    """Return k when the bottom product equals q^(k-i) times the top product."""
    if spec.argument != q:
        return None
    top = ONE
    for a in spec.top[1:]:
        top *= a
    bottom = ONE
    for b in spec.bottom:
        bottom *= b
    if top == 0:
        return None
    m = int_log(bottom / top, q)
    return None if m is None else m + i

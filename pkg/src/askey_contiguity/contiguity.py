"""Contiguity relations: generic coefficients, exact verification and composition.

A relation instance states, for every admissible degree i and grid point x,

    lam(x) * R_i(x + left_shift; left) = sum_e coeff(i, e) * R_{i+e}(x + right_shift; right)

The "plus" direction has the original parameters on the left and the shifted
ones on the right; "minus" is the reverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from . import families as fam
from .constraints import ShiftContext, ShiftMap, VerificationReport, swapped_context
from .errors import IncompatibleShifts, SingularParameters, SingularSeries
from .families import ParameterSet
from .scalar import ONE, ZERO

A2_PLUS, A2_MINUS = (0, -1), (1, 0)
B2_SUPPORT = (1, 0, -1)
B2P_PLUS, B2P_MINUS = (0, -1, -2), (2, 1, 0)


@dataclass
class RelationInstance:
    relation_id: str
    kind: str
    direction: str
    left: ParameterSet
    right: ParameterSet
    left_shift: int
    right_shift: int
    lam: Callable[[int], object]
    coeff: Callable[[int, int], object]
    support: tuple
    shift: ShiftMap | None = None
    # largest degree for which the relation is asserted; None means "whatever the grids allow"
    max_degree: int | None = None
    meta: dict = field(default_factory=dict)

    def degrees(self):
        top = self.left.N
        if self.max_degree is not None:
            top = min(top, self.max_degree)
        for i in range(top + 1):
            if all(i + e <= self.right.N for e in self.support):
                yield i

    def points(self):
        lo = max(-self.left_shift, -self.right_shift, 0)
        hi = min(self.left.N - self.left_shift, self.right.N - self.right_shift)
        return range(lo, hi + 1)

    def scaled(self, factor, target: str = "lambda", eps: int | None = None) -> "RelationInstance":
        """Copy with one coefficient (or lambda) multiplied by ``factor``."""
        if target == "lambda":
            lam = self.lam
            return replace(self, lam=lambda x: factor * lam(x))
        coeff = self.coeff
        return replace(self, coeff=lambda i, e: factor * coeff(i, e) if e == eps else coeff(i, e))


def memo(fn):
    cache = {}

    def wrapped(*args):
        if args not in cache:
            cache[args] = fn(*args)
        return cache[args]

    return wrapped


def residuals(rel: RelationInstance):
    """Yield (i, x, residual) over the verification grid."""
    left = fam.series_table(rel.left)
    right = fam.series_table(rel.right)
    xs = list(rel.points())
    lams = {x: rel.lam(x) for x in xs}
    for i in rel.degrees():
        cs = [(e, rel.coeff(i, e)) for e in rel.support if i + e >= 0]
        for x in xs:
            lhs = lams[x] * left[i][x + rel.left_shift]
            rhs = ZERO
            xr = x + rel.right_shift
            for e, c in cs:
                if c != 0:
                    rhs += c * right[i + e][xr]
            yield i, x, lhs - rhs


def verify_relation(rel: RelationInstance, params: ParameterSet | None = None) -> VerificationReport:
    params = params or rel.left
    try:
        rows = list(residuals(rel))
    except (SingularParameters, SingularSeries, ZeroDivisionError) as exc:
        return VerificationReport(rel.relation_id, params.to_json(), False, status="skipped", detail=str(exc))
    locus = [{"i": i, "x": x} for i, x, r in rows if r != 0]
    report = VerificationReport(rel.relation_id, params.to_json(), not locus and bool(rows),
                                residual_locus=locus, checked=len(rows))
    if not rows:
        report.status = "inconclusive"
        report.detail = "empty verification grid"
    return report


def _product(fn, lo: int, hi: int):
    out = ONE
    for k in range(lo, hi + 1):
        out *= fn(k)
    return out


def _guarded(fn):
    def wrapped(*args):
        try:
            return fn(*args)
        except ZeroDivisionError:
            raise SingularParameters(f"vanishing denominator in coefficient at {args}") from None

    return wrapped


def build_instance(rid, kind, direction, ctx: ShiftContext, lam, coeff, support) -> RelationInstance:
    if direction == "plus":
        left, right, ls, rs = ctx.p, ctx.bar, 0, ctx.eta
    else:
        left, right, ls, rs = ctx.bar, ctx.p, ctx.eta, 0
    return RelationInstance(rid, kind, direction, left, right, ls, rs, _guarded(memo(lam)), _guarded(memo(coeff)),
                            support, ctx.shift)


def _ctx(params, shift) -> ShiftContext:
    return shift if isinstance(shift, ShiftContext) else ShiftContext(params, shift)


def a2_plus_coeffs(params, shift, i: int):
    ctx = _ctx(params, shift)
    z, xi, A, C = ctx.zeta, ctx.xi, ctx.A, ctx.C
    phi0 = z**i * _product(lambda k: A(k, True) / A(k), 0, i - 1)
    if i == 0:
        phim1 = ZERO
    else:
        phim1 = (z ** (1 - i) * (1 - (z * A(0, True) + xi) / A(0))
                 * _product(lambda k: C(k + 1) / C(k, True), 1, i - 1))
    return ONE, phi0, phim1


def a2_minus_coeffs(params, shift, i: int):
    ctx = _ctx(params, shift)
    z, xi, A, C = ctx.zeta, ctx.xi, ctx.A, ctx.C
    head = A(0) - z * A(0, True) - xi
    family = fam.get_family(ctx.p.family)

    def lam_minus(x):
        return head * (family.lam(ctx.p, x) / A(0) + 1) + C(1)

    phi1 = head * z ** (-i) * _product(lambda k: A(k) / A(k - 1, True), 1, i)
    phi0 = z**i * C(1) * _product(lambda k: C(k, True) / C(k), 1, i)
    return lam_minus, phi1, phi0


def b2_coeffs(params, shift, direction: str, i: int):
    """Return (lambda function, {offset: coefficient}) for the B2 relation."""
    ctx = _ctx(params, shift)
    z, xi, A, C, X, Y = ctx.zeta, ctx.xi, ctx.A, ctx.C, ctx.X, ctx.Y
    family = fam.get_family(ctx.p.family)
    if direction == "plus":
        def D(k):
            return xi + Y(k) - z * Y(k, True)

        T = z**2 * X(1, True) / D(0) - (z**2 * X(2, True) - X(1)) / D(1) + z * Y(1, True) - Y(0) - xi
        g = xi + z * A(0, True) - A(0)

        def lam_plus(x):
            return (1 + z * C(1, True) / g + (family.lam(ctx.p, x) + xi) / (z * A(0, True))
                    - T / (g * (z**2 * X(1, True) - X(2)) / (z * C(1, True) * D(1)) + z * A(0, True)))

        def up(j):
            return z**j * _product(lambda k: A(k, True) / A(k - 1), 1, j)

        def down(j):
            if j <= 0:
                return ZERO
            head = T / (A(0) * A(0, True) * ((z**2 * X(1, True) - X(2)) / (z**2 * X(1, True) * D(1)) + 1 / D(0)))
            return z ** (-j) * head * _product(lambda k: C(k + 1) / C(k, True), 1, j - 1)

        mid = ((z**2 * X(i + 1, True) - X(i)) / (z * A(i, True) * D(i)) * up(i)
               + (z**2 * X(i, True) - X(i + 1)) / (C(i + 1) * D(i)) * down(i + 1))
        return lam_plus, {1: up(i), 0: mid, -1: down(i)}

    # The minus form is the plus form with the two parameter sets exchanged,
    # zeta -> 1/zeta and xi -> -xi/zeta.
    swapped = swapped_context(ctx)
    lam_swapped, coeffs = b2_coeffs(swapped.p, swapped, "plus", i)
    return (lambda x: lam_swapped(x + ctx.eta)), coeffs


def b2p_coeffs(params, shift, direction: str, i: int):
    ctx = _ctx(params, shift)
    z, xi, A, C, X, Y = ctx.zeta, ctx.xi, ctx.A, ctx.C, ctx.X, ctx.Y
    family = fam.get_family(ctx.p.family)
    bracket = (Y(0) + xi - z * Y(0, True)) * (Y(1) + xi - z * Y(0, True)) + z**2 * X(1, True) - X(1)
    if direction == "plus":
        def zero(j):
            return z**j * _product(lambda k: A(k, True) / A(k), 0, j - 1)

        def minus2(j):
            if j < 2:
                return ZERO
            return z ** (2 - j) / (A(0) * A(1)) * bracket * _product(lambda k: C(k + 2) / C(k, True), 1, j - 2)

        if i == 0:
            minus1 = ZERO
        else:
            g = z * Y(i - 1, True) - Y(i) - xi
            minus1 = ((X(i) - z**2 * X(i, True)) / (z * A(i - 1, True) * g) * zero(i)
                      + (X(i + 1) - z**2 * X(i - 1, True)) / (C(i + 1) * g) * minus2(i + 1))
        return (lambda x: ONE), {0: zero(i), -1: minus1, -2: minus2(i)}

    E0 = z * Y(0, True) - Y(0) - xi

    def lam_minus(x):
        # written in terms of zeta * lambda(xbar; barred), i.e. lambda(x) + xi
        lx = family.lam(ctx.p, x) + xi
        return (1 + E0 * (lx - Y(0) - xi) / X(1)
                + (1 - (lx - Y(0) - xi) * (lx - Y(1) - xi) / X(1))
                * (X(1) - z**2 * X(1, True) + E0 * (xi + Y(1) - z * Y(0, True))) / X(2))

    def zero(j):
        return z**j * _product(lambda k: C(k, True) / C(k), 1, j)

    def plus2(j):
        return z ** (-j) * bracket / (C(1) * C(2)) * _product(lambda n: A(n + 2) / A(n, True), 0, j - 1)

    g = z * Y(i, True) - Y(i + 1) - xi
    plus1 = ((X(i + 1) - z**2 * X(i + 1, True)) / (C(i + 1) * g) * zero(i)
             + (X(i + 2) - z**2 * X(i, True)) / (A(i + 1) * g) * plus2(i))
    return lam_minus, {0: zero(i), 1: plus1, 2: plus2(i)}


def generic_relation(kind: str, direction: str, params: ParameterSet, shift, relation_id: str = "") -> RelationInstance:
    """Relation built from the closed-form coefficients valid for any shift meeting the constraints."""
    try:
        return _generic_relation(kind, direction, params, shift, relation_id)
    except ZeroDivisionError:
        raise SingularParameters(f"{kind} {direction} coefficients are singular at {params}") from None


def _generic_relation(kind, direction, params, shift, relation_id):
    ctx = _ctx(params, shift)
    rid = relation_id or f"{kind}{'+' if direction == 'plus' else '-'}[{ctx.shift.label()}]"
    if kind == "A2":
        if direction == "plus":
            return build_instance(rid, kind, direction, ctx, lambda x: ONE,
                             lambda i, e: a2_plus_coeffs(params, ctx, i)[1 if e == 0 else 2], A2_PLUS)
        lam_minus = a2_minus_coeffs(params, ctx, 0)[0]
        return build_instance(rid, kind, direction, ctx, lam_minus,
                         lambda i, e: a2_minus_coeffs(params, ctx, i)[1 if e == 1 else 2], A2_MINUS)
    if kind == "B2":
        lam_fn = b2_coeffs(params, ctx, direction, 0)[0]
        return build_instance(rid, kind, direction, ctx, lam_fn,
                         lambda i, e: b2_coeffs(params, ctx, direction, i)[1][e], B2_SUPPORT)
    if kind == "B2p":
        lam_fn = b2p_coeffs(params, ctx, direction, 0)[0]
        support = B2P_PLUS if direction == "plus" else B2P_MINUS
        return build_instance(rid, kind, direction, ctx, lam_fn,
                         lambda i, e: b2p_coeffs(params, ctx, direction, i)[1][e], support)
    raise ValueError(f"unknown relation kind {kind!r}")


def compose(first: RelationInstance, second: RelationInstance, kind: str, relation_id: str = "") -> RelationInstance:
    """Chain two relations whose middle polynomials coincide.

    ``first`` expands R_i(left) over the middle family, ``second`` expands each
    middle polynomial over its own right family.
    """
    if first.right != second.left:
        raise IncompatibleShifts(f"middle parameters differ: {first.right} vs {second.left}")
    offset = first.right_shift - second.left_shift
    support = sorted({a + b for a in first.support for b in second.support}, reverse=True)
    mid_top = first.right.N

    def lam(x):
        return first.lam(x) * second.lam(x + offset)

    def coeff(i, e):
        total = ZERO
        for a in first.support:
            b = e - a
            if b not in second.support or i + a < 0:
                continue
            c = first.coeff(i, a)
            if c != 0:
                total += c * second.coeff(i + a, b)
        return total

    max_degree = mid_top - max(first.support)
    if first.max_degree is not None:
        max_degree = min(max_degree, first.max_degree)
    if second.max_degree is not None:
        max_degree = min(max_degree, second.max_degree - min(first.support))
    rid = relation_id or f"({first.relation_id})o({second.relation_id})"
    return RelationInstance(rid, kind, first.direction, first.left, second.right, first.left_shift,
                            offset + second.right_shift, memo(lam), memo(coeff), tuple(support), None, max_degree,
                            {"parts": [first.relation_id, second.relation_id]})


def compose_a2_to_b2(rel_plus: RelationInstance, rel_minus: RelationInstance) -> RelationInstance:
    if rel_plus.direction != "plus" or rel_minus.direction != "minus":
        raise IncompatibleShifts("B2 composition needs a plus relation followed by a minus relation")
    return compose(rel_plus, rel_minus, "B2")


def compose_a2_to_b2p(rel_plus_1: RelationInstance, rel_plus_2: RelationInstance) -> RelationInstance:
    if rel_plus_1.direction != "plus" or rel_plus_2.direction != "plus":
        raise IncompatibleShifts("B2' composition needs two plus relations")
    return compose(rel_plus_1, rel_plus_2, "B2p")


def proportional(a: list, b: list) -> bool:
    """True when the two sequences agree up to one global nonzero scalar."""
    if len(a) != len(b):
        return False
    pivot = next((k for k, v in enumerate(a) if v != 0), None)
    if pivot is None:
        return all(v == 0 for v in b)
    if b[pivot] == 0:
        return False
    return all(a[k] * b[pivot] == b[k] * a[pivot] for k in range(len(a)))


def relation_vector(rel: RelationInstance) -> list:
    """Every lambda value and coefficient of a relation on its grid, in a fixed order."""
    out = [rel.lam(x) for x in rel.points()]
    for i in rel.degrees():
        out.extend(rel.coeff(i, e) if i + e >= 0 else ZERO for e in rel.support)
    return out


def same_up_to_scale(r1: RelationInstance, r2: RelationInstance) -> bool:
    if set(r1.support) != set(r2.support):
        return False
    r2 = replace(r2, support=r1.support)
    return proportional(relation_vector(r1), relation_vector(r2))

"""Bannai-Ito (BI) and complementary Bannai-Ito (CBI) polynomials and the relations linking them.

Both families are indexed with parity-split integers n = 2 n_e + n_p and are
tabulated in monic form: B_i is monic in the BI spectral variable, I_i is
monic in mu(x).  Relations between the two families are stored in the catalog
under the kind "BI" and are checked exactly like any other relation instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from . import families as fam
from .constraints import VerificationReport
from .contiguity import RelationInstance, compose, memo, verify_relation
from .errors import AskeyError, IncompatibleShifts, InvalidShift, SingularParameters, SingularSeries, UnsupportedFamily
from .families import Family, ParameterSet
from .scalar import ONE, ZERO, hyp_auto, pochhammer, rational

BI_PARAMS = ("alpha", "beta", "gamma")


@dataclass(frozen=True)
class ParityIndex:
    n: int
    n_e: int
    n_p: int

    @property
    def sign(self) -> int:
        """(-1)**n, read off the parity bit."""
        return -1 if self.n_p else 1


def parity_decompose(n: int) -> ParityIndex:
    """Split n into n = 2 n_e + n_p with n_p in {0, 1}."""
    n = int(n)
    n_e, n_p = divmod(n, 2)
    return ParityIndex(n, n_e, n_p)


def _sign(n: int) -> int:
    return parity_decompose(n).sign


def _bi_A(a, b, g, N: int, i: int):
    ip, Np = i % 2, N % 2
    if ip == 0 and Np == 0:
        num = (i - N) * (i + 2 * b + 2 * g)
    elif ip == 1 and Np == 0:
        num = (i + 1 + 2 * a) * (i + 1 + 2 * a + 2 * b)
    elif ip == 0:
        num = (i + 2 + 2 * a) * (i + 2 * b + 2 * g)
    else:
        num = (i - N) * (i + 1 + 2 * a + 2 * b)
    return num / (4 * (i + 1 + a + b))


def _bi_C(a, b, g, N: int, i: int):
    ip, Np = i % 2, N % 2
    if ip == 0 and Np == 0:
        num = i * (i + 2 * b)
    elif ip == 1 and Np == 0:
        num = (i + 1 + 2 * a - 2 * g) * (i + 1 + N + 2 * a + 2 * b)
    elif ip == 0:
        num = i * (i + 1 + N + 2 * a + 2 * b)
    else:
        num = (i - 1 + 2 * b) * (i + 1 + 2 * a - 2 * g)
    return -num / (4 * (i + a + b))


def _abg(p: ParameterSet):
    return p["alpha"], p["beta"], p["gamma"]


class BannaiIto(Family):
    tag, params, forced, monic = "BI", BI_PARAMS, "gamma", True

    def lam(self, p, x):
        Ne = parity_decompose(p.N).n_e
        base = 1 - 2 * p["gamma"] + 2 * Ne
        return (base - _sign(x) * (base - 2 * x)) / 4

    def lam_at(self, p, point):
        return self.lam(p, int(point))

    def A(self, p, i):
        return _bi_A(*_abg(p), p.N, i)

    def C(self, p, i):
        return _bi_C(*_abg(p), p.N, i)

    def series(self, p, i, x):
        return eval_bi(p, i, x)

    def zeta_xi(self, p, eta):
        # lambda_x = zeta * lambdabar_{x+eta} - xi; xi vanishes for even eta
        Ne = parity_decompose(p.N).n_e
        half = (1 - _sign(eta)) / rational(2)
        return rational(_sign(eta)), half * (p["gamma"] - Ne - rational(eta + 1) / 2)

    def forced_value(self, p, eta, N_bar, bar):
        return p["gamma"] + parity_decompose(N_bar).n_e - parity_decompose(p.N).n_e - eta


class ComplementaryBannaiIto(Family):
    tag, params, monic = "CBI", BI_PARAMS, True

    def lam(self, p, x):
        return mu(p, x)

    def lam_at(self, p, point):
        return mu(p, int(point))

    def A(self, p, i):
        raise UnsupportedFamily("CBI recurrence is given through X and Y only")

    C = A

    def X(self, p, i):
        return tau(p, i)

    def Y(self, p, i):
        return _sign(i) * sigma(p)

    def series(self, p, i, x):
        return eval_cbi(p, i, x)


def mu(p: ParameterSet, x: int):
    """Spectral variable of the CBI polynomials."""
    N, xx = parity_decompose(p.N), parity_decompose(x)
    return _sign(x + p.N) * (x - p["gamma"] - N.n_e + N.n_p - 1) / rational(2) - rational(xx.n_p) / 2


def sigma(p: ParameterSet):
    a, _, c = _abg(p)
    N = parity_decompose(p.N)
    if N.n_p == 0:
        return -(N.n_e + c + 1) / rational(2)
    return -(-N.n_e - 2 * a + c - 2) / rational(2)


def tau(p: ParameterSet, i: int):
    """Recurrence coefficient of I_{i-1}: the BI product A_i C_i at N + 1."""
    a, b, c = _abg(p)
    return _bi_A(a, b, c, p.N + 1, i) * _bi_C(a, b, c, p.N + 1, i)


def _check_grid(p: ParameterSet, i: int, x: int) -> None:
    if not (0 <= i <= p.N and 0 <= x <= p.N):
        raise ValueError(f"(i, x) = ({i}, {x}) outside the grid of {p}")


def eval_bi(p: ParameterSet, i: int, x: int):
    """Monic B_i(x) from its two-series closed form."""
    _check_grid(p, i, x)
    try:
        return _eval_bi(p, i, x)
    except (ZeroDivisionError, SingularSeries) as exc:
        raise SingularParameters(f"{p}: BI series undefined at i={i}, x={x} ({exc})") from None


def _eval_bi(p, i, x):
    a, b, g = _abg(p)
    I, X, N = parity_decompose(i), parity_decompose(x), parity_decompose(p.N)
    ie, ip, xe, xp, Ne, Np = I.n_e, I.n_p, X.n_e, X.n_p, N.n_e, N.n_p
    kappa = (pochhammer(rational(-Ne), ie + ip * (1 - Np)) * pochhammer(b + g, ie + ip)
             * pochhammer(1 + a, ie + Np * ip) / pochhammer(a + b + ie + 1, ie + ip))
    first = hyp_auto((rational(-ie), ie + a + b + 1, rational(-xe), xe + g - Ne), (a + 1, b + g, rational(-Ne)))
    weight = (i + ip * (2 * a + 2 * b + 1)) * (x - xp * (2 * Ne - 2 * g + 1))
    second = ZERO
    if weight != 0:
        pre = _sign(i + x) * weight / (2 * (b + g) * (2 * Ne - Np * (p.N + 2 * a + 1)))
        series = hyp_auto((rational(1 - ie - ip), ie + ip + a + b + 1, rational(1 - xe - xp), xe + xp + g - Ne),
                          (a + Np + 1, b + g + 1, rational(1 - Ne - Np)))
        second = pre * series
    return kappa * (first + second)


def eval_cbi(p: ParameterSet, i: int, x: int):
    """Monic I_i(x) from its closed form."""
    _check_grid(p, i, x)
    try:
        return _eval_cbi(p, i, x)
    except (ZeroDivisionError, SingularSeries) as exc:
        raise SingularParameters(f"{p}: CBI series undefined at i={i}, x={x} ({exc})") from None


def _eval_cbi(p, i, x):
    a, b, c = _abg(p)
    I, X, N = parity_decompose(i), parity_decompose(x), parity_decompose(p.N)
    ie, ip, xe, xp, Ne = I.n_e, I.n_p, X.n_e, X.n_p, N.n_e
    tail = pochhammer(a - c + ip + 1, ie) / pochhammer(ie + ip + 1 + a + b, ie)
    lift = (mu(p, x) - sigma(p)) ** ip
    if N.n_p == 0:
        head = pochhammer(rational(ip - Ne), ie) * pochhammer(b + ip, ie)
        series = hyp_auto((rational(-ie), ie + ip + 1 + a + b, rational(ip - xe - xp), xe + xp + ip - Ne - c - 1),
                          (rational(ip - Ne), a - c + ip + 1, b + ip))
    else:
        head = pochhammer(rational(Ne - ie + 1), ie) * pochhammer(-b - ie, ie)
        series = hyp_auto((rational(-ie), ie + ip + 1 + a + b, rational(-xe), xe - Ne - c),
                          (rational(-Ne), a - c + ip + 1, b + 1))
    return head * tail * lift * series


fam.register(BannaiIto())
fam.register(ComplementaryBannaiIto())


def make_parameters(family: str, N: int, alpha, beta, gamma) -> ParameterSet:
    if family not in ("BI", "CBI"):
        raise UnsupportedFamily(f"{family} is not a Bannai-Ito family")
    return ParameterSet.make(family, N, alpha=alpha, beta=beta, gamma=gamma)


def symmetric_parameters(p: ParameterSet) -> ParameterSet:
    """(a, b, c) -> (b + c - 1, a - c + 1, c), which leaves B_i (N odd) and I_i (N even) unchanged."""
    a, b, c = _abg(p)
    return p.replace(alpha=b + c - 1, beta=a - c + 1)


def symmetry_applies(p: ParameterSet) -> bool:
    odd = p.N % 2 == 1
    return odd if p.family == "BI" else not odd


def recurrence_mismatches(p: ParameterSet) -> list:
    """Grid points where the closed form disagrees with the three-term recurrence."""
    series = fam.series_table(p)
    recur = fam.recurrence_table(p)
    return [(i, x) for i in range(p.N + 1) for x in range(p.N + 1) if series[i][x] != recur[i][x]]


def leading_coefficient(p: ParameterSet, i: int):
    """Top divided difference of B_i (or I_i) over the spectral points; 1 for a monic polynomial."""
    f = fam.get_family(p.family)
    pts = [f.lam(p, x) for x in range(i + 1)]
    vals = [fam.series_table(p)[i][x] for x in range(i + 1)]
    for level in range(1, i + 1):
        vals = [(vals[k + 1] - vals[k]) / (pts[k + level] - pts[k]) for k in range(len(vals) - 1)]
    return vals[0]


# ---------------------------------------------------------------------------
# Relations between the two families


def _other(family: str) -> str:
    return "CBI" if family == "BI" else "BI"


def required_parity(entry) -> int:
    return 0 if entry.shift["parity"] == "even" else 1


def parity_matches(entry, N: int) -> bool:
    return N % 2 == required_parity(entry)


def bar_parameters(entry, p: ParameterSet) -> ParameterSet:
    """Parameters of the partner family named by a relation entry."""
    from .catalog import bar_evaluators

    if p.family != entry.family:
        raise UnsupportedFamily(f"{entry.id} belongs to {entry.family}, not {p.family}")
    if not parity_matches(entry, p.N):
        raise InvalidShift(f"{entry.id} needs N {entry.shift['parity']}, got N={p.N}")
    named, N_bar = bar_evaluators(entry, p)
    if N_bar < 0:
        raise InvalidShift("shifted N is negative")
    return ParameterSet.make(_other(entry.family), N_bar, named)


def instantiate_bi(entry, p: ParameterSet, direction: str = "plus") -> RelationInstance:
    """Bind a BI/CBI relation entry.

    "plus" expands the entry's own family over the partner family with degree
    offsets {0, -1}; "minus" writes the partner times a multiplier over the
    entry's family with offsets {0, 1}.
    """
    from .catalog import form_evaluators

    bar = bar_parameters(entry, p)
    eta = int(entry.shift["eta"])
    lam, coeff, support = form_evaluators(entry, p, direction)
    if direction == "plus":
        left, right, ls, rs = p, bar, 0, eta
    else:
        left, right, ls, rs = bar, p, eta, 0
    rel = RelationInstance(entry.id, entry.kind, direction, left, right, ls, rs, memo(lam), memo(coeff), support)
    rel.meta["catalog"] = True
    return rel


def verify_bi_relation(entry, p: ParameterSet) -> VerificationReport:
    """Check both displays of a BI/CBI relation at every (i, x) of the common grid."""
    reports = []
    for direction in entry.directions:
        try:
            rel = instantiate_bi(entry, p, direction)
        except (SingularParameters, ZeroDivisionError) as exc:
            return VerificationReport(entry.id, p.to_json(), False, status="skipped", detail=str(exc))
        reports.append((direction, verify_relation(rel, p)))
    locus = [dict(loc, direction=d) for d, r in reports for loc in r.residual_locus]
    statuses = {r.status for _, r in reports}
    checked = sum(r.checked for _, r in reports)
    report = VerificationReport(entry.id, p.to_json(), statuses == {"pass"}, residual_locus=locus, checked=checked)
    if "skipped" in statuses:
        report.status = "skipped"
        report.detail = "; ".join(r.detail for _, r in reports if r.detail)
    elif "inconclusive" in statuses and not locus:
        report.status = "inconclusive"
    report.extra["directions"] = {d: r.status for d, r in reports}
    return report


def random_bi_parameters(entry, N: int, rng, retries: int = 100) -> ParameterSet:
    """Admissible parameters for the entry's family whose partner parameters are admissible too."""

    def partner_ok(p):
        bar = bar_parameters(entry, p)
        problem = fam.admissibility_problem(bar)
        if problem:
            raise SingularParameters(problem)
        for direction in entry.directions:
            rel = instantiate_bi(entry, p, direction)
            for x in rel.points():
                rel.lam(x)
            for i in rel.degrees():
                for e in rel.support:
                    if i + e >= 0:
                        rel.coeff(i, e)

    return fam.random_parameters(entry.family, N, rng, retries=retries, extra_check=partner_ok)


def bind_from_left(entry, direction: str, left: ParameterSet) -> RelationInstance:
    """Instance of ``entry`` in ``direction`` whose left side has parameters ``left``."""
    if direction == "plus":
        if entry.family != left.family:
            raise IncompatibleShifts(f"{entry.id} does not start from {left.family}")
        return instantiate_bi(entry, left, "plus")
    rel = instantiate_bi(entry, _solve_own(entry, left), "minus")
    if rel.left != left:
        raise IncompatibleShifts(f"{entry.id} cannot reach {left}")
    return rel


def compose_bi(first_entry, first_dir: str, second_entry, second_dir: str, p: ParameterSet) -> RelationInstance:
    """Chain two BI/CBI relations through their shared middle family.

    ``p`` are the parameters of the left end of the chain; the second relation
    is bound so that its left side coincides with the middle of the first.
    """
    first = bind_from_left(first_entry, first_dir, p)
    second = bind_from_left(second_entry, second_dir, first.right)
    offsets = {e + f for e in first.support for f in second.support}
    kind = "B2" if offsets == {1, 0, -1} else "B2p"
    rel = compose(first, second, kind, f"{first_entry.id}{_arrow(first_dir)}{second_entry.id}{_arrow(second_dir)}")
    rel.meta["middle"] = first.right
    return rel


def random_chain_parameters(first_entry, first_dir: str, second_entry, second_dir: str, N: int, rng,
                            retries: int = 100) -> ParameterSet:
    """BI parameters at which the chain exists and every family along it is admissible."""

    def chain_ok(p):
        rel = compose_bi(first_entry, first_dir, second_entry, second_dir, p)
        for q in (rel.meta["middle"], rel.right):
            problem = fam.admissibility_problem(q)
            if problem:
                raise SingularParameters(problem)
        for x in rel.points():
            rel.lam(x)
        for i in rel.degrees():
            for e in rel.support:
                if i + e >= 0:
                    rel.coeff(i, e)

    return fam.random_parameters("BI", N, rng, retries=retries, extra_check=chain_ok)


def _arrow(direction: str) -> str:
    return "+" if direction == "plus" else "-"


def _solve_own(entry, target: ParameterSet) -> ParameterSet:
    """Parameters of the entry's own family whose partner equals ``target``.

    The stored bar maps are affine with unit coefficients up to sign, so the
    preimage is found from the images of three probe points.
    """
    if target.family == entry.family:
        raise IncompatibleShifts(f"{entry.id} maps {entry.family} to {_other(entry.family)}")
    probe_N = required_parity(entry)
    N = target.N - (_bar_N(entry, probe_N) - probe_N)
    if N < 0 or not parity_matches(entry, N):
        raise IncompatibleShifts(f"{entry.id} cannot reach N={target.N}")
    zero = {k: ZERO for k in BI_PARAMS}
    base = bar_parameters(entry, ParameterSet.make(entry.family, N, zero))
    if base.N != target.N:
        raise IncompatibleShifts(f"{entry.id} cannot reach N={target.N}")
    cols = []
    for name in BI_PARAMS:
        probe = dict(zero, **{name: ONE})
        img = bar_parameters(entry, ParameterSet.make(entry.family, N, probe))
        cols.append([img[k] - base[k] for k in BI_PARAMS])
    rhs = [target[k] - base[k] for k in BI_PARAMS]
    sol = _solve3(cols, rhs)
    return ParameterSet.make(entry.family, N, dict(zip(BI_PARAMS, sol)))


def _bar_N(entry, N: int) -> int:
    from .catalog import bar_evaluators

    return bar_evaluators(entry, ParameterSet.make(entry.family, N, {k: ZERO for k in BI_PARAMS}))[1]


def _solve3(cols, rhs):
    """Solve M v = rhs where cols[j] is the j-th column of M (exact Gaussian elimination)."""
    n = len(rhs)
    m = [[cols[j][r] for j in range(n)] + [rhs[r]] for r in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise IncompatibleShifts("bar map is not invertible")
        m[c], m[piv] = m[piv], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [u - f * v for u, v in zip(m[r], m[c])]
    return [m[r][n] / m[r][r] for r in range(n)]


def composable_pairs(entries, N: int):
    """(first entry, direction, second entry, direction) chains that start and end on BI."""
    out = []
    for first, second in itertools.product(entries, repeat=2):
        for d1, d2 in itertools.product(("plus", "minus"), repeat=2):
            start = first.family if d1 == "plus" else _other(first.family)
            if start != "BI":
                continue
            if d1 == "plus" and not parity_matches(first, N):
                continue
            out.append((first, d1, second, d2))
    return out


def equivalent_forms(p: ParameterSet) -> set:
    """``p`` together with its symmetric image when the family symmetry applies at this N."""
    out = {p}
    if symmetry_applies(p):
        out.add(symmetric_parameters(p))
    return out


def _chain_kind(first, second) -> str:
    offsets = {e + f for e in first.support for f in second.support}
    return "B2" if offsets == {1, 0, -1} else "B2p"


def chain_endpoints(entries, start: ParameterSet, kind: str) -> dict:
    """Map (eta, end parameters) -> chain labels for two-step chains of ``kind`` leaving ``start``.

    Symmetric images are allowed at the start, the middle and the end, since
    they name the same polynomials.
    """
    found = {}
    for e1, d1, e2, d2 in composable_pairs(entries, start.N):
        for left in equivalent_forms(start):
            try:
                first = bind_from_left(e1, d1, left)
            except AskeyError:
                continue
            for middle in equivalent_forms(first.right):
                try:
                    second = bind_from_left(e2, d2, middle)
                except AskeyError:
                    continue
                if _chain_kind(first, second) != kind:
                    continue
                rel = compose(replace(first, right=middle), second, kind)
                label = f"{e1.id}{_arrow(d1)}{e2.id}{_arrow(d2)}"
                for end in equivalent_forms(rel.right):
                    found.setdefault((rel.right_shift - rel.left_shift, end), set()).add(label)
    return found


def chain_decomposition(kind: str, samples, space=None, entries=None) -> dict:
    """Match every non-identity shift passing the ``kind`` constraints with a two-step B/I chain.

    A survivor from p to pbar is explained by a chain p -> pbar, or by a chain
    pbar -> p read backwards (the minus form of the same relation).
    """
    from .catalog import list_relations
    from .search import SearchSpace, enumerate_shifts, verdict

    space = space or SearchSpace.default("BI", Ns=(samples[0].N,))
    entries = entries or list_relations("BI", "BI") + list_relations("CBI", "BI")
    p = samples[0]
    forward = chain_endpoints(entries, p, kind)
    matched, unmatched = {}, []
    for cand in enumerate_shifts(space):
        if cand.shift.is_identity or verdict(kind, cand, samples) != "pass":
            continue
        bar = cand.shift.apply(p)
        labels = set()
        for end in equivalent_forms(bar):
            labels |= forward.get((cand.shift.eta, end), set())
        if not labels:
            backward = chain_endpoints(entries, bar, kind)
            for end in equivalent_forms(p):
                labels |= {f"reverse {t}" for t in backward.get((-cand.shift.eta, end), set())}
        if labels:
            matched[cand.label] = sorted(labels)
        else:
            unmatched.append(cand.label)
    return {"kind": kind, "N": p.N, "matched": matched, "unmatched": unmatched}


# ---------------------------------------------------------------------------
# Bounded search for A2 relations among BI polynomials


def bi_a2_nonexistence(samples, space=None) -> dict:
    """Test every shift of a BI search space against the A2 constraints; survivors pass on all samples."""
    from .search import SearchSpace, enumerate_shifts, survives

    space = space or SearchSpace.default("BI")
    survivors, tested = [], 0
    for cand in enumerate_shifts(space):
        tested += 1
        if survives("A2", cand, samples):
            survivors.append(cand.label)
    return {"family": "BI", "kind": "A2", "tested": tested, "survivors": survivors,
            "samples": [p.to_json() for p in samples]}


__all__ = [
    "ParityIndex", "parity_decompose", "BannaiIto", "ComplementaryBannaiIto", "eval_bi", "eval_cbi", "mu",
    "sigma", "tau", "make_parameters", "symmetric_parameters", "symmetry_applies", "recurrence_mismatches",
    "leading_coefficient", "bar_parameters", "instantiate_bi", "verify_bi_relation", "random_bi_parameters",
    "compose_bi", "bind_from_left", "random_chain_parameters", "composable_pairs", "bi_a2_nonexistence",
    "equivalent_forms", "chain_endpoints", "chain_decomposition",
]

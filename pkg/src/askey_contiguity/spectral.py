"""Monic polynomials, Christoffel/Geronimus data of A2 relations and measure identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import families as fam
from .constraints import ShiftContext, ShiftMap, VerificationReport
from .errors import SingularParameters, UnsupportedFamily
from .families import ParameterSet
from .scalar import ONE, ZERO, fmt, rational

# the relations whose finite-measure identity is displayed with the catalog
MEASURE_RELATIONS = ("qRI", "qRII", "RI", "RII")


@dataclass
class MonicPolySystem:
    """P_i = Gamma_i R_i(x) and Q_i = zeta^i Gammabar_i R_i(x + eta) on the shifted parameters."""

    ctx: ShiftContext

    @property
    def base(self) -> ParameterSet:
        return self.ctx.p

    def gamma_prod(self, i: int, bar: bool = False):
        out = ONE
        for k in range(i):
            out *= self.ctx.A(k, bar)
        return out

    def P(self, i: int, x: int):
        return self.gamma_prod(i) * fam.series_table(self.ctx.p)[i][x]

    def Q(self, i: int, x: int):
        ctx = self.ctx
        return ctx.zeta**i * self.gamma_prod(i, True) * fam.series_table(ctx.bar)[i][x + ctx.eta]

    def lam(self, x: int):
        return fam.lam(self.ctx.p, x)

    def p_points(self) -> range:
        return range(self.ctx.p.N + 1)

    def q_points(self) -> range:
        """Grid x for which the shifted argument x + eta lies on the shifted lattice."""
        lo = max(0, -self.ctx.eta)
        return range(lo, self.ctx.bar.N - self.ctx.eta + 1)

    def common_points(self) -> range:
        q = self.q_points()
        return range(max(0, q.start), min(self.ctx.p.N, q.stop - 1) + 1)

    def p_recurrence_residuals(self):
        """Residuals of lam P_i = P_{i+1} + Y_i P_i + X_i P_{i-1}."""
        ctx = self.ctx
        for i in range(ctx.p.N):
            for x in self.p_points():
                prev = self.P(i - 1, x) if i else ZERO
                r = self.lam(x) * self.P(i, x) - self.P(i + 1, x) - ctx.Y(i) * self.P(i, x) - ctx.X(i) * prev
                yield i, x, r

    def q_recurrence_residuals(self):
        """Residuals of lam Q_i = Q_{i+1} + (zeta Ybar_i - xi) Q_i + zeta^2 Xbar_i Q_{i-1}."""
        ctx = self.ctx
        z, xi = ctx.zeta, ctx.xi
        for i in range(ctx.bar.N):
            for x in self.q_points():
                prev = self.Q(i - 1, x) if i else ZERO
                r = (self.lam(x) * self.Q(i, x) - self.Q(i + 1, x) - (z * ctx.Y(i, True) - xi) * self.Q(i, x)
                     - z**2 * ctx.X(i, True) * prev)
                yield i, x, r

    def leading_coefficient(self, which: str, i: int):
        """i-th divided difference of P_i (or Q_i) over the spectral values; 1 for a monic polynomial."""
        xs = list(self.p_points() if which == "P" else self.q_points())[: i + 1]
        if len(xs) < i + 1:
            raise ValueError(f"degree {i} needs {i + 1} grid points")
        ev = self.P if which == "P" else self.Q
        nodes = [self.lam(x) for x in xs]
        table = [ev(i, x) for x in xs]
        for level in range(1, i + 1):
            table = [(table[k + 1] - table[k]) / (nodes[k + level] - nodes[k]) for k in range(len(table) - 1)]
        return table[0]


def monicize(params: ParameterSet, shift: ShiftMap) -> MonicPolySystem:
    try:
        ctx = ShiftContext(params, shift)
        system = MonicPolySystem(ctx)
        for i in range(max(params.N, ctx.bar.N) + 1):
            system.gamma_prod(i)
            system.gamma_prod(i, True)
    except ZeroDivisionError as exc:
        raise SingularParameters(f"{params}: {exc}") from None
    return system


def monic_at(params: ParameterSet, lam_value, top: int) -> list:
    """P_0..P_top from the monic recurrence run at an arbitrary spectral value."""
    vals = [ONE]
    prev = ZERO
    for i in range(top):
        nxt = (lam_value - fam.coeff_Y(params, i)) * vals[-1] - fam.coeff_X(params, i) * prev
        prev = vals[-1]
        vals.append(nxt)
    return vals


@dataclass
class SpectralData:
    nu_lambda: object
    a: Callable[[int], object]
    c: Callable[[int], object]
    omega: Callable[[int], object]
    chi: object = None
    gap: object = None
    extra: dict = field(default_factory=dict)


def _gap(ctx: ShiftContext):
    """zeta Abar_0 - A_0 + xi; zero exactly for the identity shift."""
    return ctx.zeta * ctx.A(0, True) - ctx.A(0) + ctx.xi


def christoffel_data(params: ParameterSet, shift: ShiftMap, chi=None) -> SpectralData:
    ctx = ShiftContext(params, shift)
    gap = _gap(ctx)
    if gap == 0:
        raise SingularParameters("zeta*Abar_0 - A_0 + xi vanishes, so lambda_nu is undefined")
    z, X = ctx.zeta, ctx.X
    nu_lambda = -ctx.A(0) + X(1) / gap

    def c(i):
        out = z ** (2 - 2 * i) * gap
        for k in range(1, i):
            out *= X(k + 1) / X(k, True)
        return out

    def a(i):
        return z ** (2 * i) * X(1) / gap * ctx.xprod(i)

    def omega(x):
        return fam.lam(params, x) - nu_lambda

    return SpectralData(nu_lambda, a, c, omega, chi, gap)


def _report(rid, params, locus, checked, **extra) -> VerificationReport:
    rep = VerificationReport(rid, params.to_json(), not locus and checked > 0, residual_locus=locus, checked=checked)
    rep.extra.update(extra)
    return rep


def verify_christoffel_geronimus(params: ParameterSet, shift: ShiftMap, relation_id: str = "") -> VerificationReport:
    """Check the monic A2 relations and their Christoffel/Geronimus reading exactly."""
    rid = relation_id or f"A2[{shift.label()}]"
    try:
        system = monicize(params, shift)
        data = christoffel_data(params, shift)
    except SingularParameters as exc:
        status = "not_applicable" if shift.is_identity else "skipped"
        return VerificationReport(rid, params.to_json(), False, status=status, detail=str(exc))
    ctx = system.ctx
    locus, checked = [], 0
    top = min(ctx.p.N, ctx.bar.N)
    xs = list(system.common_points())
    try:
        for i in range(top):
            for x in xs:
                checked += 2
                if data.omega(x) * system.Q(i, x) != system.P(i + 1, x) - data.a(i) * system.P(i, x):
                    locus.append({"check": "christoffel", "i": i, "x": x})
                prev = system.Q(i - 1, x) if i else ZERO
                if system.P(i, x) != system.Q(i, x) - data.c(i) * prev:
                    locus.append({"check": "geronimus", "i": i, "x": x})
        at_nu = monic_at(params, data.nu_lambda, top + 1)
        for i in range(top):
            checked += 1
            if at_nu[i] == 0 or data.a(i) != at_nu[i + 1] / at_nu[i]:
                locus.append({"check": "a_ratio", "i": i})
        for i in range(1, top + 1):
            checked += 1
            if data.c(i) * data.a(i) != ctx.zeta**2 * ctx.X(i, True):
                locus.append({"check": "ca_product", "i": i})
        for i in range(top):
            checked += 1
            lhs = -data.c(i + 1) - data.a(i) + data.nu_lambda
            if lhs != ctx.zeta * ctx.Y(i, True) - ctx.xi:
                locus.append({"check": "q_recurrence", "i": i})
    except (ZeroDivisionError, SingularParameters) as exc:
        return VerificationReport(rid, params.to_json(), False, status="skipped", detail=str(exc))
    return _report(rid, params, locus, checked, nu_lambda=fmt(data.nu_lambda))


def catalog_spectral_values(entry, params: ParameterSet) -> dict:
    """Evaluate the stored nu point, chi and measure constants of a catalog entry."""
    from .catalog.expr import compile_tree

    env = dict(params.named)
    env["N"] = rational(params.N)

    def resolve(name, inner):
        if name == "weight":
            return fam.weight(params, int(inner["x"]))
        raise UnsupportedFamily(f"unknown reference {name!r}")

    out = {}
    for key in ("nu_point", "chi"):
        if key in entry.extra:
            out[key] = compile_tree(entry.extra[key]["tree"], resolve)(env)
    for key, node in entry.extra.get("measure", {}).items():
        out[key] = compile_tree(node["tree"], resolve)(env)
    return out


def printed_nu_lambda(entry, params: ParameterSet):
    """lambda at the stored spectral point of a catalog entry."""
    vals = catalog_spectral_values(entry, params)
    return fam.get_family(params.family).lam_at(params, vals["nu_point"])


def verify_printed_nu(entry, params: ParameterSet) -> VerificationReport:
    """The stored nu must give the lambda_nu of the generic formula."""
    data = christoffel_data(params, entry.shift_map())
    printed = printed_nu_lambda(entry, params)
    locus = [] if printed == data.nu_lambda else [{"nu_lambda": fmt(printed), "expected": fmt(data.nu_lambda)}]
    return _report(entry.id, params, locus, 1)


def stieltjes(system: MonicPolySystem, i: int, lam_value):
    """F_i = sum over the Q support of Q_i(y) w(y) / (lam_value - lam_y), w the shifted weight."""
    ctx = system.ctx
    total = ZERO
    for y in system.q_points():
        total += system.Q(i, y) * fam.weight(ctx.bar, y + ctx.eta) / (lam_value - system.lam(y))
    return total


def geronimus_residuals(params: ParameterSet, shift: ShiftMap, chi) -> list:
    """c_i phi_{i-1} - phi_i with phi_i = F_i(nu) + chi Q_i(nu) and Q_i(nu) from the Q recurrence."""
    system = monicize(params, shift)
    data = christoffel_data(params, shift)
    ctx = system.ctx
    z, xi = ctx.zeta, ctx.xi
    top = min(ctx.p.N, ctx.bar.N)
    q_nu = [ONE]
    prev = ZERO
    for i in range(top):
        nxt = (data.nu_lambda - z * ctx.Y(i, True) + xi) * q_nu[-1] - z**2 * ctx.X(i, True) * prev
        prev = q_nu[-1]
        q_nu.append(nxt)
    phi = [stieltjes(system, i, data.nu_lambda) + chi * q_nu[i] for i in range(top + 1)]
    return [(i, data.c(i) * phi[i - 1] - phi[i]) for i in range(1, top + 1)]


def verify_measure_identity(relation_id: str, params: ParameterSet) -> VerificationReport:
    """Pointwise check of the displayed finite-measure identity of qRI, qRII, RI or RII.

    sum_x wbar(x) / (lam_nu - lam_x) delta_x + mass delta_nu = factor * sum_x w(x) delta_x
    """
    from . import catalog

    if relation_id not in MEASURE_RELATIONS:
        raise UnsupportedFamily(f"no displayed measure identity for {relation_id}")
    entry = catalog.get_entry(relation_id)
    if params.family != entry.family:
        raise UnsupportedFamily(f"{relation_id} is a {entry.family} relation")
    ctx = ShiftContext(params, entry.shift_map())
    try:
        vals = catalog_spectral_values(entry, params)
        f = fam.get_family(params.family)
        nu_lambda = f.lam_at(params, vals["nu_point"])
        locus, checked = [], 0
        nu_on_grid = [x for x in range(params.N + 1) if f.point(params, x) == vals["nu_point"]]
        for x in range(params.N + 1):
            lhs = ZERO
            xb = x + ctx.eta
            if 0 <= xb <= ctx.bar.N:
                lam_x = f.lam(params, x)
                if lam_x == nu_lambda:
                    raise SingularParameters(f"lambda_nu equals lambda_{x}")
                lhs += fam.weight(ctx.bar, xb) / (nu_lambda - lam_x)
            if x in nu_on_grid:
                lhs += vals["mass"]
            rhs = vals["factor"] * fam.weight(params, x)
            checked += 1
            if lhs != rhs:
                locus.append({"x": x, "lhs": fmt(lhs), "rhs": fmt(rhs)})
        extra = {}
        if "chi" in vals and vals.get("mass"):
            extra["chi_matches_mass"] = vals["chi"] == vals["mass"]
            extra["chi_mass_ratio"] = fmt(vals["chi"] / vals["mass"])
    except (ZeroDivisionError, SingularParameters) as exc:
        return VerificationReport(relation_id, params.to_json(), False, status="skipped", detail=str(exc))
    return _report(relation_id, params, locus, checked, **extra)


def krawtchouk_monic_in_x(params: ParameterSet, i: int, x: int):
    """Monic-in-x Krawtchouk polynomial (-1)^i P_i, since lambda = -x."""
    if params.family != "K":
        raise UnsupportedFamily("the monic-in-x form is defined for Krawtchouk only")
    system = MonicPolySystem(ShiftContext(params, ShiftMap.identity("K")))
    return (-1) ** i * system.P(i, x)


def to_monic_in_x(data: SpectralData) -> SpectralData:
    """Christoffel/Geronimus data for families with lambda = -x in the monic-in-x convention."""
    return SpectralData(-data.nu_lambda, lambda i: -data.a(i), lambda i: -data.c(i),
                        lambda x: -data.omega(x), data.chi, data.gap)


def solve_chi(params: ParameterSet, shift: ShiftMap):
    """The chi for which c_i = phi_i / phi_{i-1}, from the i = 1 equation (it is linear in chi)."""
    r0 = geronimus_residuals(params, shift, ZERO)
    r1 = geronimus_residuals(params, shift, ONE)
    if not r0:
        raise SingularParameters("no degree available to determine chi")
    (_, a), (_, b) = r0[0], r1[0]
    if a == b:
        raise SingularParameters("chi does not enter the Geronimus condition")
    return a / (a - b)


def verify_geronimus_chi(entry, params: ParameterSet) -> VerificationReport:
    """Check c_i = phi_i / phi_{i-1} for every degree with the stored chi of a catalog entry."""
    try:
        chi = catalog_spectral_values(entry, params)["chi"]
        res = geronimus_residuals(params, entry.shift_map(), chi)
        locus = [{"i": i} for i, r in res if r != 0]
        extra = {"chi": fmt(chi)}
        if locus:
            extra["chi_solved"] = fmt(solve_chi(params, entry.shift_map()))
    except (ZeroDivisionError, SingularParameters) as exc:
        return VerificationReport(entry.id, params.to_json(), False, status="skipped", detail=str(exc))
    return _report(entry.id, params, locus, len(res), **extra)

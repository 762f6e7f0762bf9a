import pytest

from askey_contiguity import catalog
from askey_contiguity import families as fam
from askey_contiguity.constraints import ShiftContext, ShiftMap
from askey_contiguity.contiguity import (
    a2_minus_coeffs,
    a2_plus_coeffs,
    b2p_coeffs,
    compose,
    compose_a2_to_b2,
    compose_a2_to_b2p,
    generic_relation,
    proportional,
    same_up_to_scale,
    verify_relation,
)
from askey_contiguity.errors import IncompatibleShifts, SingularParameters
from askey_contiguity.scalar import rational

from .conftest import make
from .oracle import solve_coefficients


@pytest.fixture
def qr():
    return make("qR", 4, alpha="1/3", beta="1/7", gamma="1/11", q="2/5")


class TestA2Coefficients:
    def test_degree_zero(self, qr):
        assert a2_plus_coeffs(qr, catalog.get_entry("qRI").shift_map(), 0) == (1, 1, 0)

    def test_krawtchouk_KI_plus(self):
        p = make("K", 3, alpha="1/2")
        _, phi0, phim1 = a2_plus_coeffs(p, catalog.get_entry("KI").shift_map(), 1)
        assert phi0 / (phi0 + phim1) == rational("2/3")
        assert phim1 / (phi0 + phim1) == rational("1/3")

    def test_krawtchouk_KI_minus(self):
        p = make("K", 3, alpha="1/2")
        alpha = p["alpha"]
        lam, phi1, phi0 = a2_minus_coeffs(p, catalog.get_entry("KI").shift_map(), 1)
        scale = lam(0)
        assert all(lam(x) == scale * rational(p.N - x) / p.N for x in range(p.N))
        assert phi0 == scale * (1 - alpha)
        assert phi1 == scale * alpha

    def test_identity_minus(self, qr):
        ctx = ShiftContext(qr, ShiftMap.identity("qR"))
        for i in range(qr.N):
            lam, phi1, phi0 = a2_minus_coeffs(qr, ctx, i)
            assert phi1 == 0
            assert phi0 == ctx.C(1)
            assert lam(2) == ctx.C(1)

    def test_minus_degree_zero(self, qr):
        ctx = ShiftContext(qr, catalog.get_entry("qRIII").shift_map())
        _, phi1, phi0 = a2_minus_coeffs(qr, ctx, 0)
        assert phi1 == ctx.A(0) - ctx.zeta * ctx.A(0, True) - ctx.xi
        assert phi0 == ctx.C(1)


class TestB2PrimeCoefficients:
    def test_conventions(self, qr):
        shift = catalog.get_entry("qRI/I'").shift_map()
        assert b2p_coeffs(qr, shift, "plus", 0)[1][0] == 1
        assert b2p_coeffs(qr, shift, "plus", 0)[1][-2] == 0
        assert b2p_coeffs(qr, shift, "plus", 1)[1][-2] == 0

    def test_minus_needs_two_recurrence_steps(self):
        p = make("qR", 1, alpha="1/3", beta="1/7", gamma="1/11", q="2/5")
        with pytest.raises(SingularParameters):
            generic_relation("B2p", "minus", p, ShiftMap.identity("qR"))


@pytest.mark.parametrize("kind", ["A2", "B2", "B2p"])
def test_generic_matches_catalog(kind, rng):
    for entry in catalog.all_relations(kind):
        for direction in entry.directions:
            p = catalog.sample_parameters(entry, 5, rng)
            generic = generic_relation(kind, direction, p, entry.shift_map())
            assert same_up_to_scale(generic, catalog.instantiate(entry, p, direction)), (entry.id, direction)


def test_b2_minus_with_nontrivial_zeta(rng):
    """Minus relations for shifts with zeta != 1 (q-families, eta != 0)."""
    for entry in catalog.all_relations("B2"):
        if entry.family != "qR":
            continue
        p = catalog.sample_parameters(entry, 5, rng)
        ctx = ShiftContext(p, entry.shift_map())
        rel = generic_relation("B2", "minus", p, ctx)
        assert verify_relation(rel).passed, entry.id
    p = fam.random_parameters("qH", 5, rng)
    shift = ShiftMap.make("qH", -1, -1)
    assert ShiftContext(p, shift).zeta != 1
    assert verify_relation(generic_relation("B2", "minus", p, shift)).passed


def test_identity_instance_passes(qr):
    report = verify_relation(catalog.identity_instance(qr))
    assert report.passed
    assert report.checked == (qr.N + 1) ** 2


@pytest.mark.parametrize("kind", ["A2", "B2", "B2p", "BI", "G"])
def test_doubling_one_coefficient_fails(kind, rng):
    for entry in catalog.all_relations(kind):
        N = next(n for n in (4, 5) if catalog.applicable_N(entry, n))
        p = catalog.sample_parameters(entry, N, rng)
        for direction in entry.directions:
            rel = catalog.instantiate(entry, p, direction)
            assert verify_relation(rel).passed
            for target in ["lambda", *rel.support]:
                bad = rel.scaled(2) if target == "lambda" else rel.scaled(2, "coeff", target)
                report = verify_relation(bad)
                assert report.status == "fail" and report.residual_locus, (entry.id, direction, target)


def test_catalog_coefficients_match_sympy_solution(rng):
    """Plus forms: the stored coefficients are the unique solution of the linear system built from values alone."""
    for kind in ("A2", "B2", "B2p"):
        for entry in catalog.all_relations(kind):
            if entry.family not in ("qR", "K", "H"):
                continue
            p = catalog.sample_parameters(entry, 4, rng)
            rel = catalog.instantiate(entry, p, "plus")
            lam = {x: rel.lam(x) for x in rel.points()}
            for i in rel.degrees():
                sol = solve_coefficients(rel.left, rel.right, rel.right_shift - rel.left_shift, lam, rel.support, i)
                assert sol is not None, (entry.id, i)
                for e, value in sol.items():
                    assert value == rel.coeff(i, e), (entry.id, i, e)


class TestComposition:
    def test_inverse_pair_is_recurrence(self, rng):
        for rid in ("qRI", "qRIII", "RI", "KI"):
            entry = catalog.get_entry(rid)
            p = catalog.sample_parameters(entry, 4, rng)
            rel = compose_a2_to_b2(catalog.instantiate(entry, p, "plus"), catalog.instantiate(entry, p, "minus"))
            assert rel.right == p and rel.support == (1, 0, -1)
            a = rel.coeff(0, 1) / fam.coeff_A(p, 0)
            b = rel.lam(0) - a * fam.lam(p, 0)
            assert a != 0
            assert all(rel.lam(x) == a * fam.lam(p, x) + b for x in rel.points())
            for i in rel.degrees():
                A, C = fam.coeff_A(p, i), fam.coeff_C(p, i)
                assert rel.coeff(i, 1) == a * A
                assert rel.coeff(i, 0) == -a * (A + C) + b
                if i:
                    assert rel.coeff(i, -1) == a * C

    def test_identity_with_identity(self, qr):
        ident = catalog.identity_instance(qr)
        rel = compose(ident, ident, "A2")
        assert same_up_to_scale(rel, ident)
        assert verify_relation(rel).passed

    @pytest.mark.parametrize("kind", ["B2", "B2p"])
    def test_catalog_entries_from_parts(self, kind, rng):
        for entry in catalog.all_relations(kind):
            p = catalog.sample_parameters(entry, 5, rng)
            rel = catalog.compose_parts(entry, p)
            assert verify_relation(rel).passed, entry.id
            assert same_up_to_scale(rel, catalog.instantiate(entry, p, "plus")), entry.id

    def test_mismatched_middle(self, qr):
        first = catalog.instantiate(catalog.get_entry("qRI"), qr, "plus")
        with pytest.raises(IncompatibleShifts):
            compose(first, catalog.identity_instance(qr), "A2")

    def test_direction_checks(self, qr):
        plus = catalog.instantiate(catalog.get_entry("qRI"), qr, "plus")
        with pytest.raises(IncompatibleShifts):
            compose_a2_to_b2(plus, plus)
        with pytest.raises(IncompatibleShifts):
            compose_a2_to_b2p(plus, catalog.instantiate(catalog.get_entry("qRI"), qr, "minus"))


def test_proportional():
    assert proportional([0, 2, 4], [0, 1, 2])
    assert not proportional([0, 2, 4], [0, 1, 3])
    assert not proportional([1, 2], [0, 2])
    assert proportional([0, 0], [0, 0])


def test_singular_coefficients_reported(rng):
    p = make("H", 4, alpha="1/3", beta="1/5")
    shift = ShiftMap.make("H", 0, 0, {"alpha": -1})
    try:
        rel = generic_relation("B2", "minus", p, shift)
        status = verify_relation(rel).status
    except SingularParameters:
        status = "skipped"
    assert status == "skipped"

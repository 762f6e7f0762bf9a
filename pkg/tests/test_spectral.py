import pytest

from askey_contiguity import catalog, spectral
from askey_contiguity import families as fam
from askey_contiguity.constraints import ShiftContext, ShiftMap
from askey_contiguity.errors import UnsupportedFamily
from askey_contiguity.scalar import rational

from .conftest import make

TRANSFORM_IDS = ["qRI", "qRII", "qRIII", "qRIV", "RI", "RII", "RIII", "RIV"]


class TestMonicSystem:
    def test_seeds(self, rng):
        p = fam.random_parameters("qR", 4, rng)
        system = spectral.monicize(p, catalog.get_entry("qRI").shift_map())
        ctx = system.ctx
        for x in system.p_points():
            assert system.P(0, x) == 1
            assert system.P(1, x) == system.lam(x) - ctx.Y(0)
        for x in system.q_points():
            assert system.Q(0, x) == 1

    @pytest.mark.parametrize("rid", TRANSFORM_IDS)
    def test_recurrences_and_leading_coefficient(self, rid, rng):
        entry = catalog.get_entry(rid)
        p = catalog.sample_parameters(entry, 4, rng)
        system = spectral.monicize(p, entry.shift_map())
        assert all(r == 0 for *_, r in system.p_recurrence_residuals())
        assert all(r == 0 for *_, r in system.q_recurrence_residuals())
        for i in range(p.N + 1):
            assert system.leading_coefficient("P", i) == 1

    def test_krawtchouk_monic_in_x(self):
        p = make("K", 5, alpha="2/7")
        a, N = p["alpha"], p.N
        for i in range(N):
            for x in range(N + 1):
                prev = spectral.krawtchouk_monic_in_x(p, i - 1, x) if i else 0
                rhs = (spectral.krawtchouk_monic_in_x(p, i + 1, x)
                       + (a * (N - i) + i * (1 - a)) * spectral.krawtchouk_monic_in_x(p, i, x)
                       + a * (1 - a) * i * (N + 1 - i) * prev)
                assert x * spectral.krawtchouk_monic_in_x(p, i, x) == rhs

    def test_krawtchouk_only(self):
        with pytest.raises(UnsupportedFamily):
            spectral.krawtchouk_monic_in_x(make("H", 3, alpha="1/3", beta="1/5"), 1, 1)


class TestChristoffelData:
    def test_krawtchouk_kernel_step(self):
        p = make("K", 4, alpha="2/7")
        data = spectral.to_monic_in_x(spectral.christoffel_data(p, catalog.get_entry("KI").shift_map()))
        assert data.nu_lambda == p.N
        assert data.a(0) == (1 - p["alpha"]) * p.N

    def test_first_c(self, rng):
        p = fam.random_parameters("qR", 4, rng)
        shift = catalog.get_entry("qRIII").shift_map()
        ctx = ShiftContext(p, shift)
        data = spectral.christoffel_data(p, shift)
        assert data.c(1) == ctx.zeta * ctx.A(0, True) - ctx.A(0) + ctx.xi

    def test_omega_vanishes_at_grid_nu(self, rng):
        p = fam.random_parameters("qR", 4, rng)
        data = spectral.christoffel_data(p, catalog.get_entry("qRI").shift_map())
        assert data.omega(p.N) == 0

    def test_identity_not_applicable(self, rng):
        p = fam.random_parameters("qR", 4, rng)
        report = spectral.verify_christoffel_geronimus(p, ShiftMap.identity("qR"))
        assert report.status == "not_applicable"


@pytest.mark.parametrize("rid", TRANSFORM_IDS)
def test_transforms_with_printed_nu(rid, rng):
    entry = catalog.get_entry(rid)
    for N in (2, 3, 4):
        p = catalog.sample_parameters(entry, N, rng)
        assert spectral.verify_christoffel_geronimus(p, entry.shift_map(), rid).passed
        assert spectral.verify_printed_nu(entry, p).passed


def test_racah_RIV_nu_off_grid(rng):
    entry = catalog.get_entry("RIV")
    p = catalog.sample_parameters(entry, 4, rng)
    assert spectral.catalog_spectral_values(entry, p)["nu_point"] == -p["alpha"] - 1
    assert spectral.verify_printed_nu(entry, p).passed


class TestMeasureIdentities:
    def test_q_racah_example(self):
        p = make("qR", 3, alpha="1/3", beta="1/7", gamma="1/11", q="2/5")
        assert spectral.verify_measure_identity("qRI", p).passed

    def test_racah_RII_example(self):
        p = make("R", 3, alpha="1/2", beta="1/3", gamma="1/5")
        assert spectral.verify_measure_identity("RII", p).passed
        vals = spectral.catalog_spectral_values(catalog.get_entry("RII"), p)
        b, g = p["beta"], p["gamma"]
        assert vals["factor"] == 1 / ((b + p.N + 1) * (b + g + 1))

    def test_single_point_measure(self):
        assert spectral.verify_measure_identity("RII", make("R", 0, alpha="1/2", beta="1/3", gamma="1/5")).passed

    @pytest.mark.parametrize("rid", spectral.MEASURE_RELATIONS)
    def test_random(self, rid, rng):
        entry = catalog.get_entry(rid)
        for N in (1, 2, 3, 4):
            p = catalog.sample_parameters(entry, N, rng)
            assert spectral.verify_measure_identity(rid, p).passed

    def test_unsupported(self):
        with pytest.raises(UnsupportedFamily):
            spectral.verify_measure_identity("qRIII", make("qR", 3, alpha="1/3", beta="1/7", gamma="1/11", q="2/5"))


class TestGeronimusChi:
    @pytest.mark.parametrize("rid", ["qRII", "qRIV", "RI", "RII", "RIII", "RIV"])
    def test_printed_chi_holds(self, rid, rng):
        entry = catalog.get_entry(rid)
        p = catalog.sample_parameters(entry, 4, rng)
        assert spectral.verify_geronimus_chi(entry, p).passed

    def test_q_racah_qRI_printed_chi_has_wrong_sign(self, rng):
        entry = catalog.get_entry("qRI")
        p = catalog.sample_parameters(entry, 4, rng)
        report = spectral.verify_geronimus_chi(entry, p)
        assert report.status == "fail"
        assert rational(report.extra["chi_solved"]) == -rational(report.extra["chi"])

    def test_q_racah_qRIII_printed_chi_fails(self, rng):
        entry = catalog.get_entry("qRIII")
        p = catalog.sample_parameters(entry, 4, rng)
        report = spectral.verify_geronimus_chi(entry, p)
        assert report.status == "fail"
        g, q = p["gamma"], p["q"]
        assert rational(report.extra["chi_solved"]) == -rational(report.extra["chi"]) / (1 - g * q**-p.N)

import random

import pytest

from askey_contiguity import catalog
from askey_contiguity import families as fam
from askey_contiguity.contiguity import verify_relation
from askey_contiguity.scalar import SeriesSpec, is_k_balanced

G_IDS = ["GI", "GII", "GIII", "GIV", "GV", "GVI"]


def off_balance_sample(entry, N, rng):
    """Draw parameters away from the q-Racah reduction point."""
    while True:
        p = catalog.sample_parameters(entry, N, rng)
        if p["z"] != p["q"] and p["delta"] != p["beta"] * p["gamma"] * p["q"]:
            return p


@pytest.mark.parametrize("rid", G_IDS)
def test_relations_hold_off_balance(rid):
    rng = random.Random(G_IDS.index(rid))
    entry = catalog.get_entry(rid)
    for N in range(2, 6):
        for _ in range(3):
            assert catalog.verify_entry(entry, off_balance_sample(entry, N, rng)).passed, (rid, N)


def _series_spec(p, i, x):
    a, b, g, d, q, N = p["alpha"], p["beta"], p["gamma"], p["delta"], p["q"], p.N
    return SeriesSpec.basic(i, q, (a * b * q ** (i + 1), q**-x, g * q ** (x - N)), (a * q, d, q**-N), p["z"])


def test_balance_only_on_reduction(rng):
    p = fam.random_parameters("G", 4, rng)
    q = p["q"]
    balanced = p.replace(delta=p["beta"] * p["gamma"] * q, z=q)
    for i in range(p.N + 1):
        assert is_k_balanced(_series_spec(balanced, i, 1), q, i) == 1
        if p["delta"] != p["beta"] * p["gamma"] * q:
            assert is_k_balanced(_series_spec(p.replace(z=q), i, 1), q, i) != 1


@pytest.mark.parametrize("N", range(1, 7))
def test_reduces_to_q_racah(N, rng):
    qr = fam.random_parameters("qR", N, rng)
    g = fam.ParameterSet.make("G", N, qr.named, delta=qr["beta"] * qr["gamma"] * qr["q"], z=qr["q"])
    assert fam.series_table(g) == fam.series_table(qr)


def test_left_shifted_entry(rng):
    entry = catalog.get_entry("GIII")
    assert entry.shift["eta"] == -1 and entry.directions == ("minus",)
    p = catalog.sample_parameters(entry, 4, rng)
    for direction in entry.directions:
        assert verify_relation(catalog.instantiate(entry, p, direction)).passed

"""One test per acceptance criterion; each prints a PASS/FAIL line and the terminal summary collects them."""

import random

from askey_contiguity import banita, catalog, search, spectral
from askey_contiguity import families as fam
from askey_contiguity.contiguity import compose_a2_to_b2, generic_relation, same_up_to_scale, verify_relation
from askey_contiguity.errors import AskeyError

from .conftest import record_acceptance

A2_COUNTS = {"qR": 4, "qH": 4, "dqH": 3, "qqK": 3, "qK": 3, "aqK": 3, "dqK": 2, "R": 4, "H": 4, "dH": 3, "K": 2}
SPECTRAL_IDS = ["qRI", "qRII", "qRIII", "qRIV", "RI", "RII", "RIII", "RIV"]


def verify_samples(entry, Ns, samples, rng, failures, printed=False):
    checked = 0
    for N in Ns:
        if not catalog.applicable_N(entry, N):
            continue
        for _ in range(samples):
            p = catalog.sample_parameters(entry, N, rng)
            report = catalog.verify_entry(entry, p, printed=printed)
            checked += 1
            if report.status != "pass":
                failures.append((entry.id, N, report.status))
    return checked


def test_criterion_01_a2_sweep():
    rng = random.Random(1)
    entries = catalog.all_relations("A2")
    counts = {tag: sum(e.family == tag for e in entries) for tag in A2_COUNTS}
    failures, checked = [], 0
    for entry in entries:
        assert set(entry.directions) == {"plus", "minus"}, entry.id
        checked += verify_samples(entry, range(2, 7), 3, rng, failures)
    ok = counts == A2_COUNTS and len(entries) == 35 and not failures
    record_acceptance(1, ok, f"{len(entries)} A2 entries, plus and minus forms, {checked} samples over N=2..6, "
                             f"failures={failures}")
    assert ok


def test_criterion_02_q_racah_b2_b2p():
    rng = random.Random(2)
    b2, b2p = catalog.list_relations("qR", "B2"), catalog.list_relations("qR", "B2p")
    failures, checked = [], 0
    for entry in b2 + b2p:
        checked += verify_samples(entry, range(2, 6), 3, rng, failures)
    corrected = sorted(e.id for e in catalog.corrected_entries())
    ok = len(b2) == 12 and len(b2p) == 10 and not failures
    record_acceptance(2, ok, f"qR B2={len(b2)} B2'={len(b2p)}, {checked} samples over N=2..5, "
                             f"failures={failures}; corrected entries used: {', '.join(corrected)}")
    assert ok


def test_criterion_03_generic_matches_a2_catalog():
    rng = random.Random(3)
    failures, compared = [], 0
    for entry in catalog.all_relations("A2"):
        for _ in range(3):
            p = catalog.sample_parameters(entry, 5, rng)
            for direction in entry.directions:
                generic = generic_relation("A2", direction, p, entry.shift_map())
                compared += 1
                if not same_up_to_scale(generic, catalog.instantiate(entry, p, direction)):
                    failures.append((entry.id, direction))
    ok = not failures
    record_acceptance(3, ok, f"{compared} generic vs catalog A2 comparisons up to one scalar, failures={failures}")
    assert ok


def recurrence_up_to_normalization(rel, p) -> bool:
    """rel is a * (three-term recurrence) + b * (identity) with a nonzero."""
    a = rel.coeff(0, 1) / fam.coeff_A(p, 0)
    b = rel.lam(0) - a * fam.lam(p, 0)
    if a == 0 or any(rel.lam(x) != a * fam.lam(p, x) + b for x in rel.points()):
        return False
    for i in rel.degrees():
        A, C = fam.coeff_A(p, i), fam.coeff_C(p, i)
        expected = {1: a * A, 0: -a * (A + C) + b, -1: a * C if i else 0}
        if any(rel.coeff(i, e) != expected[e] for e in rel.support):
            return False
    return True


def test_criterion_04_composition():
    rng = random.Random(4)
    failures, composed = [], 0
    for kind in ("B2", "B2p"):
        for entry in catalog.all_relations(kind):
            for N in (3, 5):
                p = catalog.sample_parameters(entry, N, rng)
                rel = catalog.compose_parts(entry, p)
                composed += 1
                if not (verify_relation(rel).passed and same_up_to_scale(rel, catalog.instantiate(entry, p, "plus"))):
                    failures.append((entry.id, N))
    entry = catalog.get_entry("qRI")
    recurrence_ok = True
    for N in (2, 4, 6):
        p = catalog.sample_parameters(entry, N, rng)
        rel = compose_a2_to_b2(catalog.instantiate(entry, p, "plus"), catalog.instantiate(entry, p, "minus"))
        recurrence_ok &= rel.right == p and verify_relation(rel).passed and recurrence_up_to_normalization(rel, p)
    ok = not failures and recurrence_ok
    record_acceptance(4, ok, f"{composed} B2/B2' entries rebuilt from their A2 parts, failures={failures}; "
                             f"qRI plus then minus gives the recurrence: {recurrence_ok}")
    assert ok


def test_criterion_05_spectral():
    rng = random.Random(5)
    failures = []
    for rid in SPECTRAL_IDS:
        entry = catalog.get_entry(rid)
        for N in (2, 3, 4):
            p = catalog.sample_parameters(entry, N, rng)
            for name, report in (("transform", spectral.verify_christoffel_geronimus(p, entry.shift_map(), rid)),
                                 ("printed nu", spectral.verify_printed_nu(entry, p))):
                if not report.passed:
                    failures.append((rid, N, name))
    for rid in spectral.MEASURE_RELATIONS:
        entry = catalog.get_entry(rid)
        for N in (1, 2, 3, 4):
            if not spectral.verify_measure_identity(rid, catalog.sample_parameters(entry, N, rng)).passed:
                failures.append((rid, N, "measure"))
    chi_failures = sorted(rid for rid in SPECTRAL_IDS
                          if spectral.verify_geronimus_chi(catalog.get_entry(rid),
                                                           catalog.sample_parameters(catalog.get_entry(rid), 4, rng))
                          .status == "fail")
    ok = not failures and sorted(spectral.MEASURE_RELATIONS) == ["RI", "RII", "qRI", "qRII"]
    record_acceptance(5, ok, f"monic checks, a_i, c_i a_i, printed nu for {len(SPECTRAL_IDS)} entries and "
                             f"4 measure identities at N<=4, failures={failures}; "
                             f"printed chi fails the Geronimus condition for {chi_failures} (reported separately)")
    assert ok


def test_criterion_06_dual_evaluation():
    rng = random.Random(6)
    failures = []
    for tag in fam.ASKEY_TAGS:
        for N in range(1, 7):
            for _ in range(5):
                p = fam.random_parameters(tag, N, rng)
                if fam.series_table(p) != fam.recurrence_table(p):
                    failures.append((tag, N, "series"))
                if tag in ("qR", "R") and any(v != 0 for v in fam.orthogonality_sums(p).values()):
                    failures.append((tag, N, "orthogonality"))
    for tag in ("BI", "CBI"):
        for N in range(1, 7):
            for _ in range(5):
                if banita.recurrence_mismatches(fam.random_parameters(tag, N, rng)):
                    failures.append((tag, N, "closed form"))
    ok = not failures
    record_acceptance(6, ok, f"series equals recurrence for {len(fam.ASKEY_TAGS)} families plus BI and CBI, "
                             f"5 samples, N=1..6; qR and R orthogonality; failures={failures}")
    assert ok


def test_criterion_07_bannai_ito():
    rng = random.Random(7)
    failures, checked = [], 0
    for entry in catalog.list_relations("BI") + catalog.list_relations("CBI"):
        for N in range(3, 7):
            if not catalog.applicable_N(entry, N):
                continue
            for _ in range(3):
                checked += 1
                if not banita.verify_bi_relation(entry, banita.random_bi_parameters(entry, N, rng)).passed:
                    failures.append((entry.id, N))
    samples = [fam.random_parameters("BI", N, rng) for N in (5, 6) for _ in range(3)]
    search_result = banita.bi_a2_nonexistence(samples)
    b2_chains = 0
    entries = catalog.list_relations("BI") + catalog.list_relations("CBI")
    for first, d1, second, d2 in banita.composable_pairs(entries, 5):
        try:
            p = banita.random_chain_parameters(first, d1, second, d2, 5, rng)
        except AskeyError:
            continue
        rel = banita.compose_bi(first, d1, second, d2, p)
        if rel.kind == "B2" and verify_relation(rel).passed:
            b2_chains += 1
    ok = not failures and search_result["survivors"] == ["identity"] and b2_chains > 0
    record_acceptance(7, ok, f"B1-B5, I1-I5 on {checked} samples over N=3..6, failures={failures}; "
                             f"A2 search over {search_result['tested']} BI shifts leaves {search_result['survivors']}; "
                             f"{b2_chains} composed B/I pairs pass as B2-type")
    assert ok


def test_criterion_08_generalized():
    rng = random.Random(8)
    failures, checked = [], 0
    for entry in catalog.list_relations("G"):
        for N in range(2, 6):
            drawn = 0
            while drawn < 3:
                p = catalog.sample_parameters(entry, N, rng)
                if p["z"] == p["q"] or p["delta"] == p["beta"] * p["gamma"] * p["q"]:
                    continue
                drawn += 1
                checked += 1
                if not catalog.verify_entry(entry, p).passed:
                    failures.append((entry.id, N))
    reduction_failures = []
    for N in range(1, 7):
        qr = fam.random_parameters("qR", N, rng)
        g = fam.ParameterSet.make("G", N, qr.named, delta=qr["beta"] * qr["gamma"] * qr["q"], z=qr["q"])
        if fam.series_table(g) != fam.series_table(qr):
            reduction_failures.append(N)
    ok = not failures and not reduction_failures
    record_acceptance(8, ok, f"GI-GVI on {checked} non-balanced samples over N=2..5, failures={failures}; "
                             f"reduction to q-Racah failures={reduction_failures}")
    assert ok


def test_criterion_09_classification():
    results = {}
    for tag in ("K", "dqK", "aqK"):
        report = search.classify(search.SearchSpace.default(tag))
        published = {e.id for e in catalog.list_relations(tag, "A2")} | {"identity"}
        results[tag] = (set(report["matched"]) == published and not report["unmatched"]
                        and not report["missing"] and not report["undecided"])
    ok = all(results.values())
    record_acceptance(9, ok, f"classification exact with zero unmatched: {results}")
    assert ok


def test_criterion_10_perturbation():
    rng = random.Random(10)
    counts, failures = {}, []
    for kind in ("A2", "B2", "B2p", "BI", "G"):
        counts[kind] = 0
        for entry in catalog.all_relations(kind):
            N = next(n for n in (4, 5) if catalog.applicable_N(entry, n))
            p = catalog.sample_parameters(entry, N, rng)
            for direction in entry.directions:
                rel = catalog.instantiate(entry, p, direction)
                for target in ["lambda", *rel.support]:
                    bad = rel.scaled(2) if target == "lambda" else rel.scaled(2, "coeff", target)
                    report = verify_relation(bad)
                    counts[kind] += 1
                    if report.status != "fail" or not report.residual_locus:
                        failures.append((entry.id, direction, target))
    ok = not failures and all(counts.values())
    record_acceptance(10, ok, f"doubling one coefficient fails with a residual locus: {counts}, "
                              f"undetected={failures}")
    assert ok

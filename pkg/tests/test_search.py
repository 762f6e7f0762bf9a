import pytest

from askey_contiguity import catalog, search
from askey_contiguity import families as fam
from askey_contiguity.constraints import ShiftMap
from askey_contiguity.errors import InsufficientSamples, SingularParameters

ASKEY_A2 = {tag: {e.id for e in catalog.list_relations(tag, "A2")} for tag in fam.ASKEY_TAGS}


class TestEnumeration:
    def test_krawtchouk_space(self):
        candidates = list(search.enumerate_shifts(search.SearchSpace.default("K")))
        assert candidates[0].shift.is_identity
        assert len(candidates) == 75
        assert len({c.shift for c in candidates}) == 75
        shifts = {c.shift for c in candidates}
        for rid in ("KI", "KII"):
            assert catalog.get_entry(rid).shift_map() in shifts

    def test_forced_parameter_not_enumerated(self):
        space = search.SearchSpace.default("qR")
        f = fam.get_family("qR")
        assert f.forced not in space.free_parameters()
        assert "q" not in space.free_parameters()

    def test_movable_override(self):
        space = search.SearchSpace("H", movable=("alpha",))
        assert space.free_parameters() == ("alpha",)

    def test_identity_label(self):
        assert search.Candidate(ShiftMap.identity("K")).label == "identity"


@pytest.mark.parametrize("tag", ["K", "dqK", "aqK"])
def test_small_families_exact(tag):
    report = search.classify(search.SearchSpace.default(tag))
    assert set(report["matched"]) == ASKEY_A2[tag] | {"identity"}
    assert report["unmatched"] == [] and report["missing"] == [] and report["undecided"] == []


@pytest.mark.parametrize("tag", fam.ASKEY_TAGS)
def test_every_askey_family_exact(tag):
    report = search.classify(search.SearchSpace.default(tag))
    summary = search.summarize(report)
    assert summary.exact, (summary.unmatched, summary.missing, summary.undecided)
    assert sorted(summary.matched) == sorted(ASKEY_A2[tag] | {"identity"})
    assert all(record["confirmed"] == "pass" for record in report["discovered"])


def test_deterministic():
    space = search.SearchSpace.default("qK")
    assert search.classify(space) == search.classify(space)


def test_seed_recorded():
    report = search.classify(search.SearchSpace.default("K"), seed=3)
    assert report["seed"] == 3
    assert report["space"]["family"] == "K"


def test_bannai_ito_only_identity():
    report = search.classify(search.SearchSpace.default("BI"))
    assert report["matched"] == ["identity"] and report["unmatched"] == []


def test_insufficient_samples(monkeypatch):
    def refuse(*args, **kwargs):
        raise SingularParameters("no admissible draw")

    monkeypatch.setattr(fam, "random_parameters", refuse)
    with pytest.raises(InsufficientSamples):
        search.draw_samples(search.SearchSpace.default("K"))


class TestVerdict:
    def test_catalog_shift_passes(self):
        space = search.SearchSpace.default("K")
        samples = search.draw_samples(space)
        cand = search.Candidate(catalog.get_entry("KI").shift_map())
        assert search.verdict("A2", cand, samples) == "pass"
        assert search.survives("A2", cand, samples)

    def test_unknown_shift_fails(self):
        space = search.SearchSpace.default("K")
        samples = search.draw_samples(space)
        cand = search.Candidate(ShiftMap.make("K", 1, 2))
        assert search.verdict("A2", cand, samples) == "fail"

    def test_span_test_agrees(self):
        space = search.SearchSpace.default("qH")
        samples = search.draw_samples(space)
        for cand in search.enumerate_shifts(space):
            if search.verdict("A2", cand, samples) in ("pass", "fail"):
                expected = search.verdict("A2", cand, samples) == "pass"
                assert all(search.a2_span_test(cand, p) for p in samples) == expected, cand.label

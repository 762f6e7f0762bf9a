import itertools
import random

import pytest

from askey_contiguity import catalog
from askey_contiguity import families as fam
from askey_contiguity.constraints import (
    ShiftContext,
    ShiftMap,
    check_constraints,
    constraint_values,
    parse_nbar,
    shift_scalars,
)
from askey_contiguity.errors import InvalidShift
from askey_contiguity.families import ASKEY_TAGS
from askey_contiguity.scalar import rational

from .conftest import make
from .oracle import span_exists


class TestShiftMap:
    def test_identity(self):
        s = ShiftMap.identity("qR")
        assert s.is_identity
        p = make("qR", 3, alpha="1/3", beta="1/7", gamma="1/11", q="2/5")
        assert s.apply(p) == p

    def test_json_round_trip(self):
        for entry in catalog.all_relations():
            if entry.kind in ("BI",):
                continue
            s = entry.shift_map()
            assert ShiftMap.from_json(entry.family, s.to_json()) == s

    def test_inverse(self, rng):
        entry = catalog.get_entry("qRI")
        p = fam.random_parameters("qR", 4, rng)
        s = entry.shift_map()
        assert s.inverse().apply(s.apply(p)) == p

    def test_negative_N_rejected(self):
        s = ShiftMap.make("K", 0, -1)
        with pytest.raises(InvalidShift):
            s.apply(make("K", 0, alpha="1/2"))

    def test_parse_nbar(self):
        assert [parse_nbar(t) for t in ("N", "N-1", "N+2")] == [0, -1, 2]
        with pytest.raises(InvalidShift):
            parse_nbar("2N")


class TestScalars:
    def test_krawtchouk_identity(self):
        p = make("K", 3, alpha="1/2")
        assert shift_scalars("K", ShiftMap.identity("K"), p) == (1, 0)

    def test_q_racah_eta_zero(self):
        p = make("qR", 3, alpha="1/3", beta="1/7", gamma="1/11", q="2/5")
        for dN in (-1, 0, 1):
            assert shift_scalars("qR", ShiftMap.make("qR", 0, dN), p) == (1, 0)

    def test_q_racah_eta_minus_one_zeta(self):
        p = make("qR", 3, alpha="1/3", beta="1/7", gamma="1/3", q="1/2")
        zeta, _ = shift_scalars("qR", ShiftMap.make("qR", -1, -1), p)
        assert zeta == 2

    @pytest.mark.parametrize("tag", ASKEY_TAGS + ("BI",))
    def test_lambda_matching_holds_for_every_candidate(self, tag, rng):
        """The (zeta, xi) pair makes lambda_x = zeta * lambdabar_{x+eta} - xi on the common grid."""
        p = fam.random_parameters(tag, 5, rng)
        for eta, dN in itertools.product((-1, 0, 1), (-2, -1, 0, 1, 2)):
            try:
                ctx = ShiftContext(p, ShiftMap.make(tag, eta, dN))
            except InvalidShift:
                continue
            assert all(r == 0 for r in ctx.lam_matching_residuals())


class TestA2Constraints:
    def test_identity_passes_with_zero(self):
        p = make("qR", 5, alpha="1/3", beta="1/7", gamma="1/11", q="2/5")
        report = check_constraints("A2", p, ShiftMap.identity("qR"))
        assert report.passed
        assert rational(report.extra["value"]) == 0

    def test_krawtchouk_KI_constant(self):
        p = make("K", 4, alpha="1/2")
        values = constraint_values("A2", p, catalog.get_entry("KI").shift_map())
        assert len(values) >= 3
        first = values[0][1]
        assert all(e1 == first and e2 == first for _, e1, e2 in values)

    def test_krawtchouk_non_relation_depends_on_i(self):
        p = make("K", 4, alpha="1/2")
        values = constraint_values("A2", p, ShiftMap.make("K", 0, 0, {"alpha": rational("1/3")}))
        assert values[0][1] != values[1][1]
        assert not check_constraints("A2", p, ShiftMap.make("K", 0, 0, {"alpha": rational("1/3")})).passed

    @pytest.mark.parametrize("kind", ["A2", "B2", "B2p"])
    def test_catalog_shifts_pass(self, kind, rng):
        for entry in catalog.all_relations(kind):
            p = catalog.sample_parameters(entry, 6, rng)
            assert check_constraints(kind, p, entry.shift_map()).status == "pass", entry.id

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            check_constraints("C3", make("K", 3, alpha="1/2"), ShiftMap.identity("K"))


@pytest.mark.parametrize("tag", ["K", "H", "qH", "dH"])
def test_a2_verdict_matches_span_oracle(tag):
    """Whenever the constraints decide, the decision agrees with a direct rank test done in sympy."""
    rng = random.Random(31)
    p = fam.random_parameters(tag, 5, rng)
    f = fam.get_family(tag)
    free = [n for n in f.params if n not in ("q", f.forced)]
    decided = 0
    for eta, dN in itertools.product((-1, 0, 1), (-1, 0, 1)):
        for moves in itertools.product((-1, 0, 1), repeat=len(free)):
            try:
                s = ShiftMap.make(tag, eta, dN, dict(zip(free, moves)))
                bar = s.apply(p)
                report = check_constraints("A2", p, s)
                if not fam.admissible(bar):
                    continue
            except InvalidShift:
                continue
            if report.status not in ("pass", "fail"):
                continue
            decided += 1
            assert report.passed == span_exists(p, bar, eta, (0, -1)), s.label()
    assert decided > 10

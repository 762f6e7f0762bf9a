import os
import subprocess
import sys
from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from askey_contiguity import scalar
from askey_contiguity.errors import InvalidBase, SingularSeries
from askey_contiguity.scalar import (
    SeriesSpec,
    fmt,
    hyp_auto,
    hyp_terminating,
    int_log,
    is_k_balanced,
    pochhammer,
    q_hyp_terminating,
    q_pochhammer,
    rational,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=9)
nonunit_q = small.filter(lambda q: q not in (0, 1, -1))


def fraction_pochhammer(a, k):
    return prod((a + j for j in range(k)), start=Fraction(1))


def fraction_q_pochhammer(a, q, k):
    return prod((1 - a * q**j for j in range(k)), start=Fraction(1))


def brute_hyp(top, bottom, z, n):
    return sum(
        fraction_pochhammer(Fraction(-n), k) * prod((fraction_pochhammer(a, k) for a in top), start=Fraction(1))
        * z**k / (prod((fraction_pochhammer(b, k) for b in bottom), start=Fraction(1)) * factorial(k))
        for k in range(n + 1)
    )


def brute_q_hyp(top, bottom, q, z, n):
    return sum(
        fraction_q_pochhammer(q**-n, q, k) * prod((fraction_q_pochhammer(a, q, k) for a in top), start=Fraction(1))
        * z**k / (prod((fraction_q_pochhammer(b, q, k) for b in bottom), start=Fraction(1))
                  * fraction_q_pochhammer(q, q, k))
        for k in range(n + 1)
    )


class TestRational:
    def test_parses_p_over_q(self):
        assert rational("3/7") == Fraction(3, 7)
        assert rational(" -2 ") == -2
        assert rational(Fraction(5, 4)) == Fraction(5, 4)

    @pytest.mark.parametrize("bad", ["0.5", "1e3", "", "abc"])
    def test_rejects_non_rational_strings(self, bad):
        with pytest.raises(ValueError):
            rational(bad)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            rational(0.5)

    @given(small)
    def test_fmt_round_trip(self, value):
        assert rational(fmt(value)) == value

    def test_check_base(self):
        for q in (0, 1, -1):
            with pytest.raises(InvalidBase):
                scalar.check_base(rational(q))
        scalar.check_base(rational("1/2"))


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(rational("2/3"), 0) == 1
        assert pochhammer(rational(0), 3) == 0
        assert pochhammer(rational(3), 2) == 12

    def test_q_examples(self):
        q = rational("1/3")
        assert q_pochhammer(rational("5/2"), q, 0) == 1
        for k in range(1, 4):
            assert q_pochhammer(rational(1), q, k) == 0
        assert q_pochhammer(rational(2), rational(2), 2) == 3

    @given(small, st.integers(0, 6))
    def test_matches_product(self, a, k):
        assert pochhammer(rational(a), k) == fraction_pochhammer(a, k)

    @given(small, nonunit_q, st.integers(0, 6))
    def test_q_matches_product(self, a, q, k):
        assert q_pochhammer(rational(a), rational(q), k) == fraction_q_pochhammer(a, q, k)


class TestSeries:
    def test_degree_zero(self):
        assert hyp_terminating(SeriesSpec.classical(0, [rational(3)], [rational(5)]), 0) == 1
        q = rational("2/5")
        assert q_hyp_terminating(SeriesSpec.basic(0, q, [rational(3)], [rational(5)], q), q, 0) == 1

    def test_krawtchouk_example(self):
        spec = SeriesSpec.classical(1, [rational(-1)], [rational(-2)], 2)
        assert hyp_terminating(spec, 1) == 0

    def test_top_one_truncates(self):
        q = rational("1/3")
        for i in range(5):
            spec = SeriesSpec.basic(i, q, [rational(1), rational(7)], [rational("2/9"), rational(5)], q)
            assert q_hyp_terminating(spec, q, i) == 1

    @given(st.lists(small, min_size=1, max_size=3), st.lists(small.filter(lambda b: b.denominator > 1 or b > 0),
                                                             min_size=1, max_size=3), small, st.integers(0, 5))
    @settings(max_examples=60)
    def test_matches_brute_sum(self, top, bottom, z, n):
        spec = SeriesSpec.classical(n, map(rational, top), map(rational, bottom), z)
        assert hyp_terminating(spec, n) == brute_hyp(top, bottom, z, n)

    @given(st.lists(small, min_size=2, max_size=2), st.lists(small.filter(lambda b: b not in (0, 1)),
                                                             min_size=2, max_size=2), nonunit_q, st.integers(0, 4))
    @settings(max_examples=60)
    def test_q_matches_brute_sum(self, top, bottom, q, n):
        qs = [q**k for k in range(-1, n + 1)]
        if any(b * t == 1 for b in bottom for t in qs):
            return
        spec = SeriesSpec.basic(n, rational(q), map(rational, top), map(rational, bottom), rational(q))
        assert q_hyp_terminating(spec, rational(q), n) == brute_q_hyp(top, bottom, q, q, n)

    @given(st.permutations([rational("1/3"), rational("-2/5"), rational("7/4")]))
    def test_top_permutation_invariance(self, top):
        base = hyp_terminating(SeriesSpec.classical(3, top, [rational("3/2"), rational(5), rational("9/7")]), 3)
        ref = hyp_terminating(SeriesSpec.classical(3, [rational("1/3"), rational("-2/5"), rational("7/4")],
                                                   [rational("3/2"), rational(5), rational("9/7")]), 3)
        assert base == ref

    def test_bottom_zero_raises(self):
        with pytest.raises(SingularSeries):
            hyp_terminating(SeriesSpec.classical(3, [rational(1)], [rational(-1)]), 3)

    def test_wrong_terminating_parameter(self):
        with pytest.raises(ValueError):
            hyp_terminating(SeriesSpec.classical(2, [], []), 3)

    def test_hyp_auto_picks_shortest(self):
        assert hyp_auto([rational(-1), rational(-3)], [rational("1/2")], rational(1)) == brute_hyp(
            [Fraction(-3)], [Fraction(1, 2)], Fraction(1), 1)
        with pytest.raises(SingularSeries):
            hyp_auto([rational("1/2")], [rational(3)])


class TestBalance:
    def test_q_racah_is_one_balanced(self):
        q, a, b, g, N = rational("1/2"), rational("1/3"), rational("1/5"), rational("1/7"), 4
        for i in range(N + 1):
            for x in range(N + 1):
                spec = SeriesSpec.basic(i, q, [a * b * q ** (i + 1), q**-x, g * q ** (x - N)],
                                        [a * q, b * g * q, q**-N], q)
                assert is_k_balanced(spec, q, i) == 1

    def test_argument_not_q(self):
        q = rational("1/2")
        spec = SeriesSpec.basic(1, q, [rational(3)], [rational(5)], rational(7))
        assert is_k_balanced(spec, q, 1) is None

    def test_generic_not_balanced(self):
        q = rational("1/2")
        spec = SeriesSpec.basic(2, q, [rational("3/7"), rational("2/9"), rational("5/11")],
                                [rational("13/3"), rational("1/19"), rational(4)], q)
        assert is_k_balanced(spec, q, 2) is None

    def test_int_log(self):
        q = rational("2/3")
        assert int_log(q**5, q) == 5
        assert int_log(q**-3, q) == -3
        assert int_log(rational("5/7"), q) is None


def test_fraction_backend_selectable():
    env = dict(os.environ, ASKEY_SCALAR_BACKEND="fraction")
    out = subprocess.run([sys.executable, "-c", "from askey_contiguity import scalar; print(scalar.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "fraction"

"""Oracle, bound checkers, complement identity, witness chains, APs.

Frozen values in this file come from direct enumeration of multiplicity
vectors done independently of the package (and for the witness chains,
from stepping through the constructions by hand).
"""

import pytest
from hypothesis import given, settings, strategies as st

from sumsetlab import (
    DomainError,
    GroundSet,
    SumParams,
    brute_force_sumset,
    check_complement_identity,
    check_direct_bound,
    check_inclusions_and_witnesses,
    generalized_sumset,
    is_arithmetic_progression,
)


# ===================== the oracle itself =====================


def test_oracle_frozen_values():
    assert brute_force_sumset(GroundSet.of([0, 1, 2]), SumParams(3, 2)).values == (
        1,
        2,
        3,
        4,
        5,
    )
    assert brute_force_sumset(GroundSet.of(range(5), 5), SumParams(3, 2)).values == (
        0,
        1,
        2,
        3,
        4,
    )
    assert brute_force_sumset(GroundSet.of([0, 1, 3]), SumParams(2, 1)).values == (
        1,
        3,
        4,
    )
    assert brute_force_sumset(GroundSet.of([0, 2]), SumParams(2, 2)).values == (0, 2, 4)


def test_oracle_rejects_h_above_rk():
    with pytest.raises(DomainError):
        brute_force_sumset(GroundSet.of([0, 1]), SumParams(5, 2))


class TestOracleAgreesWithEngine:
    @settings(max_examples=100, deadline=None)
    @given(
        xs=st.lists(st.integers(-12, 20), min_size=1, max_size=6, unique=True),
        data=st.data(),
    )
    def test_integers(self, xs, data):
        g = GroundSet.of(xs)
        r = data.draw(st.integers(1, 4), label="r")
        h = data.draw(st.integers(1, min(9, r * g.size)), label="h")
        params = SumParams(h, r)
        assert brute_force_sumset(g, params).values == generalized_sumset(g, params).values

    @settings(max_examples=100, deadline=None)
    @given(
        xs=st.lists(st.integers(0, 12), min_size=1, max_size=6, unique=True),
        p=st.sampled_from([5, 7, 11, 13]),
        data=st.data(),
    )
    def test_mod_p(self, xs, p, data):
        g = GroundSet.of(xs, p)
        r = data.draw(st.integers(1, 4), label="r")
        h = data.draw(st.integers(1, min(9, r * g.size)), label="h")
        params = SumParams(h, r)
        assert brute_force_sumset(g, params).values == generalized_sumset(g, params).values


# ===================== direct bound =====================


def test_direct_bound_tight_on_progression():
    report = check_direct_bound(GroundSet.of([0, 2, 4]), SumParams(3, 2))
    assert (report.cardinality, report.bound, report.slack) == (5, 5, 0)
    assert report.equality and report.verdict == "pass"


def test_direct_bound_positive_slack():
    report = check_direct_bound(GroundSet.of([0, 1, 2, 4, 8]), SumParams(3, 2))
    assert (report.cardinality, report.bound, report.slack) == (18, 11, 7)
    assert not report.equality


def test_direct_bound_mod_p_capped():
    report = check_direct_bound(GroundSet.of(range(5), 5), SumParams(3, 2))
    assert (report.cardinality, report.bound, report.slack) == (5, 5, 0)


def test_direct_bound_hypotheses_per_variant():
    # r > h is fine over the integers (extra cap is never exercised) ...
    report = check_direct_bound(GroundSet.of([0, 1, 4]), SumParams(2, 3))
    assert report.slack >= 0
    # ... but the mod-p statement requires r <= h
    with pytest.raises(DomainError, match="r <= h"):
        check_direct_bound(GroundSet.of([0, 1, 4], 7), SumParams(2, 3))


def test_bound_report_record():
    record = check_direct_bound(GroundSet.of([0, 1, 2]), SumParams(2, 1)).to_record()
    assert record["kind"] == "direct"
    assert record["slack"] == record["cardinality"] - record["bound"]


# ===================== complement identity =====================


def test_complement_frozen():
    report = check_complement_identity(GroundSet.of([0, 1, 3, 7]), SumParams(5, 2))
    assert report.h_complement == 3
    assert (report.cardinality, report.complement_cardinality) == (15, 15)
    assert report.equal


def test_complement_needs_room():
    with pytest.raises(DomainError):
        check_complement_identity(GroundSet.of([0, 1]), SumParams(4, 2))


class TestComplementProperty:
    @settings(max_examples=80, deadline=None)
    @given(
        xs=st.lists(st.integers(-10, 20), min_size=1, max_size=5, unique=True),
        data=st.data(),
    )
    def test_integers(self, xs, data):
        g = GroundSet.of(xs)
        r = data.draw(st.integers(1, 4), label="r")
        if r * g.size < 2:
            return
        h = data.draw(st.integers(1, r * g.size - 1), label="h")
        assert check_complement_identity(g, SumParams(h, r)).equal

    @settings(max_examples=80, deadline=None)
    @given(
        xs=st.lists(st.integers(0, 10), min_size=1, max_size=5, unique=True),
        p=st.sampled_from([5, 7, 11]),
        data=st.data(),
    )
    def test_mod_p(self, xs, p, data):
        g = GroundSet.of(xs, p)
        r = data.draw(st.integers(1, 4), label="r")
        if r * g.size == 1:
            return
        h = data.draw(st.integers(1, r * g.size - 1), label="h")
        assert check_complement_identity(g, SumParams(h, r)).equal


# ===================== inclusions and witness chains =====================


def _statuses(report):
    return {c.name: c.status for c in report.checks}


def test_witnesses_wide_eps1():
    report = check_inclusions_and_witnesses(GroundSet.of(range(5)), SumParams(3, 2))
    s = _statuses(report)
    assert s["split-inclusion"] == "pass"
    assert s["block-inclusion-wide"] == "pass"
    assert s["gap-witnesses-wide"] == "pass"
    assert s["block-inclusion-narrow"] == "not-applicable"
    assert report.verdict == "pass"


def test_witnesses_wide_eps2():
    report = check_inclusions_and_witnesses(GroundSet.of([0, 1, 2, 4, 9]), SumParams(5, 3))
    s = _statuses(report)
    assert s["block-inclusion-wide"] == "pass"
    assert s["gap-witnesses-wide"] == "pass"
    assert report.verdict == "pass"


def test_witnesses_narrow_minimal():
    # k = 2, h = 7, r = 5: m = 1, eps = 2, so m + eps > k and r - 1 > m + eps
    report = check_inclusions_and_witnesses(GroundSet.of([0, 1]), SumParams(7, 5))
    s = _statuses(report)
    assert s["block-inclusion-wide"] == "not-applicable"
    assert s["block-inclusion-narrow"] == "pass"
    assert s["gap-witnesses-narrow"] == "pass"
    assert report.verdict == "pass"


def test_witnesses_narrow_chain():
    # k = 3, h = 14, r = 6: m = 2, eps = 2; the hand-checked chain is
    # 10 < 11 < 12 < 13 with min bundle 13
    report = check_inclusions_and_witnesses(GroundSet.of([0, 1, 2]), SumParams(14, 6))
    s = _statuses(report)
    assert s["block-inclusion-narrow"] == "pass"
    assert s["gap-witnesses-narrow"] == "pass"
    item = next(c for c in report.checks if c.name == "gap-witnesses-narrow")
    assert "chain of 4 members" in item.detail
    assert "below min bundle 13" in item.detail


def test_witnesses_neither_case():
    # k = 2, h = 5, r = 3: m = 1, eps = 2; m + eps > k but r - 1 <= m + eps
    report = check_inclusions_and_witnesses(GroundSet.of([0, 1]), SumParams(5, 3))
    s = _statuses(report)
    assert s["split-inclusion"] == "pass"
    for name in (
        "block-inclusion-wide",
        "gap-witnesses-wide",
        "block-inclusion-narrow",
        "gap-witnesses-narrow",
    ):
        assert s[name] == "not-applicable"
    assert report.verdict == "pass"


def test_witnesses_eps_zero_all_na():
    report = check_inclusions_and_witnesses(GroundSet.of([0, 1, 2]), SumParams(4, 2))
    assert all(c.status == "not-applicable" for c in report.checks)
    assert report.verdict == "pass"


def test_witnesses_reject_modular_and_oversized():
    with pytest.raises(DomainError):
        check_inclusions_and_witnesses(GroundSet.of([0, 1], 5), SumParams(2, 1))
    with pytest.raises(DomainError):
        check_inclusions_and_witnesses(GroundSet.of([0, 1]), SumParams(9, 2))


class TestWitnessProperty:
    @settings(max_examples=80, deadline=None)
    @given(
        xs=st.lists(st.integers(-8, 20), min_size=2, max_size=6, unique=True),
        data=st.data(),
    )
    def test_never_fails(self, xs, data):
        g = GroundSet.of(xs)
        r = data.draw(st.integers(1, 6), label="r")
        h = data.draw(st.integers(1, min(14, r * g.size)), label="h")
        report = check_inclusions_and_witnesses(g, SumParams(h, r))
        assert report.verdict == "pass", [c for c in report.checks if c.status == "fail"]


# ===================== AP detection =====================


def test_ap_integers():
    assert is_arithmetic_progression(GroundSet.of([7]))
    assert is_arithmetic_progression(GroundSet.of([1, 10]))
    assert is_arithmetic_progression(GroundSet.of([3, 7, 11, 15]))
    assert not is_arithmetic_progression(GroundSet.of([0, 1, 3]))


def test_ap_mod_p():
    assert is_arithmetic_progression(GroundSet.of([0, 1, 2, 7, 8], 13))  # d = 7
    assert is_arithmetic_progression(GroundSet.of([0, 5, 10, 2, 7], 13))  # d = 5
    assert is_arithmetic_progression(GroundSet.of([4, 9], 11))
    assert not is_arithmetic_progression(GroundSet.of([0, 1, 2, 3, 5], 13))


def test_ap_mod_p_full_set():
    assert is_arithmetic_progression(GroundSet.of(range(5), 5))

from itertools import combinations

import pytest

from sumgaps import (
    ConstructionPlan,
    ElementSeq,
    InfeasibleBaseError,
    OutOfRangeError,
    PlanCase,
    UnsupportedB1Error,
    UsageError,
    base_segment,
    brute_force_sumset,
    derive_b,
    gaps,
    plan_construction,
    realize,
    sumset_of,
    verify_chain,
)


class TestBaseSegment:
    @pytest.mark.parametrize(
        "b1,expected",
        [(2, (1,)), (4, (1, 2)), (7, (1, 2, 3)), (8, (1, 2, 4)), (11, (1, 2, 3, 4)), (12, (1, 2, 3, 5))],
    )
    def test_known_segments(self, b1, expected):
        assert base_segment(b1).elements == expected

    @pytest.mark.parametrize("b1", [3, 5, 6, 9, 10])
    def test_infeasible_values(self, b1):
        with pytest.raises(InfeasibleBaseError):
            base_segment(b1)

    def test_feasibility_matches_subset_enumeration(self):
        # Ground truth: try every subset of [1, b1 - 1] outright.
        for b1 in range(2, 13):
            vals = range(1, b1)
            oracle = any(
                brute_force_sumset(ElementSeq.of(c)) == set(range(b1))
                for r in range(b1)
                for c in combinations(vals, r)
            )
            try:
                seg = base_segment(b1)
            except InfeasibleBaseError:
                assert not oracle
            else:
                assert oracle
                assert brute_force_sumset(seg) == set(range(b1))

    def test_segment_is_lexicographically_smallest(self):
        for b1 in (8, 12, 13):
            seg = base_segment(b1).elements
            vals = range(1, b1)
            solutions = sorted(
                c
                for r in range(b1)
                for c in combinations(vals, r)
                if brute_force_sumset(ElementSeq.of(c)) == set(range(b1))
            )
            assert seg == solutions[0]

    def test_chain_verifier_accepts_output(self):
        for b1 in [2, 4, 7, 8] + list(range(11, 30)):
            report = verify_chain(base_segment(b1), b1)
            assert report.passed
            assert report.chain[-1] == b1 - 1

    def test_rejects_b1_below_two(self):
        with pytest.raises(UsageError):
            base_segment(1)


class TestPlanConstruction:
    def test_low_range(self):
        plan = plan_construction(11, 38)
        assert plan.case_id is PlanCase.RANGE_LOW
        assert (plan.m, plan.j, plan.l) == (0, 0, 0)
        assert plan.head == (12, 13, 14)

    def test_mid_range_balances_head(self):
        plan = plan_construction(11, 49)
        assert plan.case_id is PlanCase.RANGE_MID_J
        assert (plan.m, plan.j, plan.l) == (11, 1, 9)
        assert plan.head == (12, 14, 24)

    def test_high_range_special_value(self):
        plan = plan_construction(11, 65)
        assert plan.case_id is PlanCase.RANGE_HIGH_SPECIAL
        assert plan.m == 27
        assert plan.head == (12, 13, 15, 26)

    def test_high_range_generic(self):
        plan = plan_construction(11, 60)
        assert plan.case_id is PlanCase.RANGE_HIGH_GENERIC
        assert plan.m == 22
        assert plan.head == (12, 13, 14, 22)

    @pytest.mark.parametrize("b1", [2, 3, 5, 6, 9, 10])
    def test_unsupported_b1(self, b1):
        with pytest.raises(UnsupportedB1Error):
            plan_construction(b1, 3 * b1 + 5)

    @pytest.mark.parametrize("b1,b2", [(4, 16), (4, 35), (11, 37), (11, 77)])
    def test_b2_outside_range(self, b1, b2):
        with pytest.raises(OutOfRangeError):
            plan_construction(b1, b2)

    def test_head_always_starts_after_b1(self):
        for b1 in (4, 7, 8, 11, 12):
            for b2 in range(3 * b1 + 5, 6 * b1 + 11):
                plan = plan_construction(b1, b2)
                assert plan.head[0] == b1 + 1
                assert list(plan.head) == sorted(plan.head)

    def test_plan_invariants_enforced(self):
        with pytest.raises(UsageError):
            ConstructionPlan(b1=11, b2=38, m=5, case_id=PlanCase.RANGE_LOW,
                             j=0, l=5, head=(12, 13, 19))


class TestRealize:
    def test_tail_stops_at_horizon(self):
        plan = plan_construction(11, 38)
        assert realize(plan, 100).elements == (1, 2, 3, 4, 12, 13, 14)
        assert realize(plan, 500).elements == (1, 2, 3, 4, 12, 13, 14, 196)

    def test_small_b1(self):
        assert realize(plan_construction(4, 17), 100).elements == (1, 2, 5, 6, 7, 49)

    def test_horizon_below_minimum_rejected(self):
        plan = plan_construction(11, 38)
        with pytest.raises(UsageError):
            realize(plan, 49)

    def test_missing_base_propagates(self):
        # A hand-built plan can name a b1 without a base segment.
        plan = ConstructionPlan(b1=9, b2=32, m=0, case_id=PlanCase.RANGE_LOW,
                                j=0, l=0, head=(10, 11, 12))
        with pytest.raises(InfeasibleBaseError):
            realize(plan, 100)


class TestDeriveB:
    def test_first_three_exclusions(self):
        seq = realize(plan_construction(11, 38), 100)
        report = derive_b(seq, 60, exact=True)
        assert report.exclusions[:3] == (11, 38, 50)
        assert report.exact

    def test_special_case_window(self):
        seq = realize(plan_construction(11, 65), 100)
        report = derive_b(seq, 80)
        assert report.exclusions[:3] == (11, 65, 77)
        assert not report.exact

    def test_tiny_sequence(self):
        assert derive_b(ElementSeq.of([1]), 3).exclusions == (2, 3)


@pytest.mark.parametrize("b1", [4, 7, 8, 11, 12])
def test_first_three_gaps_match_prediction_across_b2(b1):
    for b2 in range(3 * b1 + 5, 6 * b1 + 11):
        b3 = b1 + b2 + 1
        plan = plan_construction(b1, b2)
        seq = realize(plan, b3)
        assert derive_b(seq, b3, exact=True).exclusions == (b1, b2, b3)


@pytest.mark.parametrize("b1", [4, 7, 11])
def test_head_window_has_exactly_two_holes(b1):
    # Sums of base + head must fill [0, 4*b1 + 5 + m] except {b1, b2}.
    for b2 in range(3 * b1 + 5, 6 * b1 + 11):
        plan = plan_construction(b1, b2)
        prefix = ElementSeq.of(list(base_segment(b1)) + list(plan.head))
        window = 4 * b1 + 5 + plan.m
        assert gaps(sumset_of(prefix, window), window) == [b1, b2]


def test_tail_elements_sit_beyond_prior_total():
    seq = realize(plan_construction(11, 49), 10 ** 6)
    plan_len = len(base_segment(11)) + len(plan_construction(11, 49).head)
    elems = list(seq)
    assert len(elems) > plan_len  # tail nonempty at this horizon
    for i in range(plan_len, len(elems)):
        a = elems[i]
        assert a > sum(elems[:i]) + 1
        report = derive_b(seq, a, exact=True)
        assert a - 1 in report.exclusions

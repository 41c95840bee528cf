"""Closed-form evaluators: pinned values, scan oracles, cross identities."""

from __future__ import annotations

from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqcolor.closedform import (
    ProductSpec,
    equitable_number_multipartite,
    equitable_number_product,
    equitable_threshold_multipartite,
    equitable_threshold_product,
    h_multipartite,
    h_star_product,
    lin_chang_bound,
    multipartite_colorable,
    product_colorable,
)
from eqcolor.errors import OutOfScopeError
from eqcolor.partitions import ceil_div, q_partition_exists


def h_scan_fraction(sizes) -> int:
    """Independent h oracle: literal max-scan with exact rationals."""
    best = 2
    for k in range(2, min(sizes) + 2):
        if all(Fraction(s, k - 1) >= ceil(Fraction(s, k)) for s in sizes):
            best = k
    return best


def multipartite_feasible_brute(sizes, k: int) -> bool:
    """Independent feasibility oracle: try every common class size q."""
    total = sum(sizes)
    if k >= total:
        return True
    for q in range(1, max(sizes) + 1):
        if any(not (q <= s and q_partition_exists(s, q)) for s in sizes):
            continue
        lo = sum(ceil_div(s, q + 1) for s in sizes)
        hi = sum(s // q for s in sizes)
        if lo <= k <= hi:
            return True
    return False


SIZES_CASES = [
    (1,), (5,), (1, 1), (1, 3), (3, 3), (2, 2), (4, 4), (10, 10),
    (3, 6), (4, 8), (5, 10), (2, 5, 7), (3, 3, 3), (5, 5, 10), (1, 2, 9),
]


class TestHMultipartite:
    def test_pinned_examples(self):
        assert h_multipartite((3, 3)) == 4
        assert h_multipartite((1, 3)) == 2
        assert h_multipartite((1, 1)) == 2
        assert h_multipartite((5,)) == 6
        # the scanned set can have interior gaps; the literal max matters
        assert h_multipartite((10, 10)) == 11
        assert h_multipartite((6, 10)) == 6

    @pytest.mark.parametrize("sizes", SIZES_CASES)
    def test_matches_fraction_scan(self, sizes):
        assert h_multipartite(sizes) == h_scan_fraction(sizes)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            h_multipartite(())


class TestMultipartiteNumber:
    def test_pinned_examples(self):
        assert equitable_number_multipartite((3, 3)) == 2
        assert equitable_number_multipartite((1, 3)) == 3
        assert equitable_number_multipartite((5,)) == 1
        assert equitable_number_multipartite((10, 10)) == 2

    @pytest.mark.parametrize("sizes", SIZES_CASES)
    def test_is_least_feasible_count(self, sizes):
        value = equitable_number_multipartite(sizes)
        assert multipartite_feasible_brute(sizes, value)
        assert all(
            not multipartite_feasible_brute(sizes, k) for k in range(1, value)
        )


class TestMultipartiteColorable:
    @pytest.mark.parametrize("sizes", SIZES_CASES)
    def test_matches_brute(self, sizes):
        for k in range(1, sum(sizes) + 3):
            assert multipartite_colorable(sizes, k) == multipartite_feasible_brute(
                sizes, k
            ), (sizes, k)

    def test_k_above_vertex_count(self):
        assert multipartite_colorable((3, 3), 7) is True
        assert multipartite_colorable((3, 3), 100) is True

    def test_domain(self):
        with pytest.raises(ValueError):
            multipartite_colorable((3, 3), 0)


class TestMultipartiteThreshold:
    def test_pinned_examples(self):
        # (3,3): three classes of exactly 2 cannot tile two parts of 3,
        # so the threshold sits above the chromatic number 2.
        assert equitable_threshold_multipartite((3, 3)) == 4
        assert equitable_threshold_multipartite((1, 3)) == 3
        assert equitable_threshold_multipartite((5,)) == 1
        assert equitable_threshold_multipartite((4, 4)) == 4

    @pytest.mark.parametrize("sizes", SIZES_CASES)
    def test_is_true_threshold(self, sizes):
        t = equitable_threshold_multipartite(sizes)
        total = sum(sizes)
        assert all(
            multipartite_feasible_brute(sizes, k) for k in range(t, total + 2)
        )
        if t > 1:
            assert not multipartite_feasible_brute(sizes, t - 1)

    def test_dominates_number(self):
        for sizes in SIZES_CASES:
            assert equitable_threshold_multipartite(
                sizes
            ) >= equitable_number_multipartite(sizes)


class TestLinChangBound:
    def test_pinned_examples(self):
        assert lin_chang_bound(3, 3) == 3
        assert lin_chang_bound(2, 3) == 2
        for n in range(1, 12):
            assert lin_chang_bound(1, n) == ceil_div(n, 2)

    def test_domain(self):
        with pytest.raises(ValueError):
            lin_chang_bound(4, 3)
        with pytest.raises(ValueError):
            lin_chang_bound(0, 3)


class TestNumberProduct:
    def test_pinned_examples(self):
        assert equitable_number_product(ProductSpec((1, 1), 3))[0] == 2
        assert equitable_number_product(ProductSpec((1, 2), 3))[0] == 3
        assert equitable_number_product(ProductSpec((1, 1, 1), 3))[0] == 3

    def test_identity_with_multipartite_number(self, standard_specs):
        for spec in standard_specs:
            value, h = equitable_number_product(spec)
            assert value == equitable_number_multipartite(spec.blown_sizes)
            assert h == h_multipartite(spec.blown_sizes)

    def test_out_of_scope(self):
        with pytest.raises(OutOfScopeError):
            equitable_number_product(ProductSpec((3, 3), 2))

    def test_single_part_is_one(self):
        # edgeless products: the formula must collapse to a single class
        for m1 in range(1, 7):
            for n in range(m1, 31 // m1 + 1):
                if m1 > n:
                    continue
                assert equitable_number_product(ProductSpec((m1,), n))[0] == 1


class TestHStarProduct:
    def test_pinned_examples(self):
        assert h_star_product(ProductSpec((1, 1), 4)) == 5
        assert h_star_product(ProductSpec((1, 1), 3)) == 4
        # single part: the raw scan stops at the first missing t-partition
        assert h_star_product(ProductSpec((1,), 5)) == 3

    def test_scan_floor(self):
        for spec in [ProductSpec((1, 1), 5), ProductSpec((2, 2), 4)]:
            assert h_star_product(spec) >= spec.m + 2

    def test_out_of_scope(self):
        with pytest.raises(OutOfScopeError):
            h_star_product(ProductSpec((2, 2), 3))


class TestThresholdProduct:
    def test_pinned_examples(self):
        rep = equitable_threshold_product(ProductSpec((1, 1, 1), 3))
        assert (rep.chi_eq_star, rep.case) == (3, "Case1")
        rep = equitable_threshold_product(ProductSpec((1, 1), 4))
        assert (rep.chi_eq_star, rep.case, rep.h_star) == (2, "Case2", 5)
        rep = equitable_threshold_product(ProductSpec((1, 1), 2))
        assert (rep.chi_eq_star, rep.case) == (2, "Case1")
        assert rep.condition_trace["sum_floor_lt"] is True

    def test_single_part_threshold_is_one(self):
        for n in (1, 2, 5):
            rep = equitable_threshold_product(ProductSpec((1,), n))
            assert rep.chi_eq_star == 1
            rep = equitable_threshold_product(ProductSpec((2,), max(2, n)))
            assert rep.chi_eq_star == 1

    def test_ordering_chain(self, standard_specs):
        for spec in standard_specs:
            rep = equitable_threshold_product(spec)
            assert rep.chi_eq <= rep.chi_eq_star <= rep.lin_chang_bound

    def test_ceiling_reading_is_vacuous(self, standard_specs):
        # sum of ceilings never undershoots the ceiling of the sum
        for spec in standard_specs:
            rep = equitable_threshold_product(spec)
            assert rep.condition_trace["sum_ceil_lt"] is False

    @given(
        st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4),
        st.integers(min_value=1, max_value=9),
    )
    @settings(deadline=None, max_examples=300)
    def test_matches_interval_characterization(self, parts, n):
        # product feasibility: the spanned complete-graph product handles
        # k >= ceil(mn/(m+1)); below that, classes live in blocks.
        m = sum(parts)
        if m > n:
            return
        spec = ProductSpec(tuple(parts), n)
        sizes = spec.blown_sizes
        bound = lin_chang_bound(m, n)

        def feasible(k):
            if len(parts) == 1:
                return True
            return k >= bound or multipartite_feasible_brute(sizes, k)

        rep = equitable_threshold_product(spec)
        total = m * n
        infeasible = [k for k in range(1, total + 1) if not feasible(k)]
        assert rep.chi_eq_star == (max(infeasible) + 1 if infeasible else 1)
        assert rep.chi_eq == min(k for k in range(1, total + 1) if feasible(k))
        for k in range(1, total + 1):
            assert product_colorable(spec, k) == feasible(k)

    def test_reading_parameter(self):
        spec = ProductSpec((1, 1), 2)
        floor = equitable_threshold_product(spec, "floor")
        ceiling = equitable_threshold_product(spec, "ceiling")
        # (ii) also fires here, so both land in Case1
        assert floor.case == ceiling.case == "Case1"
        with pytest.raises(ValueError):
            equitable_threshold_product(spec, "round")

    def test_out_of_scope(self):
        with pytest.raises(OutOfScopeError):
            equitable_threshold_product(ProductSpec((2, 2), 3))


class TestReportSchema:
    def test_json_keys(self):
        spec = ProductSpec((1, 2), 3)
        payload = equitable_threshold_product(spec).to_json_dict(spec)
        assert set(payload) == {
            "parts",
            "n",
            "chi_eq",
            "chi_eq_star",
            "h",
            "h_star",
            "case",
            "lin_chang_bound",
        }
        assert payload["parts"] == [1, 2]
        assert payload["chi_eq"] == 3 and payload["chi_eq_star"] == 3


class TestChenLihYanIdentity:
    def test_all_ones_parts(self):
        for m in range(1, 9):
            for n in range(m, 9):
                spec = ProductSpec((1,) * m, n)
                assert equitable_number_product(spec)[0] == min(m, n)

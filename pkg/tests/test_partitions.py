from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import (
    all_overpartitions,
    c_condition,
    colored_by_definition,
    d_condition,
    overpartition_filter_count,
    runs_formula_count,
)
from qpart.partitions import (
    Color,
    ColoredPartition,
    Overpartition,
    PreconditionError,
    build_xq_table,
    count_2crr,
    count_2crr_no_red1,
    count_2crr_table,
    count_C,
    count_C_table,
    count_D,
    enumerate_2crr,
    enumerate_D,
    enumerate_overpartitions,
    is_valid_2crr,
    is_valid_C,
    is_valid_D,
    parse_colored,
    parse_overpartition,
    refined_count_2crr,
)

B, R = Color.BLACK, Color.RED


def as_oracle_set(parts):
    return {frozenset((v, "b" if c is B else "r") for v, c in p.parts) for p in parts}


class TestValidity:
    def test_mixed_color_run(self):
        assert is_valid_2crr(ColoredPartition.of((3, B), (2, R), (1, B)))

    def test_same_color_gap_one(self):
        assert not is_valid_2crr(ColoredPartition.of((3, B), (2, B)))

    def test_value_in_both_colors(self):
        assert not is_valid_2crr(ColoredPartition.of((2, B), (2, R)))

    def test_unsorted(self):
        with pytest.raises(PreconditionError):
            is_valid_2crr(ColoredPartition.of((1, B), (3, B)))

    def test_empty(self):
        assert is_valid_2crr(ColoredPartition())


class TestEnumerate:
    def test_weight_three(self):
        got = {str(p) for p in enumerate_2crr(3)}
        assert got == {"3", "3'", "2,1'", "2',1"}

    def test_empty(self):
        assert enumerate_2crr(0) == [ColoredPartition()]
        assert enumerate_2crr(0, 5) == [ColoredPartition()]

    @pytest.mark.parametrize("n", range(0, 13))
    @pytest.mark.parametrize("lo", [1, 2, 3])
    def test_matches_definition_oracle(self, n, lo):
        parts = enumerate_2crr(n, lo)
        assert len(parts) == len(set(parts))
        assert as_oracle_set(parts) == colored_by_definition(n, lo)

    def test_canonical_order(self):
        parts = enumerate_2crr(12)
        assert parts == sorted(parts, key=ColoredPartition.sort_key)

    @pytest.mark.parametrize("n", range(0, 26))
    def test_runs_formula(self, n):
        assert count_2crr(n, 1, method="enumerate") == runs_formula_count(n)
        assert count_2crr(n, 1) == runs_formula_count(n)

    @pytest.mark.parametrize("n", range(0, 26))
    def test_dp_matches_enumeration(self, n):
        for lo in (1, 2):
            assert count_2crr(n, lo) == count_2crr(n, lo, method="enumerate")
        assert count_2crr_no_red1(n) == count_2crr_no_red1(n, method="enumerate")

    def test_every_enumerated_partition_is_valid(self):
        for n in range(16):
            for p in enumerate_2crr(n):
                assert p.weight == n
                assert is_valid_2crr(p)


class TestCounts:
    def test_parts_at_least_two_values(self):
        assert count_2crr(5, 2) == 4
        assert count_2crr(10, 2) == 18

    def test_refined(self):
        assert refined_count_2crr(2, 6, 2) == 4
        assert refined_count_2crr(2, 6, 2, method="enumerate") == 4

    @pytest.mark.parametrize("n,expected", [(3, 3), (0, 1), (2, 2)])
    def test_no_red1(self, n, expected):
        assert count_2crr_no_red1(n) == expected
        assert count_2crr_no_red1(n, method="enumerate") == expected

    def test_color_swap_involution(self):
        for n in range(18):
            parts = enumerate_2crr(n)
            swapped = {p.swap_colors() for p in parts}
            assert swapped == set(parts)
            by_colors = Counter((p.count(R), p.count(B)) for p in parts)
            for (r, b), c in by_colors.items():
                assert by_colors[(b, r)] == c

    def test_alternation_within_runs(self):
        for n in range(18):
            for p in enumerate_2crr(n):
                for (v, c), (w, d) in zip(p.parts, p.parts[1:]):
                    if v - w == 1:
                        assert c is not d

    def test_count_table_prefix(self):
        assert count_2crr_table(6) == [1, 2, 2, 4, 6, 8, 12]

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            count_2crr(3, method="magic")


class TestXQTable:
    def test_entries(self):
        r1 = build_xq_table(1, 3, 6)
        r2 = build_xq_table(2, 3, 6)
        assert r1[0, 0] == 1 and r2[0, 0] == 1
        assert r1[1, 3] == 2
        assert r2[2, 6] == 4

    def test_dp_matches_enumeration(self):
        for j in (1, 2):
            assert build_xq_table(j, 8, 30, "dp") == build_xq_table(j, 8, 30)

    def test_shift_at_count_level(self):
        M, N = 8, 30
        r1 = build_xq_table(1, M, N)
        r2 = build_xq_table(2, M, N)
        for m in range(M + 1):
            for n in range(N + 1):
                assert r2[m, n] == (r1[m, n - m] if n >= m else 0)

    def test_recurrence(self):
        M, N = 8, 30
        r1 = build_xq_table(1, M, N, "dp")
        r2 = build_xq_table(2, M, N, "dp")
        for m in range(1, M + 1):
            for n in range(N + 1):
                rhs = r1[m - 1, n - m] + r2[m - 1, n - m] if n >= m else 0
                assert r1[m, n] - r2[m, n] == rhs


class TestOverpartitions:
    def test_enumeration_matches_oracle(self):
        for n in range(14):
            mine = {p.parts for p in enumerate_overpartitions(n)}
            assert mine == set(all_overpartitions(n))

    def test_overpartition_numbers(self):
        # 1, 2, 4, 8, 14, 24, 40, 64, 100, 154 from (-q)_inf/(q)_inf
        counts = [sum(1 for _ in enumerate_overpartitions(n)) for n in range(10)]
        assert counts == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154]

    def test_valid_D_examples(self):
        assert is_valid_D(Overpartition.of((2, True), (1, False)), 2, 2)
        assert not is_valid_D(Overpartition.of((2, False), (1, False)), 2, 2)
        assert not is_valid_D(Overpartition.of((2, True), (1, False)), 2, 1)

    def test_valid_D_bad_params(self):
        with pytest.raises(PreconditionError):
            is_valid_D(Overpartition(), 1, 2)

    def test_count_D_examples(self):
        assert count_D(2, 2, 3) == 4
        assert {str(p) for p in enumerate_D(2, 2, 3)} == {"3", "3~", "2~,1", "2~,1~"}
        assert count_D(2, 2, 6) == 12
        assert count_D(2, 1, 2) == 2

    @pytest.mark.parametrize("k,a", [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2)])
    def test_D_matches_filter_oracle(self, k, a):
        for n in range(13):
            expected = overpartition_filter_count(n, lambda p: d_condition(p, k, a))
            assert count_D(k, a, n) == expected
            for p in enumerate_D(k, a, n):
                assert is_valid_D(p, k, a)

    def test_count_C_examples(self):
        assert count_C(2, 2, 6) == 12
        assert count_C(2, 1, 3) == 3
        assert count_C(3, 2, 0) == 1

    @pytest.mark.parametrize("k,i", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 2), (4, 4)])
    def test_C_matches_filter_oracle(self, k, i):
        table = count_C_table(k, i, 12)
        for n in range(13):
            assert table[n] == overpartition_filter_count(n, lambda p: c_condition(p, k, i))
            assert table[n] == sum(
                1 for p in enumerate_overpartitions(n) if is_valid_C(p, k, i)
            )

    def test_D22_parts_distinct(self):
        for a in (1, 2):
            for n in range(20):
                for p in enumerate_D(2, a, n):
                    assert len(set(p.values)) == len(p.values)


class TestSerialization:
    def test_colored_round_trip(self):
        for p in enumerate_2crr(9):
            assert parse_colored(str(p)) == p

    def test_overpartition_round_trip(self):
        for n in range(8):
            for p in enumerate_overpartitions(n):
                assert parse_overpartition(p.format(ascii=True)) == p
                assert parse_overpartition(p.format(ascii=False)) == p

    def test_rendering(self):
        p = Overpartition.of((3, True), (1, False))
        assert p.format(ascii=True) == "3~,1"
        assert p.format(ascii=False) == "3̅,1"
        assert str(ColoredPartition.of((3, B), (2, R), (1, B))) == "3,2',1"
        assert str(ColoredPartition()) == "empty"


@given(st.sets(st.integers(1, 30), max_size=8), st.data())
def test_random_colorings_validity(values, data):
    ordered = sorted(values, reverse=True)
    colors = [data.draw(st.sampled_from([B, R])) for _ in ordered]
    p = ColoredPartition(tuple(zip(ordered, colors)))
    expected = all(
        a - b >= 2
        for c in (B, R)
        for a, b in zip([v for v, d in p.parts if d is c], [v for v, d in p.parts if d is c][1:])
    )
    assert is_valid_2crr(p) == expected

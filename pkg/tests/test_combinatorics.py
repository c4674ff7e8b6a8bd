from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from specht_hilbert.combinatorics import (
    Partition,
    ShapeError,
    YoungTableau,
    count_syt_hook,
    enumerate_partitions,
    enumerate_standard_tableaux,
    normalize_columns,
)

EXAMPLE_421 = YoungTableau(((3, 5, 1, 7), (6, 2), (4,)))


def brute_partitions(n):
    """All weakly decreasing tuples of positive ints summing to n, by filtering a product."""
    found = set()
    for length in range(1, n + 1):
        for parts in product(range(1, n + 1), repeat=length):
            if sum(parts) == n and all(a >= b for a, b in zip(parts, parts[1:])):
                found.add(parts)
    return found


def brute_syt(shape):
    n = sum(shape)
    count = 0
    for perm in permutations(range(1, n + 1)):
        rows, pos = [], 0
        for length in shape:
            rows.append(perm[pos:pos + length])
            pos += length
        if YoungTableau(tuple(rows)).is_standard:
            count += 1
    return count


def test_partitions_small():
    assert enumerate_partitions(1) == [Partition((1,))]
    assert [p.parts for p in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 8))
def test_partitions_match_brute_force(n):
    parts = [p.parts for p in enumerate_partitions(n)]
    assert len(parts) == len(set(parts))
    assert set(parts) == brute_partitions(n)
    assert parts == sorted(parts, reverse=True)


def test_partition_count_seven():
    assert len(enumerate_partitions(7)) == 15


def test_partitions_reject_zero():
    with pytest.raises(ValueError):
        enumerate_partitions(0)


@pytest.mark.parametrize("bad", [(2, 3), (1, 0), ()])
def test_partition_validation(bad):
    with pytest.raises(ShapeError):
        Partition(bad)


def test_partition_parse():
    assert Partition.parse("3,2,1") == Partition((3, 2, 1))
    with pytest.raises(ShapeError):
        Partition.parse("3,a")


@pytest.mark.parametrize(
    "shape, expected",
    [((2, 2), 2), ((5,), 1), ((2, 2, 1), 5), ((3, 2), 5), ((3, 3, 1), 21)],
)
def test_syt_counts(shape, expected):
    assert len(enumerate_standard_tableaux(shape)) == expected
    assert count_syt_hook(shape) == expected


@pytest.mark.parametrize("shape", [p.parts for n in range(1, 7) for p in enumerate_partitions(n)])
def test_hook_formula_against_brute_force(shape):
    assert count_syt_hook(shape) == brute_syt(shape)


def test_enumeration_is_sorted_standard_and_unique():
    tabs = enumerate_standard_tableaux((3, 2, 1))
    words = [T.reading_word() for T in tabs]
    assert words == sorted(words)
    assert len(set(words)) == len(words)
    assert all(T.is_standard for T in tabs)


def test_letter_set_mismatch():
    with pytest.raises(ShapeError):
        enumerate_standard_tableaux((2, 2), [1, 2, 3])


def test_arbitrary_letters():
    tabs = enumerate_standard_tableaux((2, 1), [2, 5, 7])
    assert [T.rows for T in tabs] == [((2, 5), (7,)), ((2, 7), (5,))]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([p for n in range(2, 7) for p in enumerate_partitions(n)]), st.data())
def test_order_preserving_relabel(shape, data):
    n = shape.n
    letters = sorted(data.draw(st.sets(st.integers(1, 30), min_size=n, max_size=n)))
    mapping = dict(zip(range(1, n + 1), letters))
    relabeled = {T.relabel(mapping).rows for T in enumerate_standard_tableaux(shape)}
    assert relabeled == {T.rows for T in enumerate_standard_tableaux(shape, letters)}


def test_column_entries_of_example_tableau():
    assert EXAMPLE_421.column_entries(1) == [3, 6, 4]
    assert EXAMPLE_421.column_entries(3) == [1]
    assert YoungTableau(((4, 2, 9),)).column_entries(2) == [2]
    with pytest.raises(IndexError):
        EXAMPLE_421.column_entries(5)


def test_tableau_json_round_trip():
    assert YoungTableau.from_json("[[3,5,1,7],[6,2],[4]]") == EXAMPLE_421
    assert YoungTableau.from_json(EXAMPLE_421.to_json()) == EXAMPLE_421
    assert EXAMPLE_421.shape == Partition((4, 2, 1))
    assert not EXAMPLE_421.is_standard


def test_tableau_rejects_repeats_and_bad_shapes():
    with pytest.raises(ShapeError):
        YoungTableau(((1, 2), (2,)))
    with pytest.raises(ShapeError):
        YoungTableau(((1,), (2, 3)))


def test_normalize_columns():
    assert normalize_columns(EXAMPLE_421).rows == ((3, 2, 1, 7), (4, 5), (6,))

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stratmod.partitions import (
    InvalidPartitionError,
    Partition,
    RankMismatchError,
    box_removals,
    concat,
    from_step_form,
    hat,
    join,
    leq,
    partitions_in_box,
    partitions_of,
    step_form,
    step_slice,
    subtract_rect,
    truncate,
)


def partitions(rank, max_part=6):
    return st.lists(st.integers(0, max_part), min_size=rank, max_size=rank).map(
        lambda xs: Partition(sorted(xs, reverse=True))
    )


def test_partition_validation():
    assert Partition([3, 1, 0]).weight == 4
    assert Partition([3, 1, 0]).length == 2
    assert Partition([3, 1, 0]).rank == 3
    with pytest.raises(InvalidPartitionError):
        Partition([1, 2])
    with pytest.raises(InvalidPartitionError):
        Partition([1, -1])


@pytest.mark.parametrize("lam, mu, expected", [
    ((3, 1, 0), (3, 2, 0), True),
    ((2, 1), (4, 0), False),
    ((5, 3, 2), (5, 3, 2), True),
])
def test_leq(lam, mu, expected):
    assert leq(lam, mu) is expected


def test_leq_rank_mismatch():
    with pytest.raises(RankMismatchError):
        leq((1, 0), (1, 0, 0))


@settings(max_examples=300)
@given(st.integers(1, 4).flatmap(lambda r: st.tuples(partitions(r), partitions(r), partitions(r))))
def test_leq_is_partial_order(triple):
    a, b, c = triple
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a == b
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


@pytest.mark.parametrize("lam, l, expected", [
    ((5, 3, 2), 1, (3, 2)),
    ((5, 3, 2), 0, (5, 3, 2)),
    ((4, 4, 1, 0), 2, (1, 0)),
])
def test_truncate(lam, l, expected):
    assert truncate(lam, l) == expected


def test_truncate_out_of_range():
    with pytest.raises(ValueError):
        truncate((1, 0), 3)


@pytest.mark.parametrize("alpha, l, r, expected", [
    ((1, 0), 1, 3, (1, 1, 0)),
    ((2, 0), 1, 3, (2, 2, 0)),
    ((3, 1), 0, 2, (3, 1)),
])
def test_hat(alpha, l, r, expected):
    assert hat(alpha, l, r) == expected


def test_truncate_hat_roundtrip_exhaustive():
    for r in range(1, 5):
        for l in range(0, r + 1):
            for alpha in partitions_in_box(r - l, 4):
                assert truncate(hat(alpha, l, r), l) == alpha


@pytest.mark.parametrize("lam, steps", [
    ((3, 3, 1, 0), ((3, 2), (1, 3))),
    ((2, 2, 2), ((2, 3),)),
    ((0, 0), ()),
])
def test_step_form(lam, steps):
    assert step_form(lam) == steps


def test_from_step_form():
    assert from_step_form([(5, 1), (2, 2), (1, 4)], 4) == (5, 2, 1, 1)
    with pytest.raises(ValueError):
        from_step_form([(2, 1), (3, 2)], 3)
    with pytest.raises(ValueError):
        from_step_form([(3, 2), (1, 2)], 3)
    with pytest.raises(ValueError):
        from_step_form([(3, 4)], 3)


def test_step_form_roundtrip_exhaustive():
    count = 0
    for r in range(1, 7):
        for w in range(21):
            for lam in partitions_of(w, r):
                steps = step_form(lam)
                heights = [n for n, _ in steps]
                cuts = [l for _, l in steps]
                assert heights == sorted(set(heights), reverse=True)
                assert cuts == sorted(set(cuts))
                assert from_step_form(steps, r) == lam
                count += 1
    assert count > 1000


def test_step_slice():
    steps = step_form((5, 2, 2, 1))
    assert step_slice(steps, 1, 3) == (5, 2, 2, 1)
    assert step_slice(steps, 2, 2) == (2, 2)
    assert step_slice(steps, 3, 2) == ()


def test_concat():
    assert concat((4, 2), (1,)) == (4, 2, 1)
    assert concat((2, 2), ()) == (2, 2)
    with pytest.raises(InvalidPartitionError):
        concat((1, 0), (2,))


def test_subtract_rect():
    assert subtract_rect((3, 2, 1), 1) == (2, 1, 0)
    assert subtract_rect((2, 2), 2) == (0, 0)
    with pytest.raises(ValueError):
        subtract_rect((2, 1), 2)


def test_join_examples():
    assert join((2, 0), (1, 1)) == (2, 1)
    assert join((3, 1), (3, 1)) == (3, 1)


def test_join_against_brute_force_box():
    # minimal common upper bounds of (5,0) and (2,2) inside [0,5]^2
    uppers = [p for p in partitions_in_box(2, 5) if leq((5, 0), p) and leq((2, 2), p)]
    minimal = [p for p in uppers if not any(q != p and leq(q, p) for q in uppers)]
    assert minimal == [(5, 2)]
    assert join((5, 0), (2, 2)) == (5, 2)


def test_join_is_least_upper_bound_exhaustive():
    for r in range(1, 5):
        parts = [p for w in range(9) for p in partitions_of(w, r)]
        for a, b in itertools.product(parts, repeat=2):
            j = join(a, b)
            assert leq(a, j) and leq(b, j)
            for c in parts:
                if leq(a, c) and leq(b, c):
                    assert leq(j, c)


def test_enumeration_counts():
    # partitions of 5 into at most 3 parts: 5, 41, 32, 311, 221
    assert len(list(partitions_of(5, 3))) == 5
    assert sorted(box_removals((3, 3, 1))) == [(3, 2, 1), (3, 3, 0)]

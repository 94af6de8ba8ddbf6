"""Joint symbolic powers of the Kepler varieties (determinantal ideals).

A partition ``lam`` lies in the support of ``M^(nu)`` iff every tail sum
``lam_j + ... + lam_r`` is at least ``n_j``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .ideals import IdealSupport
from .partitions import (
    Partition,
    RankMismatchError,
    as_partition,
    box_removals,
    hat,
    partitions_in_box,
    partitions_of,
    sort_partitions,
)


class SymbolicPowerSpec(tuple):
    """Decreasing tuple of vanishing orders ``(n_1, ..., n_r)``."""

    def __new__(cls, orders: Iterable[int]):
        return super().__new__(cls, as_partition(tuple(orders)))

    @property
    def rank(self) -> int:
        return len(self)


# Published minimal partitions for two worked examples; the computed sets are
# compared against these and the difference reported.
REFERENCE_MINIMAL = {
    (10, 5, 1): [(5, 4, 1), (5, 3, 2)],
    (15, 5, 1): [
        (10, 4, 1), (9, 5, 1), (8, 6, 1), (10, 3, 2),
        (9, 4, 2), (8, 5, 2), (9, 3, 3), (8, 4, 3),
    ],
}


def tail_sums(lam: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for p in reversed(lam):
        acc += p
        out.append(acc)
    return out[::-1]


def in_support(lam: Sequence[int], nu: Sequence[int]) -> bool:
    lam, nu = as_partition(lam), SymbolicPowerSpec(nu)
    if lam.rank != nu.rank:
        raise RankMismatchError(f"rank mismatch: {list(lam)} vs nu={list(nu)}")
    return all(t >= n for t, n in zip(tail_sums(lam), nu))


def is_minimal_in_support(lam: Sequence[int], nu: Sequence[int]) -> bool:
    """Single-box-removal certificate (the support is an up-set)."""
    return in_support(lam, nu) and not any(in_support(m, nu) for m in box_removals(lam))


def minimal_generators(nu: Sequence[int]) -> IdealSupport:
    nu = SymbolicPowerSpec(nu)
    r = nu.rank
    n1 = nu[0] if r else 0
    gens = [
        lam for lam in partitions_in_box(r, n1, max_weight=sum(nu))
        if is_minimal_in_support(lam, nu)
    ]
    return IdealSupport(r, tuple(gens))


def step1_spec(l: int, n: int, r: int) -> SymbolicPowerSpec:
    """``(n^(l+1), 0^(r-l-1))``: order ``n`` along the rank-``<= l`` matrices."""
    return SymbolicPowerSpec((n,) * (l + 1) + (0,) * (r - l - 1))


def step1_generators(l: int, n: int, r: int) -> IdealSupport:
    if not 0 <= l < r:
        raise ValueError(f"need 0 <= l < r, got l={l}, r={r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return IdealSupport(r, tuple(hat(alpha, l, r) for alpha in partitions_of(n, r - l)))


def order_on_stratum(lam: Sequence[int], j: int) -> int:
    """Vanishing order of the conical polynomial at a rank-``j`` tripotent."""
    lam = as_partition(lam)
    if not 0 <= j <= lam.rank:
        raise ValueError(f"j={j} outside [0, {lam.rank}]")
    return sum(lam[j:])


def compare_with_reference(nu: Sequence[int]) -> dict:
    """Computed minimal set against the published list, when one exists."""
    nu = SymbolicPowerSpec(nu)
    gens = minimal_generators(nu).generators
    listed = REFERENCE_MINIMAL.get(tuple(nu))
    report = {
        "nu": list(nu),
        "generators": [list(g) for g in gens],
        "paper_listed": None,
        "paper_listed_subset_ok": None,
        "extra_minimal": [],
        "discrepancies": [],
    }
    if listed is None:
        return report
    listed = [Partition(p) for p in listed]
    missing = [p for p in listed if p not in gens]
    extra = sort_partitions(g for g in gens if g not in listed)
    report["paper_listed"] = [list(p) for p in listed]
    report["paper_listed_subset_ok"] = not missing
    report["extra_minimal"] = [list(p) for p in extra]
    for p in missing:
        report["discrepancies"].append({
            "partition": list(p),
            "in_support": in_support(p, nu),
            "kind": "listed but not minimal",
        })
    for p in extra:
        report["discrepancies"].append({
            "partition": list(p),
            "tail_sums": tail_sums(p),
            "kind": "minimal but not listed",
        })
    return report

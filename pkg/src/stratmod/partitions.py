"""Partitions of fixed rank and the containment order.

A partition here always carries its rank ``r`` explicitly: ``(2, 1, 0)`` and
``(2, 1)`` are different objects.  Truncation and the hat construction count
positions, so trailing zeros matter.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class InvalidPartitionError(ValueError):
    pass


class RankMismatchError(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise InvalidPartitionError(f"parts must be integers, got {p!r}")
            if p < 0:
                raise InvalidPartitionError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartitionError(f"parts not weakly decreasing: {list(parts)}")
        return super().__new__(cls, parts)

    @property
    def rank(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return sum(1 for p in self if p)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def to_json(self) -> list[int]:
        return list(self)


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        obj = [int(x) for x in obj.replace("(", "").replace(")", "").split(",") if x.strip()]
    return Partition(obj)


def _same_rank(lam: Partition, mu: Partition) -> None:
    if len(lam) != len(mu):
        raise RankMismatchError(f"rank mismatch: {list(lam)} vs {list(mu)}")


def leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Containment order: ``lam_i <= mu_i`` for every i."""
    lam, mu = as_partition(lam), as_partition(mu)
    _same_rank(lam, mu)
    return all(a <= b for a, b in zip(lam, mu))


def lt(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return leq(lam, mu) and tuple(lam) != tuple(mu)


def join(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Least upper bound (componentwise maximum)."""
    lam, mu = as_partition(lam), as_partition(mu)
    _same_rank(lam, mu)
    return Partition(max(a, b) for a, b in zip(lam, mu))


def truncate(lam: Sequence[int], l: int) -> Partition:
    """Drop the first ``l`` parts."""
    lam = as_partition(lam)
    if not 0 <= l <= lam.rank:
        raise ValueError(f"truncation index {l} outside [0, {lam.rank}]")
    return Partition(lam[l:])


def hat(alpha: Sequence[int], l: int, r: int) -> Partition:
    """Prepend ``l`` copies of the first part of ``alpha`` (rank ``r - l``)."""
    alpha = as_partition(alpha)
    if l < 0 or alpha.rank != r - l:
        raise RankMismatchError(f"hat needs a rank {r - l} partition, got {list(alpha)} with l={l}")
    head = alpha[0] if alpha else 0
    return Partition((head,) * l + tuple(alpha))


def rect(n: int, m: int, r: int | None = None) -> Partition:
    """``n^(m)``: ``n`` repeated ``m`` times, padded with zeros to rank ``r``."""
    r = m if r is None else r
    if not 0 <= m <= r or n < 0:
        raise ValueError(f"bad rectangle n={n}, m={m}, r={r}")
    return Partition((n,) * m + (0,) * (r - m))


def subtract_rect(lam: Sequence[int], n: int) -> Partition:
    """``lam - n^(r)``; requires the last part to be at least ``n``."""
    lam = as_partition(lam)
    if n < 0 or (lam and lam[-1] < n):
        raise ValueError(f"{list(lam)} does not contain {n}^({lam.rank})")
    return Partition(p - n for p in lam)


def pad(lam: Sequence[int], r: int) -> Partition:
    lam = as_partition(lam)
    if lam.rank > r:
        raise RankMismatchError(f"cannot pad rank {lam.rank} to rank {r}")
    return Partition(tuple(lam) + (0,) * (r - lam.rank))


# -- step form ---------------------------------------------------------------

StepForm = tuple  # tuple of (height, cut) pairs


def step_form(lam: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Heights ``n_1 > ... > n_t > 0`` with cuts ``l_1 < ... < l_t``.

    ``l_k`` is the number of parts that are at least ``n_k``.  The zero
    partition has no steps.
    """
    lam = as_partition(lam)
    steps = []
    for i, p in enumerate(lam):
        if p == 0:
            break
        if i + 1 == lam.rank or lam[i + 1] != p:
            steps.append((p, i + 1))
    return tuple(steps)


def from_step_form(steps: Iterable[Sequence[int]], r: int) -> Partition:
    steps = [tuple(s) for s in steps]
    parts: list[int] = []
    prev_n, prev_l = None, 0
    for step in steps:
        if len(step) != 2:
            raise ValueError(f"step must be a (height, cut) pair, got {step}")
        n, l = step
        if n <= 0 or (prev_n is not None and n >= prev_n):
            raise ValueError(f"step heights must be strictly decreasing and positive: {steps}")
        if l <= prev_l or l > r:
            raise ValueError(f"step cuts must be strictly increasing and <= {r}: {steps}")
        parts.extend([n] * (l - prev_l))
        prev_n, prev_l = n, l
    parts.extend([0] * (r - prev_l))
    return Partition(parts)


def step_slice(steps: Sequence[Sequence[int]], h: int, k: int) -> tuple[int, ...]:
    """Parts of the sub-block ``lam_h^k`` (1-based steps h..k inclusive).

    Empty when ``h > k``.
    """
    parts: list[int] = []
    for idx in range(h, k + 1):
        n, l = steps[idx - 1]
        prev_l = steps[idx - 2][1] if idx >= 2 else 0
        parts.extend([n] * (l - prev_l))
    return tuple(parts)


def concat(mu: Sequence[int], suffix: Sequence[int]) -> Partition:
    """``(mu, suffix)``.  Raises if the result would not be decreasing."""
    mu = as_partition(mu)
    suffix = tuple(suffix)
    if mu and suffix and mu[-1] < suffix[0]:
        raise InvalidPartitionError(
            f"concat({list(mu)}, {list(suffix)}) is not weakly decreasing"
        )
    return Partition(tuple(mu) + suffix)


# -- enumeration -------------------------------------------------------------

def partitions_of(n: int, r: int, max_part: int | None = None) -> Iterator[Partition]:
    """All rank-``r`` partitions of weight exactly ``n`` (lex descending)."""
    if max_part is None:
        max_part = n

    def rec(remaining: int, slots: int, cap: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(cap, remaining), -1, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest

    for parts in rec(n, r, max_part):
        yield Partition(parts)


def partitions_in_box(r: int, max_part: int, max_weight: int | None = None) -> Iterator[Partition]:
    """Rank-``r`` partitions with ``lam_1 <= max_part`` and weight <= ``max_weight``."""
    if max_weight is None:
        max_weight = r * max_part
    for w in range(max_weight + 1):
        yield from partitions_of(w, r, max_part)


def box_removals(lam: Sequence[int]) -> Iterator[Partition]:
    """Partitions obtained by deleting one removable box."""
    lam = as_partition(lam)
    for i, p in enumerate(lam):
        if p > 0 and (i + 1 == lam.rank or lam[i + 1] < p):
            yield Partition(lam[:i] + (p - 1,) + lam[i + 1:])


def sort_partitions(parts: Iterable[Partition]) -> list[Partition]:
    """Canonical output order: lexicographically descending."""
    return sorted(set(parts), reverse=True)

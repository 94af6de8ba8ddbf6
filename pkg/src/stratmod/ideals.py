"""K-invariant ideals represented by their minimal generating antichain.

An ideal is identified with its Peter-Weyl support, the up-set
``{mu : mu >= lam for some generator lam}``.  Every such up-set has a unique
finite antichain of minimal elements, and that antichain is what
:class:`IdealSupport` stores.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import (
    Partition,
    RankMismatchError,
    as_partition,
    join,
    leq,
    lt,
    partitions_of,
    sort_partitions,
    truncate,
)


@dataclass(frozen=True)
class IdealSupport:
    rank: int
    generators: tuple[Partition, ...]

    def __post_init__(self):
        gens = tuple(as_partition(g) for g in self.generators)
        for g in gens:
            if g.rank != self.rank:
                raise RankMismatchError(f"generator {list(g)} has rank {g.rank}, expected {self.rank}")
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if leq(a, b) or leq(b, a):
                    raise ValueError(f"generators {list(a)} and {list(b)} are comparable")
        object.__setattr__(self, "generators", tuple(sort_partitions(gens)))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __contains__(self, mu) -> bool:
        return contains_partition(self, mu)

    def to_json(self) -> dict:
        return {"rank": self.rank, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "IdealSupport":
        return minimal_full_set([as_partition(g) for g in data["generators"]], rank=data["rank"])


def minimal_full_set(lams: Iterable[Sequence[int]], rank: int | None = None) -> IdealSupport:
    """Keep the minimal elements of a finite generating set.

    An empty input is the zero ideal; ``rank`` must then be supplied.
    """
    lams = {as_partition(l) for l in lams}
    ranks = {l.rank for l in lams}
    if rank is not None:
        ranks.add(rank)
    if len(ranks) > 1:
        raise RankMismatchError(f"generators of mixed rank: {sorted(ranks)}")
    if not ranks:
        raise ValueError("rank is required for an empty generating set")
    (r,) = ranks
    minimal = [l for l in lams if not any(lt(m, l) for m in lams)]
    return IdealSupport(r, tuple(minimal))


def _check_rank(ideal: IdealSupport, r: int) -> None:
    if ideal.rank != r:
        raise RankMismatchError(f"ideal has rank {ideal.rank}, got rank {r}")


def contains_partition(ideal: IdealSupport, mu: Sequence[int]) -> bool:
    mu = as_partition(mu)
    _check_rank(ideal, mu.rank)
    return any(leq(g, mu) for g in ideal.generators)


def ideal_sum(I: IdealSupport, J: IdealSupport) -> IdealSupport:
    _check_rank(I, J.rank)
    return minimal_full_set(I.generators + J.generators, rank=I.rank)


def intersect(I: IdealSupport, J: IdealSupport) -> IdealSupport:
    _check_rank(I, J.rank)
    return minimal_full_set((join(a, b) for a in I.generators for b in J.generators), rank=I.rank)


def power_of_max_ideal(n: int, r: int) -> IdealSupport:
    """``M_0^n``: generated by all partitions of weight ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return IdealSupport(r, tuple(partitions_of(n, r)))


def localize(ideal: IdealSupport, l: int) -> IdealSupport:
    """Support of the localized ideal on the Peirce 0-space of a rank-``l`` tripotent."""
    if not 0 <= l <= ideal.rank:
        raise ValueError(f"l={l} outside [0, {ideal.rank}]")
    return minimal_full_set((truncate(g, l) for g in ideal.generators), rank=ideal.rank - l)


def maximal_fibre(ideal: IdealSupport) -> list[Partition]:
    """Peter-Weyl types of the fibre at the origin (one summand per generator)."""
    return list(ideal.generators)

"""Exact special-function layer: Jordan Pochhammer symbols, the shift
constants ``C_l^n(lam)`` and the stratified kernel expansions ``K^s``."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .partitions import (
    InvalidPartitionError,
    Partition,
    as_partition,
    concat,
    pad,
    sort_partitions,
    step_form,
    step_slice,
    subtract_rect,
)


class DegenerateParameterError(ZeroDivisionError, ValueError):
    pass


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def pochhammer(s, lam: Sequence[int], a=2) -> Fraction:
    """``(s)_lam = prod_j prod_{i < lam_j} (s - (j-1) a/2 + i)``."""
    s, a = _q(s), _q(a)
    out = Fraction(1)
    for j, part in enumerate(as_partition(lam)):
        base = s - j * a / 2
        for i in range(part):
            out *= base + i
    return out


def cconst(l: int, n: int, lam: Sequence[int], a=2) -> Fraction:
    """``C_l^n(lam) = prod_j 1 / (lam_j - n + 1 + a/2 (l - j))_n`` for rank-``l`` ``lam``."""
    lam = as_partition(lam)
    a = _q(a)
    if lam.rank != l:
        raise ValueError(f"C_{l}^{n} needs a rank-{l} partition, got {list(lam)}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if l and lam[-1] < n:
        raise DegenerateParameterError(f"{list(lam)} does not contain {n}^({l})")
    denom = Fraction(1)
    for j in range(1, l + 1):
        base = lam[j - 1] - n + 1 + a / 2 * (l - j)
        for i in range(n):
            denom *= base + i
    if denom == 0:
        raise DegenerateParameterError(f"C_{l}^{n}({list(lam)}) has a vanishing Pochhammer factor")
    return 1 / denom


# -- coefficient functions ---------------------------------------------------

CoeffFn = Callable[[Partition], Fraction]


def flat_coeffs(mu: Partition) -> Fraction:
    """``a_mu = 1``: the Fischer-Fock kernel restricted to the ideal."""
    return Fraction(1)


def pochhammer_coeffs(c, a=2) -> CoeffFn:
    """``a_mu = (c)_mu``, the coefficients of ``h(z, w)^{-c}`` (weighted Bergman type)."""
    c = _q(c)

    def coeff(mu: Partition) -> Fraction:
        return pochhammer(c, mu, a)

    return coeff


def inverse_pochhammer_coeffs(c, a=2) -> CoeffFn:
    """``a_mu = 1 / (c)_mu``."""
    c = _q(c)

    def coeff(mu: Partition) -> Fraction:
        p = pochhammer(c, mu, a)
        if p == 0:
            raise DegenerateParameterError(f"(c)_mu vanishes at c={c}, mu={list(mu)}")
        return 1 / p

    return coeff


# -- stratified expansions ---------------------------------------------------

@dataclass
class KernelExpansion:
    """Formal series ``sum_mu coefficients[mu] E^mu``, truncated at ``weight_bound``."""

    rank: int
    weight_bound: int
    coefficients: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for mu in self.coefficients:
            if mu.rank != self.rank or mu.weight > self.weight_bound:
                raise ValueError(f"key {list(mu)} violates rank {self.rank} / weight <= {self.weight_bound}")

    def keys(self) -> list[Partition]:
        return sort_partitions(self.coefficients)

    def to_json(self) -> dict:
        return {
            ",".join(map(str, mu)): [self.coefficients[mu].numerator, self.coefficients[mu].denominator]
            for mu in self.keys()
        }


def _dominating(lower: Partition, budget: int):
    """Partitions ``mu >= lower`` of the same rank with ``|mu| - |lower| <= budget``."""
    l = lower.rank

    def rec(i: int, cap: int | None, left: int):
        if i == l:
            yield ()
            return
        hi = lower[i] + left if cap is None else min(cap, lower[i] + left)
        for v in range(lower[i], hi + 1):
            for rest in rec(i + 1, v, left - (v - lower[i])):
                yield (v,) + rest

    for parts in rec(0, None, budget):
        yield Partition(parts)


def k_s_expansion(coeffs: CoeffFn, lam: Sequence[int], s: int, N: int, a=2) -> KernelExpansion:
    """Coefficients of ``K^s`` over keys ``mu - n_s^(l_s)`` of weight at most ``N``.

    ``mu`` runs over rank-``l_s`` partitions containing the first ``l_s`` parts
    of ``lam``; keys are padded with zeros to the rank of ``lam``.
    """
    lam = as_partition(lam)
    r = lam.rank
    steps = step_form(lam)
    t = len(steps)
    if not 1 <= s <= t:
        raise ValueError(f"s={s} outside [1, {t}] for {list(lam)}")
    n_s, l_s = steps[s - 1]
    heights = [n for n, _ in steps] + [0]
    cuts = [l for _, l in steps]
    lower = Partition(lam[:l_s])
    tail = step_slice(steps, s + 1, t)
    out: dict[Partition, Fraction] = {}
    base_weight = l_s * n_s
    if N + base_weight - lower.weight < 0:
        return KernelExpansion(r, N, out)
    for mu in _dominating(lower, N + base_weight - lower.weight):
        key = pad(subtract_rect(mu, n_s), r)
        if key.weight > N:
            continue
        try:
            full = pad(concat(mu, tail), r)
        except InvalidPartitionError as exc:  # cannot happen for mu >= lower
            raise AssertionError(str(exc)) from exc
        value = _q(coeffs(full))
        for k in range(s, t + 1):
            block = concat(mu, step_slice(steps, s + 1, k))
            value *= cconst(cuts[k - 1], heights[k - 1] - heights[k], subtract_rect(block, heights[k]), a)
        out[key] = value
    return KernelExpansion(r, N, out)

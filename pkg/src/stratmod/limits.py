"""Truncated numeric check of the stratum limits of the kernels ``K^s``.

At ``s = t``: ``K_{zeta_eps} / conj(N_c(zeta_eps))^{n_t} -> N_c^{n_t} K^t_zeta``.
At ``s < t``: ``K^{s+1}_{zeta_eps} / conj(N_c(zeta_eps))^{n_s - n_{s+1}} -> N_c^{n_s - n_{s+1}} K^s_zeta``.

Both sides are truncated consistently, so the deviation is a polynomial in
``conj(eps)`` without constant term and should shrink linearly in ``eps``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .kernels import CoeffFn, KernelExpansion, flat_coeffs, k_s_expansion
from .partitions import Partition, as_partition, leq, partitions_in_box, step_form
from .peter_weyl import ComponentBasis, kernel_E, random_point, span_basis
from .poly import TriplePars, minor_poly, tripotent

DEFAULT_EPS = (1e-1, 1e-2, 1e-3, 1e-4)


@dataclass
class LimitReport:
    lam: Partition
    s: int
    N: int
    eps: list[float]
    deviations: list[float]
    decade_factors: list[float]
    observed_orders: list[float]
    tail_bound: float

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam), "s": self.s, "N": self.N, "eps": self.eps,
            "deviations": self.deviations, "decade_factors": self.decade_factors,
            "observed_orders": self.observed_orders, "tail_bound": self.tail_bound,
        }


class _Bases:
    def __init__(self, pars: TriplePars, seed: int):
        self.pars, self.seed, self.cache = pars, seed, {}

    def __call__(self, mu: Partition) -> ComponentBasis:
        if mu not in self.cache:
            self.cache[mu] = span_basis(mu, self.pars, self.seed)
        return self.cache[mu]


def expansion_value(exp: KernelExpansion, bases, z, zeta) -> complex:
    """``sum_mu c_mu E^mu(z, zeta)`` using oracle kernels."""
    return sum(float(c) * kernel_E(bases(mu), z, zeta) for mu, c in exp.coefficients.items())


def full_kernel(coeffs: CoeffFn, lam: Partition, N: int, bases, z, zeta) -> complex:
    """``K(z, zeta) = sum_{mu >= lam, |mu| <= N} a_mu E^mu(z, zeta)``."""
    total = 0j
    for mu in partitions_in_box(lam.rank, N, N):
        if leq(lam, mu):
            total += float(coeffs(mu)) * kernel_E(bases(mu), z, zeta)
    return total


def limit_check(lam: Sequence[int], pars: TriplePars, seed: int, N: int = 4, s: int | None = None,
                coeffs: CoeffFn = flat_coeffs, eps: Sequence[float] = DEFAULT_EPS,
                points: int = 8) -> LimitReport:
    """Deviation of the ratio from its limit for each ``eps``.

    ``N`` bounds the weight of the numerator's Peter-Weyl keys; the limit
    side is truncated to match.  The base point is ``zeta = e_[l_s - 1]``
    approached along ``zeta + eps E_{l_s l_s}``.
    """
    lam = as_partition(lam)
    if lam.rank != pars.r:
        raise ValueError(f"partition {list(lam)} does not have rank {pars.r}")
    steps = step_form(lam)
    t = len(steps)
    s = t if s is None else s
    if not 1 <= s <= t:
        raise ValueError(f"s={s} outside [1, {t}]")
    heights = [n for n, _ in steps] + [0]
    n_s, l_s = steps[s - 1]
    power = heights[s - 1] - heights[s]
    bases = _Bases(pars, seed)
    target_exp = k_s_expansion(coeffs, lam, s, N - l_s * power, pars.a)
    upper_exp = None if s == t else k_s_expansion(coeffs, lam, s + 1, N, pars.a)

    minor = minor_poly(l_s, pars).to_float()
    zeta = np.array(tripotent(l_s - 1, pars), dtype=complex)
    rng = np.random.default_rng([seed, 25])
    zs = [random_point(pars, rng) for _ in range(points)]
    limit_vals = [complex(minor(z)) ** power * expansion_value(target_exp, bases, z, zeta) for z in zs]

    deviations = []
    for e in eps:
        zeta_e = zeta.copy()
        zeta_e[l_s - 1, l_s - 1] += e
        scale = complex(minor(zeta_e)).conjugate() ** power
        dev = 0.0
        for z, want in zip(zs, limit_vals):
            if upper_exp is None:
                num = full_kernel(coeffs, lam, N, bases, z, zeta_e)
            else:
                num = expansion_value(upper_exp, bases, z, zeta_e)
            dev = max(dev, abs(num / scale - want))
        deviations.append(dev)

    factors = [a / b if b else math.inf for a, b in zip(deviations, deviations[1:])]
    orders = [
        math.log10(f) / math.log10(e0 / e1) if f > 0 and math.isfinite(f) else math.nan
        for f, e0, e1 in zip(factors, eps, eps[1:])
    ]
    znorm = max(np.linalg.norm(z) for z in zs)
    x = znorm * np.linalg.norm(zeta)
    tail = sum(x ** k / math.factorial(k) for k in range(N + 1, N + 60))
    return LimitReport(lam, s, N, list(eps), deviations, factors, orders, float(tail))

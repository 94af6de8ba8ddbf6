"""Numerical Peter-Weyl components as orbit spans of conical polynomials.

The component ``P^lam`` is the linear span of ``k.N^lam`` over ``k`` in
U(r) x U(s).  We sample Haar-random unitaries from a seeded generator,
track the rank of the sample matrix and stop once it has not grown for a
fixed number of consecutive samples.  Everything downstream (dimensions,
reproducing kernels, projections) is read off the resulting
Fischer-orthonormal basis.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .kernels import cconst, pochhammer
from .partitions import Partition, as_partition, partitions_of, subtract_rect
from .poly import (
    MatrixPolynomial,
    TriplePars,
    apply_differential,
    conical_poly,
    degree_monomials,
    fischer_norm,
    fischer_weights,
    from_vector,
    group_act,
    minor_poly,
    monomial_values,
    to_vector,
    tripotent,
)

MAX_BLOCK_DIM = 10_000


class SpanNotConvergedError(RuntimeError):
    pass


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


@dataclass
class ComponentBasis:
    lam: Partition
    pars: TriplePars
    monomials: list[tuple[int, ...]]
    coeffs: np.ndarray  # rows: basis polynomials in raw monomial coordinates
    residual: float
    samples: int
    seed: int
    tol: float
    patience: int
    rank_history: list[int] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.coeffs.shape[0]

    @property
    def basis(self) -> list[MatrixPolynomial]:
        return [from_vector(row, self.monomials, self.pars) for row in self.coeffs]

    def values(self, point) -> np.ndarray:
        """All basis polynomials evaluated at ``point``."""
        return self.coeffs @ monomial_values(self._exps, point)

    @property
    def _exps(self) -> np.ndarray:
        if not hasattr(self, "_exps_cache"):
            self._exps_cache = np.array(self.monomials, dtype=int).reshape(len(self.monomials), self.pars.nvars)
        return self._exps_cache

    def certificate(self) -> dict:
        return {
            "seed": self.seed,
            "tol": self.tol,
            "samples": self.samples,
            "stable_samples": self.patience,
            "rank_history": list(self.rank_history),
            "residual": self.residual,
        }


def span_basis(lam: Sequence[int], pars: TriplePars, seed: int, tol: float = 1e-9,
               patience: int = 5, max_samples: int | None = None) -> ComponentBasis:
    """Fischer-orthonormal basis of the orbit span of ``N^lam``."""
    lam = as_partition(lam)
    n = lam.weight
    block = math.comb(pars.nvars + n - 1, n)
    if block > MAX_BLOCK_DIM:
        raise ValueError(f"degree-{n} block has dimension {block} > {MAX_BLOCK_DIM}")
    monos = degree_monomials(pars.nvars, n)
    weights = fischer_weights(monos)
    base = conical_poly(lam, pars).to_float()
    rng = np.random.default_rng(seed)
    if max_samples is None:
        max_samples = 2 * block + 2 * patience

    rows: list[np.ndarray] = []
    history: list[int] = []
    rank, stable = 0, 0
    while stable < patience:
        if len(rows) >= max_samples:
            raise SpanNotConvergedError(
                f"orbit span of {list(lam)} did not stabilise after {len(rows)} samples; "
                f"rank history {history}"
            )
        u, v = random_unitary(pars.r, rng), random_unitary(pars.s, rng)
        y = weights * to_vector(group_act(base, u, v), monos)
        rows.append(y / np.linalg.norm(y))
        sv = np.linalg.svd(np.array(rows), compute_uv=False)
        new_rank = int(np.sum(sv > tol * sv[0]))
        stable = stable + 1 if new_rank <= rank else 0
        rank = max(rank, new_rank)
        history.append(new_rank)

    _, sv, vh = np.linalg.svd(np.array(rows), full_matrices=False)
    rank = int(np.sum(sv > tol * sv[0]))
    residual = float(sv[rank] / sv[0]) if rank < len(sv) else 0.0
    coeffs = vh[:rank] / weights[None, :]
    return ComponentBasis(lam, pars, monos, coeffs, residual, len(rows), seed, tol, patience, history)


def kernel_E(basis: ComponentBasis, z, zeta) -> complex:
    """``E^lam(z, zeta) = sum_i phi_i(z) conj(phi_i(zeta))``."""
    return complex(basis.values(z) @ basis.values(zeta).conj())


def kernel_poly(basis: ComponentBasis, zeta) -> MatrixPolynomial:
    """``E^lam_zeta`` as a polynomial in ``z``."""
    return from_vector(basis.coeffs.T @ basis.values(zeta).conj(), basis.monomials, basis.pars)


def project_component(f: MatrixPolynomial, basis: ComponentBasis) -> MatrixPolynomial:
    """Fischer-orthogonal projection of ``f`` onto the component."""
    n = basis.lam.weight
    part = f.to_float().homogeneous_part(n)
    weights = fischer_weights(basis.monomials)
    y = weights * to_vector(part, basis.monomials)
    scaled = basis.coeffs * weights[None, :]
    proj = scaled.T @ (scaled.conj() @ y)
    return from_vector(proj / weights, basis.monomials, basis.pars)


def schur_value(basis: ComponentBasis) -> tuple[complex, Fraction]:
    """``E^lam(e, e)`` and the closed form ``d_lam / (d/r)_lam``."""
    pars = basis.pars
    e = np.array(tripotent(pars.r, pars), dtype=complex)
    return kernel_E(basis, e, e), Fraction(basis.dim) / pochhammer(pars.genus, basis.lam, pars.a)


def graded_dimensions(n: int, pars: TriplePars, seed: int, tol: float = 1e-9) -> dict[Partition, int]:
    return {lam: span_basis(lam, pars, seed, tol).dim for lam in partitions_of(n, pars.r)}


def kernel_sup(basis: ComponentBasis, zeta, points: Sequence) -> float:
    """``max |E^lam_zeta(z)|`` over the given ``z``."""
    return max(abs(kernel_E(basis, z, zeta)) for z in points)


def random_point(pars: TriplePars, rng: np.random.Generator, rank: int | None = None,
                 scale: float = 0.5, peirce2: bool = False) -> np.ndarray:
    """Complex Gaussian r x s matrix, optionally of prescribed rank or
    supported on the first r columns."""
    cols = pars.r if peirce2 else pars.s
    if rank is None:
        m = rng.standard_normal((pars.r, cols)) + 1j * rng.standard_normal((pars.r, cols))
    else:
        a = rng.standard_normal((pars.r, rank)) + 1j * rng.standard_normal((pars.r, rank))
        b = rng.standard_normal((rank, cols)) + 1j * rng.standard_normal((rank, cols))
        m = a @ b
    out = np.zeros((pars.r, pars.s), dtype=complex)
    out[:, :cols] = scale * m / max(np.linalg.norm(m, 2), 1e-300)
    return out


@dataclass
class ShiftReport:
    lam: Partition
    n: int
    c_constant: Fraction
    d_lambda: int
    d_shifted: int
    residual20: float
    residual21: float
    residual22: float
    samples: int
    seed: int
    certificates: dict

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "n": self.n,
            "c_constant": [self.c_constant.numerator, self.c_constant.denominator],
            "d_lambda": self.d_lambda,
            "d_shifted": self.d_shifted,
            "residual20": self.residual20,
            "residual21": self.residual21,
            "residual22": self.residual22,
            "samples": self.samples,
            "seed": self.seed,
            "certificates": self.certificates,
        }


def _rel(diff: MatrixPolynomial, ref: MatrixPolynomial) -> float:
    return fischer_norm(diff) / max(fischer_norm(ref), 1e-300)


def verify_shift_identity(lam: Sequence[int], n: int, pars: TriplePars, samples: int = 20,
                          seed: int = 0, tol: float = 1e-9) -> ShiftReport:
    """Check the determinant shift identity for ``E^lam`` and its two
    differential forms at random points (``zeta`` in the Peirce 2-space of
    the maximal tripotent).

    residual20: ``max |E^lam - C N^n conj(N(zeta))^n E^{lam-n}| / max |E^lam|``
    residual21: ``conj(N)^n(d_z) E^lam_zeta`` vs ``conj(N(zeta))^n E^{lam-n}_zeta``
    residual22: ``N^n(dbar_zeta) E^lam_zeta`` vs ``N^n E^{lam-n}_zeta``
    (both relative in the Fischer norm, worst case over samples).
    """
    lam = as_partition(lam)
    if lam.rank != pars.r:
        raise ValueError(f"partition {list(lam)} does not have rank {pars.r}")
    if n < 0 or lam[-1] < n:
        raise ValueError(f"{list(lam)} is too short for n={n}")
    lower = subtract_rect(lam, n)
    c = cconst(pars.r, n, lam, pars.a)
    big = span_basis(lam, pars, seed, tol)
    small = span_basis(lower, pars, seed, tol)
    det = minor_poly(pars.r, pars)
    det_n = (det ** n).to_float()

    rng = np.random.default_rng([seed, 20])
    lhs, rhs = [], []
    res21 = res22 = 0.0
    # d/dz applied to each basis polynomial, used for the dbar_zeta form
    diffed = [apply_differential(det_n, phi) for phi in big.basis]
    for _ in range(samples):
        z = random_point(pars, rng)
        zeta = random_point(pars, rng, peirce2=True)
        det_zeta = complex(det.to_float()(zeta))
        lhs.append(kernel_E(big, z, zeta))
        rhs.append(float(c) * complex(det_n(z)) * det_zeta.conjugate() ** n * kernel_E(small, z, zeta))

        e_big = kernel_poly(big, zeta)
        e_small = kernel_poly(small, zeta)
        want21 = e_small * (det_zeta.conjugate() ** n)
        res21 = max(res21, _rel(apply_differential(det_n, e_big) - want21, want21))

        weights = np.array([complex(psi(zeta)) for psi in diffed]).conj()
        got22 = from_vector(big.coeffs.T @ weights, big.monomials, pars)
        want22 = det_n * e_small
        res22 = max(res22, _rel(got22 - want22, want22))

    lhs, rhs = np.array(lhs), np.array(rhs)
    res20 = float(np.max(np.abs(lhs - rhs)) / np.max(np.abs(lhs)))
    return ShiftReport(
        lam, n, c, big.dim, small.dim, res20, res21, res22, samples, seed,
        {"lambda": big.certificate(), "shifted": small.certificate()},
    )

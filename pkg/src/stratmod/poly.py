"""Sparse polynomials in the entries of an r x s matrix.

Variables are the entries ``z_ij`` (1-based in the public API, stored at
flat index ``(i-1)*s + (j-1)``).  Coefficients are either exact rationals
(``int`` / ``Fraction``) or complex floats; the mode is fixed per polynomial
and only exact -> float conversion is allowed.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import numpy as np

from .partitions import as_partition


class ModeError(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class TriplePars:
    """The matrix triple C^{r x s} with its multiplicities a = 2, b = s - r."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 0 or self.s < self.r:
            raise ValueError(f"need 0 <= r <= s, got r={self.r}, s={self.s}")
        if self.r and Fraction(self.d, self.r) != 1 + Fraction(self.a, 2) * (self.r - 1) + self.b:
            raise AssertionError("dimension identity d/r = 1 + a/2 (r-1) + b violated")

    @property
    def a(self) -> int:
        return 2

    @property
    def b(self) -> int:
        return self.s - self.r

    @property
    def d(self) -> int:
        return self.r * self.s

    @property
    def genus(self) -> Fraction:
        """``d/r``."""
        return Fraction(self.d, self.r)

    @property
    def nvars(self) -> int:
        return self.d

    def index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.r and 1 <= j <= self.s):
            raise IndexError(f"entry ({i},{j}) outside {self.r}x{self.s}")
        return (i - 1) * self.s + (j - 1)

    def entry(self, v: int) -> tuple[int, int]:
        return v // self.s + 1, v % self.s + 1


def _add_keys(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _alpha_factorial(alpha: Iterable[int]) -> int:
    out = 1
    for e in alpha:
        out *= math.factorial(e)
    return out


class MatrixPolynomial:
    __slots__ = ("pars", "terms", "exact")

    def __init__(self, pars: TriplePars, terms: Mapping[tuple, object] | None = None, exact: bool = True):
        self.pars = pars
        self.exact = exact
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != pars.nvars:
                raise ValueError(f"exponent {key} has wrong length for {pars.r}x{pars.s}")
            if exact:
                if not isinstance(c, Rational):
                    raise ModeError(f"exact polynomial got non-rational coefficient {c!r}")
            else:
                c = complex(c)
            if c != 0:
                clean[key] = c
        self.terms = clean

    # construction helpers
    @classmethod
    def constant(cls, pars: TriplePars, c=1, exact: bool = True) -> "MatrixPolynomial":
        return cls(pars, {(0,) * pars.nvars: c}, exact)

    @classmethod
    def variable(cls, pars: TriplePars, i: int, j: int, exact: bool = True) -> "MatrixPolynomial":
        key = [0] * pars.nvars
        key[pars.index(i, j)] = 1
        return cls(pars, {tuple(key): 1}, exact)

    @classmethod
    def _raw(cls, pars, terms, exact):
        obj = cls.__new__(cls)
        obj.pars, obj.exact = pars, exact
        obj.terms = {k: c for k, c in terms.items() if c != 0}
        return obj

    # basic properties
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        return max((sum(k) for k in self.terms), default=None)

    @property
    def min_degree(self) -> int | None:
        return min((sum(k) for k in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.terms}) <= 1

    def homogeneous_part(self, n: int) -> "MatrixPolynomial":
        return MatrixPolynomial._raw(self.pars, {k: c for k, c in self.terms.items() if sum(k) == n}, self.exact)

    def coefficient(self, key) -> object:
        return self.terms.get(tuple(key), 0)

    def to_float(self) -> "MatrixPolynomial":
        if not self.exact:
            return self
        return MatrixPolynomial._raw(self.pars, {k: complex(c) for k, c in self.terms.items()}, False)

    # arithmetic
    def _check(self, other: "MatrixPolynomial") -> None:
        if other.pars != self.pars:
            raise ValueError("polynomials live on different matrix spaces")
        if other.exact != self.exact:
            raise ModeError("cannot mix exact and float polynomials; convert with to_float()")

    def _coerce(self, other) -> "MatrixPolynomial":
        if isinstance(other, MatrixPolynomial):
            self._check(other)
            return other
        if self.exact and not isinstance(other, Rational):
            raise ModeError(f"exact polynomial cannot absorb scalar {other!r}")
        return MatrixPolynomial.constant(self.pars, other, self.exact)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MatrixPolynomial._raw(self.pars, out, self.exact)

    __radd__ = __add__

    def __neg__(self):
        return MatrixPolynomial._raw(self.pars, {k: -c for k, c in self.terms.items()}, self.exact)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MatrixPolynomial):
            if self.exact and not isinstance(other, Rational):
                raise ModeError(f"exact polynomial cannot absorb scalar {other!r}")
            return MatrixPolynomial._raw(self.pars, {k: c * other for k, c in self.terms.items()}, self.exact)
        self._check(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = _add_keys(k1, k2)
                out[k] = out.get(k, 0) + c1 * c2
        return MatrixPolynomial._raw(self.pars, out, self.exact)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MatrixPolynomial.constant(self.pars, 1, self.exact)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        return self.pars == other.pars and self.exact == other.exact and self.terms == other.terms

    def __hash__(self):
        return hash((self.pars, self.exact, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        pieces = []
        for k, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
            mono = "*".join(
                f"z{self.pars.entry(v)[0]}{self.pars.entry(v)[1]}" + (f"^{e}" if e > 1 else "")
                for v, e in enumerate(k) if e
            )
            pieces.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(pieces)

    def max_abs_coefficient(self) -> float:
        return max((abs(complex(c)) for c in self.terms.values()), default=0.0)

    # evaluation and substitution
    def __call__(self, point) -> object:
        return evaluate(self, point)

    def to_json(self) -> dict:
        terms = []
        for k, c in sorted(self.terms.items()):
            exps = [[*self.pars.entry(v), e] for v, e in enumerate(k) if e]
            if self.exact:
                c = Fraction(c)
                coeff = [c.numerator, c.denominator]
            else:
                coeff = [c.real, c.imag]
            terms.append({"exponents": exps, "coeff": coeff})
        return {"r": self.pars.r, "s": self.pars.s, "mode": "exact" if self.exact else "float", "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "MatrixPolynomial":
        pars = TriplePars(data["r"], data["s"])
        exact = data.get("mode", "exact") == "exact"
        terms = {}
        for t in data["terms"]:
            key = [0] * pars.nvars
            for i, j, e in t["exponents"]:
                key[pars.index(i, j)] += e
            a, b = t["coeff"]
            terms[tuple(key)] = Fraction(a, b) if exact else complex(a, b)
        return cls(pars, terms, exact)


def _flat_point(pars: TriplePars, point) -> list:
    if isinstance(point, np.ndarray):
        if point.shape != (pars.r, pars.s):
            raise ValueError(f"point has shape {point.shape}, expected {(pars.r, pars.s)}")
        return list(point.reshape(-1))
    rows = [list(row) for row in point]
    if len(rows) != pars.r or any(len(row) != pars.s for row in rows):
        raise ValueError(f"point is not {pars.r}x{pars.s}")
    return [x for row in rows for x in row]


def evaluate(f: MatrixPolynomial, point) -> object:
    """Value at an r x s matrix; exact when both ``f`` and the point are rational."""
    xs = _flat_point(f.pars, point)
    exact = f.exact and all(isinstance(x, Rational) for x in xs)
    total = Fraction(0) if exact else 0j
    for key, c in f.terms.items():
        term = c if exact else complex(c)
        for x, e in zip(xs, key):
            if e:
                term *= (x if exact else complex(x)) ** e
        total += term
    return total


def substitute(f: MatrixPolynomial, images: Sequence[MatrixPolynomial], pars: TriplePars | None = None) -> MatrixPolynomial:
    """Compose: replace variable ``v`` by ``images[v]`` (all on ``pars``)."""
    if len(images) != f.pars.nvars:
        raise ValueError("need one image per variable")
    pars = pars or images[0].pars
    exact = all(im.exact for im in images) and f.exact
    imgs = [im if exact else im.to_float() for im in images]
    cache: dict[tuple[int, int], MatrixPolynomial] = {}

    def power(v: int, e: int) -> MatrixPolynomial:
        if (v, e) not in cache:
            cache[(v, e)] = imgs[v] if e == 1 else power(v, e - 1) * imgs[v]
        return cache[(v, e)]

    acc: dict = {}
    one = MatrixPolynomial.constant(pars, 1, exact)
    for key, c in f.terms.items():
        term = one
        for v, e in enumerate(key):
            if e:
                term = term * power(v, e)
        coeff = c if exact else complex(c)
        for k2, c2 in term.terms.items():
            acc[k2] = acc.get(k2, 0) + coeff * c2
    return MatrixPolynomial._raw(pars, acc, exact)


def shift(f: MatrixPolynomial, point) -> MatrixPolynomial:
    """The polynomial ``z -> f(point + z)``."""
    xs = _flat_point(f.pars, point)
    exact = f.exact and all(isinstance(x, Rational) for x in xs)
    g = f if exact else f.to_float()
    images = []
    for v, x in enumerate(xs):
        key = [0] * f.pars.nvars
        key[v] = 1
        terms = {tuple(key): 1, (0,) * f.pars.nvars: x if exact else complex(x)}
        images.append(MatrixPolynomial(f.pars, terms, exact))
    return substitute(g, images, f.pars)


# -- minors and conical polynomials -------------------------------------------

def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def minor_poly(m: int, pars: TriplePars) -> MatrixPolynomial:
    """Leading principal m x m minor ``det(z[:m, :m])``; ``m = 0`` gives 1."""
    if not 0 <= m <= pars.r:
        raise ValueError(f"minor size {m} outside [0, {pars.r}]")
    terms = {}
    for perm in itertools.permutations(range(m)):
        key = [0] * pars.nvars
        for i, j in enumerate(perm):
            key[i * pars.s + j] += 1
        terms[tuple(key)] = _perm_sign(perm)
    return MatrixPolynomial(pars, terms)


def conical_poly(lam: Sequence[int], pars: TriplePars) -> MatrixPolynomial:
    """``N_1^{l1-l2} N_2^{l2-l3} ... N_r^{lr}``."""
    lam = as_partition(lam)
    if lam.rank != pars.r:
        raise ValueError(f"partition {list(lam)} does not have rank {pars.r}")
    out = MatrixPolynomial.constant(pars)
    for m in range(1, pars.r + 1):
        e = lam[m - 1] - (lam[m] if m < pars.r else 0)
        if e:
            out = out * minor_poly(m, pars) ** e
    return out


def tripotent(l: int, pars: TriplePars) -> list[list[int]]:
    """``e_[l] = E_11 + ... + E_ll`` as an exact matrix."""
    if not 0 <= l <= pars.r:
        raise ValueError(f"tripotent rank {l} outside [0, {pars.r}]")
    return [[1 if (i == j and i < l) else 0 for j in range(pars.s)] for i in range(pars.r)]


def normal_project(f: MatrixPolynomial, l: int) -> MatrixPolynomial:
    """``w -> f(e_[l] + w)`` with ``w`` in the bottom-right (r-l) x (s-l) block."""
    pars = f.pars
    if not 0 <= l <= pars.r:
        raise ValueError(f"l={l} outside [0, {pars.r}]")
    wpars = TriplePars(pars.r - l, pars.s - l)
    out: dict = {}
    for key, c in f.terms.items():
        wkey = [0] * wpars.nvars
        alive = True
        for v, e in enumerate(key):
            if not e:
                continue
            i, j = pars.entry(v)
            if i > l and j > l:
                wkey[wpars.index(i - l, j - l)] += e
            elif i != j:
                alive = False  # off-diagonal entry of c is 0
                break
            # diagonal entry of c is 1 and contributes nothing
        if alive:
            k = tuple(wkey)
            out[k] = out.get(k, 0) + c
    return MatrixPolynomial._raw(wpars, out, f.exact)


# -- Fischer-Fock inner product and differential operators -------------------

def fischer_inner(p: MatrixPolynomial, q: MatrixPolynomial):
    """``(p|q) = sum conj(p_a) q_a a!``, antilinear in ``p``."""
    p._check(q)
    total = Fraction(0) if p.exact else 0j
    small, big = (p, q) if len(p.terms) <= len(q.terms) else (q, p)
    for key, c in small.terms.items():
        other = big.terms.get(key)
        if other is None:
            continue
        pc, qc = (c, other) if small is p else (other, c)
        if not p.exact:
            pc = pc.conjugate()
        total += pc * qc * _alpha_factorial(key)
    return total


def fischer_norm(p: MatrixPolynomial) -> float:
    return math.sqrt(abs(complex(fischer_inner(p, p))))


def apply_differential(p: MatrixPolynomial, f: MatrixPolynomial) -> MatrixPolynomial:
    """The constant-coefficient operator ``conj(p)(d/dz)`` applied to ``f``."""
    p._check(f)
    out: dict = {}
    for beta, pc in p.terms.items():
        if not p.exact:
            pc = pc.conjugate()
        for alpha, fc in f.terms.items():
            if any(a < b for a, b in zip(alpha, beta)):
                continue
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            falling = 1
            for a, b in zip(alpha, beta):
                for i in range(b):
                    falling *= a - i
            out[gamma] = out.get(gamma, 0) + pc * fc * falling
    return MatrixPolynomial._raw(f.pars, out, f.exact)


# -- vanishing order ----------------------------------------------------------

def vanishing_order(f: MatrixPolynomial, point, tol: float = 1e-9) -> int:
    """Lowest total degree in the Taylor expansion of ``f`` at ``point``.

    Exact when ``f`` and ``point`` are rational; otherwise coefficients below
    ``tol`` times the largest one are treated as zero.
    """
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has infinite vanishing order")
    g = shift(f, point)
    if g.exact:
        return g.min_degree
    cutoff = tol * g.max_abs_coefficient()
    return min(sum(k) for k, c in g.terms.items() if abs(c) > cutoff)


# -- group action -------------------------------------------------------------

def group_act(f: MatrixPolynomial, u, v) -> MatrixPolynomial:
    """``(k.f)(z) = f(u* z v)`` for ``k = (u, v)`` in U(r) x U(s)."""
    pars = f.pars
    u, v = np.asarray(u, dtype=complex), np.asarray(v, dtype=complex)
    if u.shape != (pars.r, pars.r) or v.shape != (pars.s, pars.s):
        raise ValueError(f"need u {pars.r}x{pars.r} and v {pars.s}x{pars.s}")
    images = []
    ustar = u.conj().T
    for idx in range(pars.nvars):
        i, j = pars.entry(idx)
        # (u* z v)_ij = sum_ab conj(u_ai) z_ab v_bj
        terms = {}
        for a in range(pars.r):
            for b in range(pars.s):
                c = ustar[i - 1, a] * v[b, j - 1]
                if c != 0:
                    key = [0] * pars.nvars
                    key[a * pars.s + b] = 1
                    terms[tuple(key)] = c
        images.append(MatrixPolynomial(pars, terms, exact=False))
    return substitute(f.to_float(), images, pars)


# -- dense coordinates on a homogeneous block ---------------------------------

def degree_monomials(nvars: int, n: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree ``n`` in a fixed order."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), n):
        key = [0] * nvars
        for v in combo:
            key[v] += 1
        out.append(tuple(key))
    return out


def fischer_weights(monos: Sequence[tuple[int, ...]]) -> np.ndarray:
    """``sqrt(a!)`` per monomial; multiplying coefficients by these makes the
    Fischer product the standard Hermitian one."""
    return np.sqrt(np.array([float(_alpha_factorial(m)) for m in monos]))


def to_vector(f: MatrixPolynomial, monos: Sequence[tuple[int, ...]]) -> np.ndarray:
    index = {m: i for i, m in enumerate(monos)}
    vec = np.zeros(len(monos), dtype=complex)
    for k, c in f.terms.items():
        if k not in index:
            raise ValueError(f"monomial {k} outside the given block")
        vec[index[k]] = complex(c)
    return vec


def from_vector(vec: np.ndarray, monos: Sequence[tuple[int, ...]], pars: TriplePars) -> MatrixPolynomial:
    return MatrixPolynomial(pars, {m: complex(c) for m, c in zip(monos, vec) if c != 0}, exact=False)


def monomial_values(monos_array: np.ndarray, point) -> np.ndarray:
    """All monomials of a block evaluated at ``point`` (vectorised)."""
    x = np.asarray(point, dtype=complex).reshape(-1)
    return np.prod(x[None, :] ** monos_array, axis=1)

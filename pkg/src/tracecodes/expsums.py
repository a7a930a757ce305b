"""Exact additive-character sums in Z[zeta_p].

Every sum here is evaluated in the ring Z[zeta_p] with no floating point.
An element is stored by its coordinates in the basis 1, zeta, ..., zeta^{p-2};
zeta^{p-1} is always rewritten as -(1 + zeta + ... + zeta^{p-2}), so two
elements are equal exactly when their coordinate tuples are.
"""

from __future__ import annotations

import cmath
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable

import numpy as np

from .errors import ConsistencyError, HypothesisError, ParameterError
from .field import (
    FieldParams,
    FqElement,
    cyclotomic_class,
    eta_p,
    eta_q_index,
    is_prime,
    linearized_solve,
    make_field,
)

__all__ = [
    "CycInt",
    "cyc_add",
    "cyc_mul",
    "cyc_scale",
    "additive_char_sum",
    "gauss_sum_p",
    "gauss_sum_q",
    "quadratic_sum",
    "quadratic_sum_closed",
    "quadratic_char_sum",
    "quadratic_char_sum_closed",
    "weil_sum_direct",
    "weil_sum_closed",
    "new_sum",
    "new_sum_closed",
    "solvable_set_count",
]


@dataclass(frozen=True)
class CycInt:
    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ParameterError(f"Z[zeta_{self.p}] element needs {self.p - 1} coordinates")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_int(cls, p: int, n: int) -> CycInt:
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> CycInt:
        """zeta_p^k."""
        counts = [0] * p
        counts[k % p] = 1
        return cls.from_exponent_counts(p, counts)

    @classmethod
    def from_exponent_counts(cls, p: int, counts) -> CycInt:
        """sum_k counts[k] * zeta^k for k in 0..p-1."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ParameterError("need one count per exponent 0..p-1")
        top = counts[p - 1]
        return cls(p, tuple(c - top for c in counts[: p - 1]))

    # -- ring operations ----------------------------------------------------
    def _check(self, other: CycInt):
        if other.p != self.p:
            raise ParameterError(f"cannot combine Z[zeta_{self.p}] with Z[zeta_{other.p}]")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        return CycInt(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CycInt(self.p, tuple(int(other) * a for a in self.coeffs))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._check(other)
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        full[(i + j) % p] += a * b
        return CycInt.from_exponent_counts(p, full)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ParameterError("negative powers are not supported")
        result = CycInt.from_int(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- inspection ---------------------------------------------------------
    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        if isinstance(other, CycInt):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __complex__(self):
        # debugging aid only
        return sum(c * cmath.exp(2j * cmath.pi * k / self.p) for k, c in enumerate(self.coeffs))

    def __str__(self):
        if self.is_integer():
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return " + ".join(terms) or "0"


def cyc_add(a: CycInt, b: CycInt | int) -> CycInt:
    return a + b


def cyc_mul(a: CycInt, b: CycInt | int) -> CycInt:
    return a * b


def cyc_scale(a: CycInt, n: int) -> CycInt:
    return a * int(n)


def additive_char_sum(values: Iterable[int], p: int) -> CycInt:
    """Exact value of sum zeta_p^{f(x)} given the residues f(x)."""
    if isinstance(values, np.ndarray):
        counts = np.bincount(np.mod(values, p).ravel(), minlength=p)
    else:
        c = Counter(int(v) % p for v in values)
        counts = [c.get(k, 0) for k in range(p)]
    return CycInt.from_exponent_counts(p, counts)


def gauss_sum_p(p: int) -> CycInt:
    """G(eta) = sum_{v in F_p} eta(v) zeta^v."""
    if not is_prime(p) or p == 2:
        raise ParameterError(f"p must be an odd prime, got {p}")
    return CycInt.from_exponent_counts(p, [eta_p(v, p) for v in range(p)])


def gauss_sum_q(fp: FieldParams) -> CycInt:
    """G'(eta') over F_q as (-1)^{e-1} G(eta)^e, kept in Z[zeta_p]."""
    sign = -1 if (fp.e - 1) % 2 else 1
    return sign * gauss_sum_p(fp.p) ** fp.e


def _nonzero(x: FqElement, fp: FieldParams, name: str) -> int:
    idx = fp.index(x)
    if idx == 0:
        raise ParameterError(f"{name} must be nonzero")
    return idx


def quadratic_sum(a2: FqElement, a1: FqElement, a0: FqElement, fp: FieldParams) -> CycInt:
    """sum_{x in F_q} zeta^{Tr(a2 x^2 + a1 x + a0)}, summed term by term."""
    i2 = _nonzero(a2, fp, "a2")
    i1, i0 = fp.index(a1), fp.index(a0)
    xs = fp.elements()
    vals = fp.add(fp.add(fp.mul(i2, fp.mul(xs, xs)), fp.mul(i1, xs)), i0)
    return additive_char_sum(fp.tr(vals), fp.p)


def quadratic_sum_closed(a2: FqElement, a1: FqElement, a0: FqElement, fp: FieldParams) -> CycInt:
    """zeta^{Tr(a0 - a1^2/(4 a2))} eta'(a2) G'."""
    i2 = _nonzero(a2, fp, "a2")
    i1, i0 = fp.index(a1), fp.index(a0)
    shift = fp.mul(fp.mul(i1, i1), fp.inv(fp.scale(4, i2)))
    phase = CycInt.zeta(fp.p, fp.tr(fp.sub(i0, shift)))
    return phase * gauss_sum_q(fp) * eta_q_index(i2, fp)


def quadratic_char_sum(a2: FqElement, a1: FqElement, a0: FqElement, fp: FieldParams) -> int:
    """sum_{x in F_q} eta'(a2 x^2 + a1 x + a0), summed term by term."""
    i2 = _nonzero(a2, fp, "a2")
    i1, i0 = fp.index(a1), fp.index(a0)
    xs = fp.elements()
    vals = fp.add(fp.add(fp.mul(i2, fp.mul(xs, xs)), fp.mul(i1, xs)), i0)
    return int(np.sum(eta_q_index(vals, fp)))


def quadratic_char_sum_closed(a2: FqElement, a1: FqElement, a0: FqElement, fp: FieldParams) -> int:
    i2 = _nonzero(a2, fp, "a2")
    i1, i0 = fp.index(a1), fp.index(a0)
    disc = fp.sub(fp.mul(i1, i1), fp.scale(4, fp.mul(i0, i2)))
    eta = eta_q_index(i2, fp)
    return (fp.q - 1) * eta if disc == 0 else -eta


def weil_sum_direct(alpha: FqElement, beta: FqElement, l: int, fp: FieldParams) -> CycInt:
    """S(alpha, beta) = sum_x zeta^{Tr(alpha x^{p^l+1} + beta x)} by direct summation."""
    a, b = fp.index(alpha), fp.index(beta)
    xs = fp.elements()
    vals = fp.add(fp.mul(a, fp.pow(xs, fp.p ** l + 1)), fp.mul(b, xs))
    return additive_char_sum(fp.tr(vals), fp.p)


def _weil_case(alpha_idx: int, l: int, fp: FieldParams) -> tuple[int, int, bool]:
    """Return (m, s, degenerate) where degenerate means alpha^{(q-1)/(p^s+1)} = (-1)^{m/s}."""
    e = fp.e
    s = gcd(l, e)
    if (e // s) % 2:
        raise HypothesisError(f"closed form needs e/gcd(l, e) even; got e={e}, l={l}")
    m = e // 2
    target = 1 if (m // s) % 2 == 0 else fp.p - 1
    power = fp.pow(alpha_idx, (fp.q - 1) // (fp.p ** s + 1))
    return m, s, power == target


def weil_sum_closed(alpha: FqElement, beta: FqElement, l: int, fp: FieldParams) -> CycInt:
    """S(alpha, beta) from its closed form.

    Only valid when e/gcd(l, e) is even; refuses otherwise rather than falling
    back to direct summation.
    """
    a = _nonzero(alpha, fp, "alpha")
    m, s, degenerate = _weil_case(a, l, fp)
    p = fp.p
    sign = -1 if (m // s) % 2 else 1
    if degenerate:
        magnitude = -sign * p ** (m + s)
    else:
        magnitude = sign * p ** m
    if fp.index(beta) == 0:
        return CycInt.from_int(p, magnitude)

    sol = linearized_solve(alpha, l, beta, fp)
    if not sol.solvable:
        if not degenerate:
            raise ConsistencyError("permutation case produced an unsolvable equation")
        return CycInt.from_int(p, 0)
    if not degenerate and not sol.unique:
        raise ConsistencyError("permutation case produced a non-trivial kernel")
    x0 = fp.index(sol.representative)
    exponent = fp.tr(fp.neg(fp.mul(a, fp.pow(x0, p ** l + 1))))
    return CycInt.zeta(p, exponent) * magnitude


def new_sum_closed(y: int, p: int) -> int:
    y %= p
    return 0 if y in cyclotomic_class(0, p) else -1


def new_sum(y: int, i: int, p: int) -> int:
    """sum_{x in C_i} eta(x^2 - y) for p = 3 mod 4, checked against its 0/-1 rule."""
    if not is_prime(p) or p % 4 != 3:
        raise ParameterError(f"p must be a prime congruent to 3 mod 4, got {p}")
    if y % p == 0:
        raise ParameterError("y must be nonzero mod p")
    total = sum(eta_p(x * x - y, p) for x in cyclotomic_class(i, p))
    if total != new_sum_closed(y, p):
        raise ConsistencyError(f"class sum for y={y}, i={i}, p={p} disagrees with its closed form")
    return total


def solvable_set_count(l: int, spec) -> int:
    """Number of beta in F_q for which X^{p^{2l}} + X = -beta^{p^l} is solvable.

    Requires m/gcd(l, e) even; in the odd case the map is a permutation and the
    count is trivially q.
    """
    p, e = spec.p, spec.e
    s = gcd(l, e)
    if e % 2 or (e // s) % 2 or ((e // 2) // s) % 2:
        raise HypothesisError(f"count needs m/s even; got e={e}, l={l}, s={s}")
    fp = make_field(p, e)
    one = fp.const(1)
    return sum(1 for b in range(fp.q) if linearized_solve(one, l, fp.element(b), fp).solvable)

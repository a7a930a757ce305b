"""Arithmetic in F_p and F_q = F_{p^e}.

Elements of F_q are polynomials over Z_p of degree < e reduced modulo a fixed
monic irreducible polynomial.  Two representations are used:

* :class:`FqElement` -- the public value type, a tuple of ``e`` coefficients
  (coefficient of ``x^0`` first);
* an integer *index* ``sum(c_k * p**k)`` used by the table-driven fast paths.
  Under this encoding the embedded constants of F_p are exactly ``0 .. p-1``.

:class:`FieldParams` carries exp/log/trace tables built once per ``(p, e)``;
it is immutable and safe to share between worker processes.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ConsistencyError, ParameterError

__all__ = [
    "FqElement",
    "FieldParams",
    "LinearizedSolution",
    "make_field",
    "is_prime",
    "trace",
    "eta_p",
    "eta_q",
    "cyclotomic_class",
    "linearized_solve",
    "orbit_representatives",
    "eta_q_index",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomials over Z_p, lists of coefficients, low degree first.
# Only used while searching for the modulus and generator.
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, mod, p):
    e = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # mod is monic
    for k in range(len(out) - 1, e - 1, -1):
        c = out[k]
        if c:
            for j in range(e + 1):
                out[k - e + j] = (out[k - e + j] - c * mod[j]) % p
    return _trim(out[:e])


def _poly_powmod(a, n, mod, p):
    result = [1]
    base = list(a)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        n >>= 1
    return result


def _poly_divmod(a, b, p):
    a = _trim(list(a))
    b = _trim(list(b))
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = (a[-1] * inv) % p
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        _trim(a)
    return _trim(q), a


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b, p)
        a, b = b, r
    return a


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    """gcd(f, x^{p^k} - x) == 1 for every k <= e/2."""
    e = len(mod) - 1
    if e == 1:
        return True
    mod = list(mod)
    xpk = [0, 1]
    for _ in range(e // 2):
        xpk = _poly_powmod(xpk, p, mod, p)
        diff = list(xpk) + [0] * max(0, 2 - len(xpk))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(mod, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


def _has_order(g: list[int], mod, p: int, order: int) -> bool:
    if order == 1:
        return g == [1]
    if _poly_powmod(g, order, mod, p) != [1]:
        return False
    return all(_poly_powmod(g, order // r, mod, p) != [1] for r in _prime_factors(order))


# ---------------------------------------------------------------------------
# Public types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FqElement:
    """An element of F_q as its coefficient vector (x^0 first)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coeffs)) + ")"


@dataclass(frozen=True)
class FieldParams:
    """A concrete realization of F_{p^e}.

    Use :func:`make_field`; it validates its inputs and caches the result.
    The index-level methods (``add``, ``mul``, ``pow``, ...) operate on integer
    indices and accept numpy arrays where noted.
    """

    p: int
    e: int
    modulus: tuple[int, ...]  # monic, length e + 1
    generator: FqElement
    _digits: np.ndarray = field(repr=False, compare=False)
    _exp: np.ndarray = field(repr=False, compare=False)
    _log: np.ndarray = field(repr=False, compare=False)
    _trace: np.ndarray = field(repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.e

    # -- conversions -------------------------------------------------------
    def index(self, x: FqElement) -> int:
        if len(x.coeffs) != self.e or any(not 0 <= c < self.p for c in x.coeffs):
            raise ParameterError(f"{x} is not an element of F_{self.p}^{self.e}")
        return sum(c * self.p ** k for k, c in enumerate(x.coeffs))

    def element(self, idx: int) -> FqElement:
        return FqElement(tuple(int(c) for c in self._digits[idx]))

    def const(self, c: int) -> FqElement:
        """Embed c in F_p into F_q."""
        return self.element(c % self.p)

    def digits(self, idx):
        return self._digits[idx]

    def from_digits(self, d) -> np.ndarray | int:
        pw = self.p ** np.arange(self.e, dtype=np.int64)
        out = np.asarray(d, dtype=np.int64) @ pw
        return out if np.ndim(out) else int(out)

    def lex_key(self, idx):
        """Integer key ordering elements lexicographically, x^0 coefficient first."""
        pw = self.p ** np.arange(self.e - 1, -1, -1, dtype=np.int64)
        return self._digits[idx] @ pw

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # -- index-level arithmetic (scalars or arrays) ------------------------
    def add(self, a, b):
        s = (self._digits[a] + self._digits[b]) % self.p
        return self.from_digits(s)

    def neg(self, a):
        return self.from_digits((-self._digits[a]) % self.p)

    def sub(self, a, b):
        return self.from_digits((self._digits[a] - self._digits[b]) % self.p)

    def scale(self, c: int, a):
        return self.from_digits((c * self._digits[a]) % self.p)

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        out = np.where((a == 0) | (b == 0), 0, out)
        return out if out.ndim else int(out)

    def pow(self, a, n: int):
        a = np.asarray(a, dtype=np.int64)
        if n == 0:
            out = np.ones_like(a)
        else:
            out = self._exp[(self._log[a] * (n % (self.q - 1))) % (self.q - 1)]
            out = np.where(a == 0, 0, out)
        return out if out.ndim else int(out)

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("0 has no inverse in F_q")
        return self.pow(a, self.q - 2)

    def frob(self, a, k: int = 1):
        """x -> x^{p^k}."""
        return self.pow(a, pow(self.p, k, self.q - 1) or (self.q - 1))

    def tr(self, a):
        t = self._trace[a]
        return t if np.ndim(t) else int(t)

    def log(self, a):
        return self._log[a]

    def exp(self, k):
        return self._exp[np.asarray(k) % (self.q - 1)]


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int) -> FieldParams:
    """Deterministically build F_{p^e}.

    The modulus is the lexicographically smallest monic irreducible of degree
    ``e`` and the generator the lexicographically smallest primitive element,
    both ordered by coefficient vectors with the constant term compared first.
    """
    if not isinstance(p, int) or not is_prime(p) or p == 2:
        raise ParameterError(f"p must be an odd prime, got {p!r}")
    if not isinstance(e, int) or e < 1:
        raise ParameterError(f"e must be a positive integer, got {e!r}")
    q = p ** e

    modulus = None
    for low in itertools.product(range(p), repeat=e):
        cand = list(low) + [1]
        if _is_irreducible(cand, p):
            modulus = tuple(cand)
            break
    if modulus is None:
        raise ConsistencyError(f"no irreducible polynomial of degree {e} over F_{p}")

    gen = None
    for cand in itertools.product(range(p), repeat=e):
        if not any(cand):
            continue
        if _has_order(_trim(list(cand)), modulus, p, q - 1):
            gen = cand
            break
    if gen is None:
        raise ConsistencyError("no primitive element found")

    pw = [p ** k for k in range(e)]
    exp = np.zeros(q - 1, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    cur = [1]
    g = _trim(list(gen))
    for k in range(q - 1):
        v = sum(c * pw[j] for j, c in enumerate(cur))
        if log[v] != -1:
            raise ConsistencyError("generator is not primitive")
        exp[k] = v
        log[v] = k
        cur = _poly_mulmod(cur, g, modulus, p)

    digits = np.zeros((q, e), dtype=np.int64)
    rest = np.arange(q, dtype=np.int64)
    for k in range(e):
        digits[:, k] = rest % p
        rest //= p

    # Tr(x^k) for the basis monomials by summing Frobenius images; extend linearly.
    basis_tr = np.zeros(e, dtype=np.int64)
    for k in range(e):
        xk = _poly_powmod([0, 1], k, modulus, p) if k else [1]
        acc = [0] * e
        cur_frob = xk
        for _ in range(e):
            for j, c in enumerate(cur_frob):
                acc[j] = (acc[j] + c) % p
            cur_frob = _poly_powmod(cur_frob, p, modulus, p)
        if any(acc[1:]):
            raise ConsistencyError("trace left F_p")
        basis_tr[k] = acc[0]
    trace_tab = (digits @ basis_tr) % p

    for arr in (digits, exp, log, trace_tab):
        arr.setflags(write=False)
    return FieldParams(p, e, modulus, FqElement(gen), digits, exp, log, trace_tab)


# ---------------------------------------------------------------------------
# Element-level operations
# ---------------------------------------------------------------------------

def trace(x: FqElement, fp: FieldParams) -> int:
    """Absolute trace Tr(x) = x + x^p + ... + x^{p^{e-1}}."""
    return fp.tr(fp.index(x))


def eta_p(a: int, p: int) -> int:
    """Quadratic character of F_p, with eta(0) = 0."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def eta_q(x: FqElement, fp: FieldParams) -> int:
    """Quadratic character of F_q, evaluated as x^{(q-1)/2}."""
    idx = fp.index(x)
    if idx == 0:
        return 0
    v = fp.pow(idx, (fp.q - 1) // 2)
    if v == 1:
        return 1
    if v == fp.p - 1:
        return -1
    raise ConsistencyError("x^{(q-1)/2} is not +-1")


def eta_q_index(idx, fp: FieldParams):
    """Vectorized eta_q on indices, via the parity of the discrete log."""
    idx = np.asarray(idx, dtype=np.int64)
    out = np.where(fp.log(idx) % 2 == 0, 1, -1)
    out = np.where(idx == 0, 0, out)
    return out if out.ndim else int(out)


@functools.lru_cache(maxsize=None)
def cyclotomic_class(i: int, p: int) -> frozenset[int]:
    """C_0 = nonzero squares mod p, C_1 = non-squares."""
    if i not in (0, 1):
        raise ParameterError("cyclotomic class index must be 0 or 1")
    if not is_prime(p) or p == 2:
        raise ParameterError(f"p must be an odd prime, got {p}")
    squares = frozenset(x * x % p for x in range(1, p))
    return squares if i == 0 else frozenset(range(1, p)) - squares


# ---------------------------------------------------------------------------
# Linearized equations  alpha^{p^l} X^{p^{2l}} + alpha X = -beta^{p^l}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearizedSolution:
    """Solution set of an F_p-linear equation on F_q.

    ``representative`` is None when unsolvable; otherwise the full solution
    set is ``representative + span(kernel)``.
    """

    representative: FqElement | None
    kernel: tuple[FqElement, ...]
    p: int

    @property
    def solvable(self) -> bool:
        return self.representative is not None

    @property
    def unique(self) -> bool:
        return self.solvable and not self.kernel

    @property
    def kernel_size(self) -> int:
        return self.p ** len(self.kernel)

    @property
    def count(self) -> int:
        return self.kernel_size if self.solvable else 0


class _ReducedSystem:
    """Row reduction of an e x e matrix over F_p, kept for repeated solves."""

    def __init__(self, mat: list[list[int]], p: int):
        n = len(mat)
        aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
        pivots = []
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if aug[i][c] % p), None)
            if piv is None:
                continue
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = pow(aug[r][c], p - 2, p)
            aug[r] = [(v * inv) % p for v in aug[r]]
            for i in range(n):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [(vi - f * vr) % p for vi, vr in zip(aug[i], aug[r])]
            pivots.append(c)
            r += 1
        self.p = p
        self.n = n
        self.rank = r
        self.pivots = pivots
        self.reduced = [row[:n] for row in aug]
        self.transform = [row[n:] for row in aug]
        free = [c for c in range(n) if c not in pivots]
        kernel = []
        for f in free:
            v = [0] * n
            v[f] = 1
            for i, c in enumerate(pivots):
                v[c] = (-self.reduced[i][f]) % p
            kernel.append(v)
        self.kernel = kernel

    def solve(self, rhs: Sequence[int]) -> list[int] | None:
        p, n = self.p, self.n
        y = [sum(t * b for t, b in zip(row, rhs)) % p for row in self.transform]
        if any(y[self.rank:]):
            return None
        x = [0] * n
        for i, c in enumerate(self.pivots):
            x[c] = y[i]
        return x


@functools.lru_cache(maxsize=4096)
def _linearized_system(alpha_idx: int, l: int, fp: FieldParams) -> _ReducedSystem:
    coef = fp.frob(alpha_idx, l)
    cols = []
    for k in range(fp.e):
        basis = fp.p ** k
        image = fp.add(fp.mul(coef, fp.frob(basis, 2 * l)), fp.mul(alpha_idx, basis))
        cols.append([int(d) for d in fp.digits(image)])
    mat = [[cols[c][r] for c in range(fp.e)] for r in range(fp.e)]
    return _ReducedSystem(mat, fp.p)


def linearized_solve(alpha: FqElement, l: int, beta: FqElement, fp: FieldParams) -> LinearizedSolution:
    """Solve alpha^{p^l} X^{p^{2l}} + alpha X = -beta^{p^l} over F_q.

    The left side is F_p-linear in X; it is written as an e x e matrix over
    F_p by evaluating it on the monomial basis and solved by elimination.
    """
    a = fp.index(alpha)
    if a == 0:
        raise ParameterError("alpha must be nonzero")
    if l < 1:
        raise ParameterError("l must be a positive integer")
    system = _linearized_system(a, l, fp)
    rhs = fp.neg(fp.frob(fp.index(beta), l))
    x = system.solve([int(d) for d in fp.digits(rhs)])
    kernel = tuple(FqElement(tuple(v)) for v in system.kernel)
    if x is None:
        return LinearizedSolution(None, kernel, fp.p)
    return LinearizedSolution(FqElement(tuple(x)), kernel, fp.p)


def orbit_representatives(fp: FieldParams) -> np.ndarray:
    """g^k for 0 <= k < (q-1)/(p-1): one element of each coset of F_p^* in F_q^*."""
    return fp.exp(np.arange((fp.q - 1) // (fp.p - 1), dtype=np.int64))


def iter_elements(fp: FieldParams) -> Iterable[FqElement]:
    for idx in range(fp.q):
        yield fp.element(idx)

"""Defining sets D_i, the codes C_{D_i}, and exhaustive weight enumeration.

The enumerator is the ground truth the closed forms are checked against, so
it evaluates every codeword symbol Tr(a x1 + b x2) and counts zeros; the only
shortcut taken is the F_p^*-scaling symmetry wt(ta, tb) = wt(a, b) in
``mode="orbit"``.
"""

from __future__ import annotations

import logging
import os
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .analytic import length_formula
from .distribution import WeightDistribution
from .errors import BudgetExceeded, ConsistencyError, ParameterError
from .field import FieldParams, FqElement, cyclotomic_class, make_field, orbit_representatives
from .params import CodeSpec

log = logging.getLogger(__name__)

__all__ = [
    "Budget",
    "DefiningSet",
    "Codeword",
    "build_defining_set",
    "codeword",
    "codeword_weight_brute",
    "brute_weight_rows",
    "brute_distribution",
    "code_dimension",
    "default_workers",
]

THREADS_ENV = "TRACE_CODES_THREADS"


@dataclass(frozen=True)
class Budget:
    """Work limits for exhaustive enumeration.

    ``max_symbol_products`` bounds (codewords evaluated) x (code length); at
    roughly 1e9 symbol comparisons per second per core the default is a few
    seconds to a minute of work.  Every e <= 4, p <= 11 example fits easily;
    (p, e) = (3, 6) needs ``mode="orbit"`` and a raised limit.
    """

    max_symbol_products: int = 10 ** 10
    max_defining_set: int = 5 * 10 ** 6


def default_workers() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ParameterError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        if n < 1:
            raise ParameterError(f"{THREADS_ENV} must be positive")
        return n
    return 1


@dataclass(frozen=True)
class DefiningSet:
    """Points (x1_j, x2_j) of D_i as parallel index arrays, in lexicographic order."""

    spec: CodeSpec
    fp: FieldParams = field(repr=False)
    x1: np.ndarray = field(repr=False)
    x2: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.x1)

    @property
    def points(self) -> list[tuple[FqElement, FqElement]]:
        return [(self.fp.element(int(a)), self.fp.element(int(b))) for a, b in zip(self.x1, self.x2)]


@dataclass(frozen=True)
class Codeword:
    a: FqElement
    b: FqElement
    symbols: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(1 for s in self.symbols if s)


def build_defining_set(spec: CodeSpec, fp: FieldParams | None = None, budget: Budget = Budget()) -> DefiningSet:
    """All (x1, x2) with Tr(x1^{p^l+1}) = 1 and Tr(x2) in C_i.

    Both conditions are checked over all of F_q; since they constrain x1 and
    x2 separately, D_i is the product of the two solution sets.
    """
    fp = fp or make_field(spec.p, spec.e)
    if (fp.p, fp.e) != (spec.p, spec.e):
        raise ParameterError("field does not match the code parameters")
    xs = fp.elements()
    first = xs[fp.tr(fp.pow(xs, fp.p ** spec.l + 1)) == 1]
    cls = np.array(sorted(cyclotomic_class(spec.i, spec.p)))
    second = xs[np.isin(fp.tr(xs), cls)]
    size = len(first) * len(second)
    if size > budget.max_defining_set:
        raise BudgetExceeded(f"defining set has {size} points, budget is {budget.max_defining_set}")
    first = first[np.argsort(fp.lex_key(first), kind="stable")]
    second = second[np.argsort(fp.lex_key(second), kind="stable")]
    x1 = np.repeat(first, len(second))
    x2 = np.tile(second, len(first))

    if spec.admissible:
        expected = length_formula(spec)
        if size != expected:
            raise ConsistencyError(f"|D_{spec.i}| = {size} but the length formula gives {expected}")
    else:
        warnings.warn("length not cross-checked: parameters outside the proven range", stacklevel=2)
    for arr in (x1, x2):
        arr.setflags(write=False)
    return DefiningSet(spec, fp, x1, x2)


def codeword(a: FqElement, b: FqElement, D: DefiningSet) -> Codeword:
    fp = D.fp
    ai, bi = fp.index(a), fp.index(b)
    vals = fp.add(fp.mul(ai, D.x1), fp.mul(bi, D.x2))
    return Codeword(a, b, tuple(int(s) for s in fp.tr(vals)))


def codeword_weight_brute(a: FqElement, b: FqElement, D: DefiningSet) -> int:
    """Number of positions with Tr(a x1_j + b x2_j) != 0."""
    fp = D.fp
    vals = fp.add(fp.mul(fp.index(a), D.x1), fp.mul(fp.index(b), D.x2))
    return int(np.count_nonzero(fp.tr(vals)))


# ---------------------------------------------------------------------------
# Bulk enumeration.  For a block of a values, Tr(a x1_j) is an (a, j) table and
# Tr(b x2_j) a (b, j) table; since Tr is additive, symbol (a, b, j) is their sum
# mod p and a row of weights over all b needs one comparison per entry.
# ---------------------------------------------------------------------------

def _trace_pairing(fp: FieldParams, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Tr(left[r] * right[j]) as an int8 matrix."""
    out = np.empty((len(left), len(right)), dtype=np.int8)
    for r, v in enumerate(left):
        out[r] = fp.tr(fp.mul(int(v), right))
    return out


_WORKER: dict = {}


def _init_worker(fp: FieldParams, x1: np.ndarray, x2: np.ndarray) -> None:
    _WORKER["fp"] = fp
    _WORKER["x1"] = x1
    _WORKER["right"] = _trace_pairing(fp, fp.elements(), x2)


def _rows(a_values: np.ndarray) -> np.ndarray:
    fp, x1, right = _WORKER["fp"], _WORKER["x1"], _WORKER["right"]
    n = right.shape[1]
    left = _trace_pairing(fp, a_values, x1)
    target = (-left.astype(np.int16)) % fp.p
    out = np.empty((len(a_values), right.shape[0]), dtype=np.int64)
    for r in range(len(a_values)):
        out[r] = n - np.count_nonzero(right == target[r].astype(np.int8), axis=1)
    return out


def _histogram_block(args) -> dict[int, int]:
    a_values, multiplier = args
    hist: Counter = Counter()
    weights = _rows(a_values)
    vals, cnt = np.unique(weights, return_counts=True)
    for w, c in zip(vals.tolist(), cnt.tolist()):
        hist[w] += c * multiplier
    return dict(hist)


def _blocks(values: np.ndarray, size: int) -> list[np.ndarray]:
    return [values[k:k + size] for k in range(0, len(values), size)]


def brute_weight_rows(D: DefiningSet, a_values) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (a, weights of c(a, b) for every b index) for each requested a."""
    _init_worker(D.fp, D.x1, D.x2)
    try:
        for block in _blocks(np.asarray(a_values, dtype=np.int64), 64):
            for a, row in zip(block.tolist(), _rows(block)):
                yield a, row
    finally:
        _WORKER.clear()


def _work_plan(fp: FieldParams, mode: str) -> list[tuple[np.ndarray, int]]:
    if mode == "full":
        return [(fp.elements(), 1)]
    if mode == "orbit":
        reps = orbit_representatives(fp)
        return [(np.array([0], dtype=np.int64), 1), (reps, fp.p - 1)]
    raise ParameterError(f"mode must be 'full' or 'orbit', got {mode!r}")


def brute_distribution(
    spec: CodeSpec,
    fp: FieldParams | None = None,
    mode: str = "full",
    budget: Budget = Budget(),
    workers: int | None = None,
    D: DefiningSet | None = None,
) -> WeightDistribution:
    """Weight distribution of C_{D_i} by evaluating every codeword.

    Work is split into blocks of a values; per-block histograms are summed, so
    the result does not depend on the number of workers.
    """
    fp = fp or make_field(spec.p, spec.e)
    plan = _work_plan(fp, mode)
    rows = sum(len(a) for a, _ in plan)
    if D is None:
        D = build_defining_set(spec, fp, budget)
    work = rows * fp.q * len(D)
    if work > budget.max_symbol_products:
        hint = " try mode='orbit' or the analytic method" if mode == "full" else " use the analytic method"
        raise BudgetExceeded(f"{work:.3g} symbol evaluations exceed the budget of "
                             f"{budget.max_symbol_products:.3g};{hint}")
    workers = workers or default_workers()
    block = max(1, min(256, rows // (4 * workers) or 1))
    tasks = [(b, mult) for a_values, mult in plan for b in _blocks(a_values, block)]
    log.info("enumerating %d codewords (%s mode, %d workers)", rows * fp.q, mode, workers)

    total: Counter = Counter()
    if workers == 1:
        _init_worker(fp, D.x1, D.x2)
        try:
            for t in tasks:
                total.update(_histogram_block(t))
        finally:
            _WORKER.clear()
    else:
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(fp, D.x1, D.x2)) as pool:
            for h in pool.map(_histogram_block, tasks):
                total.update(h)
    dist = WeightDistribution.from_counts(total)
    if dist.total != fp.q ** 2:
        raise ConsistencyError(f"enumerated {dist.total} codewords, expected {fp.q ** 2}")
    return dist


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if not len(nz):
            continue
        piv = r + nz[0]
        a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if len(others):
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        r += 1
    return r


def code_dimension(spec: CodeSpec, fp: FieldParams | None = None, D: DefiningSet | None = None,
                   dist: WeightDistribution | None = None) -> int:
    """Dimension of C_{D_i} over F_p.

    With a distribution, the kernel of (a, b) -> c(a, b) has A_0 elements and
    k = 2e - log_p(A_0).  Otherwise the rank of the 2e x n generator matrix
    (rows Tr(x^k x1_j) and Tr(x^k x2_j)) is computed.  The construction claims
    k = 2e; a smaller value is returned as is.
    """
    fp = fp or make_field(spec.p, spec.e)
    if dist is not None:
        zeros = dist.multiplicity(0)
        k, rem = 2 * spec.e, zeros
        while rem > 1 and rem % spec.p == 0:
            rem //= spec.p
            k -= 1
        if rem != 1:
            raise ConsistencyError(f"A_0 = {zeros} is not a power of p")
        return k
    D = D if D is not None else build_defining_set(spec, fp)
    basis = np.array([fp.p ** k for k in range(fp.e)], dtype=np.int64)
    gen = np.vstack([
        _trace_pairing(fp, basis, D.x1),
        _trace_pairing(fp, basis, D.x2),
    ])
    return _rank_mod_p(gen, fp.p)

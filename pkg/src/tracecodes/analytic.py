"""Closed-form weights and weight distributions of C_{D_i}.

A codeword c(a, b) has weight n_i - T_i, where T_i counts the coordinates on
which it vanishes.  T_i depends only on a coarse classification of (a, b):

* whether a and b vanish and whether b lies in the prime subfield;
* for a != 0, the solvability of X^{p^{2l}} + X = -a^{p^l} and the quadratic
  class of Tr(gamma^{p^l+1}) for a solution gamma.

``t_value`` maps each class to T_i; ``theoretical_distribution`` evaluates the
two weight tables (m/s odd, m/s even) in integer arithmetic.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .distribution import WeightDistribution
from .errors import ConsistencyError, ParameterError
from .field import (
    FieldParams,
    FqElement,
    cyclotomic_class,
    linearized_solve,
    make_field,
    orbit_representatives,
)
from .params import CodeSpec

__all__ = [
    "AClass",
    "BClass",
    "EquationStatus",
    "GammaTrace",
    "WeightCase",
    "TheoryRow",
    "PlessReport",
    "length_formula",
    "classify_codeword",
    "t_value",
    "analytic_weight",
    "analytic_distribution",
    "theory_rows",
    "theoretical_distribution",
    "pless_check",
]


class AClass(str, enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"


class BClass(str, enum.Enum):
    ZERO = "zero"
    PRIME = "in F_p^*"
    EXTENSION = "in F_q^* minus F_p^*"


class EquationStatus(str, enum.Enum):
    UNIQUE = "permutation-unique-solution"
    KERNEL = "solvable-with-kernel"
    UNSOLVABLE = "unsolvable"
    NA = "not-applicable"


class GammaTrace(str, enum.Enum):
    ZERO = "zero"
    C0 = "in C_0"
    C1 = "in C_1"
    NA = "not-applicable"


@dataclass(frozen=True)
class WeightCase:
    a_class: AClass
    b_class: BClass
    equation_status: EquationStatus
    gamma_trace_class: GammaTrace

    def __post_init__(self):
        no_gamma = self.equation_status in (EquationStatus.UNSOLVABLE, EquationStatus.NA)
        if no_gamma != (self.gamma_trace_class is GammaTrace.NA):
            raise ParameterError(f"inconsistent case {self}")
        if (self.a_class is AClass.ZERO) != (self.equation_status is EquationStatus.NA):
            raise ParameterError(f"inconsistent case {self}")


@dataclass(frozen=True)
class TheoryRow:
    weight: int
    multiplicity: int


def _half(n: int) -> int:
    """n / 2 for an n that must be even."""
    h, r = divmod(n, 2)
    if r:
        raise ConsistencyError(f"{n} is not divisible by 2")
    return h


def length_formula(spec: CodeSpec) -> int:
    """n_i = (p-1)/2 (p^{2e-2} + p^{e+r-2}), r = m or m+s by the parity of m/s."""
    spec.require_admissible()
    p, e = spec.p, spec.e
    return (p - 1) // 2 * (p ** (2 * e - 2) + p ** (e + spec.shift - 2))


# ---------------------------------------------------------------------------
# Per-codeword classification
# ---------------------------------------------------------------------------

def _b_class(b: int, p: int) -> BClass:
    # F_p sits in F_q as the constant polynomials, i.e. indices 0..p-1
    if b == 0:
        return BClass.ZERO
    return BClass.PRIME if b < p else BClass.EXTENSION


def _a_case(a: int, spec: CodeSpec, fp: FieldParams) -> tuple[EquationStatus, GammaTrace]:
    if a == 0:
        return EquationStatus.NA, GammaTrace.NA
    sol = linearized_solve(fp.const(1), spec.l, fp.element(a), fp)
    if spec.parity == 1:
        if not sol.unique:
            raise ConsistencyError("X^{p^{2l}} + X is not a permutation although m/s is odd")
        status = EquationStatus.UNIQUE
    elif not sol.solvable:
        return EquationStatus.UNSOLVABLE, GammaTrace.NA
    else:
        status = EquationStatus.KERNEL
    gamma = fp.index(sol.representative)
    t = fp.tr(fp.pow(gamma, spec.p ** spec.l + 1))
    if t == 0:
        return status, GammaTrace.ZERO
    return status, GammaTrace.C0 if t in cyclotomic_class(0, spec.p) else GammaTrace.C1


def classify_codeword(a: FqElement, b: FqElement, spec: CodeSpec, fp: FieldParams | None = None) -> WeightCase:
    spec.require_admissible()
    fp = fp or make_field(spec.p, spec.e)
    ai, bi = fp.index(a), fp.index(b)
    status, gamma = _a_case(ai, spec, fp)
    return WeightCase(AClass.ZERO if ai == 0 else AClass.NONZERO, _b_class(bi, spec.p), status, gamma)


def t_value(case: WeightCase, spec: CodeSpec) -> int:
    """Number of zero coordinates of a codeword in the given case."""
    spec.require_admissible()
    p, e, r = spec.p, spec.e, spec.shift
    h = (p - 1) // 2
    if case.a_class is AClass.ZERO:
        if case.b_class is BClass.ZERO:
            return length_formula(spec)
        if case.b_class is BClass.PRIME:
            return 0
        return h * (p ** (2 * e - 3) + p ** (e + r - 3))

    if spec.parity == 1:
        allowed = {EquationStatus.UNIQUE}
    else:
        allowed = {EquationStatus.KERNEL, EquationStatus.UNSOLVABLE}
    if case.equation_status not in allowed:
        raise ParameterError(f"case {case.equation_status.value} does not match m/s parity {spec.parity}")

    if case.b_class is BClass.EXTENSION or case.equation_status is EquationStatus.UNSOLVABLE:
        return h * (p ** (2 * e - 3) + p ** (e + r - 3))
    non_square = case.gamma_trace_class is GammaTrace.C1
    if case.b_class is BClass.ZERO:
        if non_square:
            return h * (p ** (2 * e - 3) - p ** (e + r - 2))
        return h * (p ** (2 * e - 3) + p ** (e + r - 2))
    # b in F_p^*; a zero trace is folded into C_0
    if non_square:
        return h * p ** (2 * e - 3) + p ** (e + r - 2)
    return h * p ** (2 * e - 3)


def analytic_weight(a: FqElement, b: FqElement, spec: CodeSpec, fp: FieldParams | None = None) -> int:
    return length_formula(spec) - t_value(classify_codeword(a, b, spec, fp), spec)


def analytic_distribution(spec: CodeSpec, fp: FieldParams | None = None, per_pair: bool = False) -> WeightDistribution:
    """Weight distribution from the per-codeword closed form.

    The case of (a, b) splits into a part depending on a only and the class of
    b, so the default path classifies each F_p^*-orbit of a once and combines
    with the three b-class sizes.  ``per_pair=True`` instead evaluates
    ``analytic_weight`` for every (a, b) and is meant for small fields.
    """
    spec.require_admissible()
    fp = fp or make_field(spec.p, spec.e)
    n = length_formula(spec)
    counts: Counter = Counter()
    if per_pair:
        for a in range(fp.q):
            A = fp.element(a)
            for b in range(fp.q):
                counts[analytic_weight(A, fp.element(b), spec, fp)] += 1
        return WeightDistribution.from_counts(counts)

    p, q = spec.p, fp.q
    b_sizes = {BClass.ZERO: 1, BClass.PRIME: p - 1, BClass.EXTENSION: q - p}
    a_cases: Counter = Counter({(AClass.ZERO, EquationStatus.NA, GammaTrace.NA): 1})
    for a in orbit_representatives(fp):
        a_cases[(AClass.NONZERO,) + _a_case(a, spec, fp)] += p - 1
    for (ac, status, gamma), na in a_cases.items():
        for bc, nb in b_sizes.items():
            counts[n - t_value(WeightCase(ac, bc, status, gamma), spec)] += na * nb
    return WeightDistribution.from_counts(counts)


# ---------------------------------------------------------------------------
# Weight tables
# ---------------------------------------------------------------------------

def theory_rows(spec: CodeSpec) -> list[TheoryRow]:
    """All seven rows (weight 0 first) of the applicable table, unmerged.

    Multiplicities are written as sums of nonnegative integer powers of p; in
    particular p^e (p^e - p^{1-2s}) is evaluated as p^{2e} - p^{e+1-2s}.
    """
    spec.require_admissible()
    p, e, m = spec.p, spec.e, spec.m
    n = length_formula(spec)
    if spec.parity == 1:
        r = m
        big = p ** e * (p ** e - p)
        u, v = e, m  # exponents in the x/y multiplicities
    else:
        r = m + spec.s
        big = p ** (2 * e) - p ** (e + 1 - 2 * spec.s)
        u, v = e - 2 * spec.s, m - spec.s
    base = _half((p - 1) ** 2 * p ** (2 * e - 3))
    x = _half(p ** u + p ** (u - 1) - p ** v + p ** (v - 1) - 2)
    y = _half(p ** u - p ** (u - 1) + p ** v - p ** (v - 1))
    rows = [
        TheoryRow(0, 1),
        TheoryRow(n, p - 1),
        TheoryRow(_half((p - 1) ** 2 * (p ** (2 * e - 3) + p ** (e + r - 3))), big),
        TheoryRow(base, x),
        TheoryRow(base + (p - 1) * p ** (e + r - 2), y),
        TheoryRow(base + _half((p - 1) * p ** (e + r - 2)), (p - 1) * x),
        TheoryRow(base + _half((p - 3) * p ** (e + r - 2)), (p - 1) * y),
    ]
    for row in rows:
        if row.multiplicity < 0:
            raise ConsistencyError(f"negative multiplicity in table row {row}")
    return rows


def theoretical_distribution(spec: CodeSpec) -> WeightDistribution:
    """The closed-form table with equal weights merged and empty rows dropped."""
    return WeightDistribution.from_counts((r.weight, r.multiplicity) for r in theory_rows(spec))


@dataclass(frozen=True)
class PlessReport:
    residuals: tuple[int, int, int]

    @property
    def passed(self) -> bool:
        return self.residuals == (0, 0, 0)

    def __str__(self):
        return "pass" if self.passed else f"fail (residuals {self.residuals})"


def pless_check(dist: WeightDistribution, n: int, spec: CodeSpec) -> PlessReport:
    """First three power moments for a [n, 2e] code over F_p whose dual has distance >= 3."""
    p, k = spec.p, 2 * spec.e
    nz = dist.nonzero
    m0 = sum(a for _, a in nz) - (p ** k - 1)
    m1 = sum(w * a for w, a in nz) - p ** (k - 1) * (p - 1) * n
    m2 = sum(w * w * a for w, a in nz) - p ** (k - 2) * (p - 1) * n * (p * n - n + 1)
    return PlessReport((m0, m1, m2))

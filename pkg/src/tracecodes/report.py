"""Run the weight-distribution methods side by side and serialize the result."""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field

from .analytic import analytic_distribution, length_formula, pless_check, theoretical_distribution
from .bounds import Optimality, classify_optimality
from .construction import Budget, brute_distribution, build_defining_set, code_dimension
from .distribution import WeightDistribution
from .errors import BudgetExceeded, ParameterError
from .field import make_field
from .params import CodeSpec

__all__ = ["METHODS", "Check", "CodeReport", "run_report", "distribution_csv"]

METHODS = ("brute", "analytic", "theory")

TABLE_NOTE = (
    "optimality is classified against the Griesmer bound only; "
    "tables of best known codes are not consulted"
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class CodeReport:
    spec: CodeSpec
    length: int | None = None
    dimension: int | None = None
    distribution: WeightDistribution | None = None
    methods: list[str] = field(default_factory=list)
    distributions: dict[str, WeightDistribution] = field(default_factory=dict)
    griesmer_class: Optimality | None = None
    checks: list[Check] = field(default_factory=list)
    refusals: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def min_distance(self) -> int | None:
        return self.distribution.min_distance if self.distribution else None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        if not self.passed:
            return 1
        if self.distribution is None:
            return 3
        return 0

    def as_dict(self) -> dict:
        n, k, d = self.length, self.dimension, self.min_distance
        return {
            "params": {**self.spec.as_dict(), "n": n, "k": k, "d": d},
            "length": n,
            "dimension": k,
            "min_distance": d,
            "distribution": [list(e) for e in self.distribution.entries] if self.distribution else None,
            "enumerator": self.distribution.enumerator() if self.distribution else None,
            "methods": list(self.methods),
            "griesmer_class": self.griesmer_class.value if self.griesmer_class else None,
            "checks": [c.as_dict() for c in self.checks],
            "refusals": dict(self.refusals),
            "notes": list(self.notes),
            "status": "ok" if self.passed else "failed",
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def distribution_csv(dist: WeightDistribution) -> str:
    """CSV with header ``weight,multiplicity``; the weight-0 row is omitted."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "multiplicity"])
    for weight, mult in dist.nonzero:
        w.writerow([weight, mult])
    return buf.getvalue()


def _brute(spec, fp, D, budget, workers, mode):
    modes = ("full", "orbit") if mode == "auto" else (mode,)
    last = None
    for m in modes:
        try:
            return brute_distribution(spec, fp, mode=m, budget=budget, workers=workers, D=D), m
        except BudgetExceeded as exc:
            last = exc
    raise last


def run_report(
    spec: CodeSpec,
    methods=METHODS,
    budget: Budget = Budget(),
    workers: int | None = None,
    brute_mode: str = "auto",
) -> CodeReport:
    """Compute the requested distributions, cross-check them and classify the code.

    A method that would exceed the budget is recorded under ``refusals`` and the
    remaining methods still run.  Output is independent of ``workers``.
    """
    unknown = set(methods) - set(METHODS)
    if unknown:
        raise ParameterError(f"unknown methods {sorted(unknown)}")
    methods = [m for m in METHODS if m in set(methods)]
    if not methods:
        raise ParameterError(f"at least one method from {METHODS} is required")
    if not spec.admissible and methods != ["brute"]:
        spec.require_admissible()

    report = CodeReport(spec)
    fp = make_field(spec.p, spec.e)
    D = None
    if "brute" in methods:
        try:
            D = build_defining_set(spec, fp, budget)
        except BudgetExceeded as exc:
            report.refusals["brute"] = str(exc)

    for method in methods:
        if method in report.refusals:
            continue
        try:
            if method == "brute":
                dist, used = _brute(spec, fp, D, budget, workers, brute_mode)
                if used != "full":
                    report.notes.append(f"brute force used {used} mode")
            elif method == "analytic":
                dist = analytic_distribution(spec, fp)
            else:
                dist = theoretical_distribution(spec)
        except BudgetExceeded as exc:
            report.refusals[method] = str(exc)
            continue
        report.distributions[method] = dist
        report.methods.append(method)

    if not report.distributions:
        return report
    report.distribution = report.distributions[report.methods[0]]

    n = length_formula(spec) if spec.admissible else len(D)
    report.length = n
    if D is not None:
        report.checks.append(Check("length", len(D) == n, f"|D| = {len(D)}, formula n = {n}"))
        k = code_dimension(spec, fp, D=D)
    else:
        k = code_dimension(spec, fp, dist=report.distribution)
    report.dimension = k
    report.checks.append(Check("dimension", k == 2 * spec.e, f"k = {k}, expected 2e = {2 * spec.e}"))

    for method in report.methods:
        dist = report.distributions[method]
        report.checks.append(Check(f"total[{method}]", dist.total == spec.p ** (2 * spec.e),
                                   f"sum of multiplicities {dist.total}"))
        pless = pless_check(dist, n, spec)
        report.checks.append(Check(f"pless[{method}]", pless.passed, f"residuals {list(pless.residuals)}"))
    for m1, m2 in itertools.combinations(report.methods, 2):
        diff = report.distributions[m1].diff(report.distributions[m2])
        detail = "identical" if not diff else "differ at " + ", ".join(
            f"w={w}: {a} vs {b}" for w, (a, b) in diff.items())
        report.checks.append(Check(f"agreement[{m1}={m2}]", not diff, detail))

    d = report.min_distance
    if d is not None and k >= 1:
        report.griesmer_class = classify_optimality(n, k, d, spec.p)
    report.notes.append(TABLE_NOTE)
    return report

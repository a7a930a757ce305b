"""Griesmer bound and a Griesmer-relative optimality classification."""

from __future__ import annotations

import enum

from .errors import ParameterError

__all__ = ["Optimality", "griesmer_lower_bound", "classify_optimality"]


class Optimality(str, enum.Enum):
    GRIESMER_OPTIMAL = "griesmer-optimal"
    ALMOST_OPTIMAL = "almost-optimal"
    NEITHER = "neither"


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def griesmer_lower_bound(k: int, d: int, q: int) -> int:
    """Smallest length allowed by the Griesmer bound: sum_{i<k} ceil(d / q^i)."""
    if k < 1 or d < 1 or q < 2:
        raise ParameterError(f"need k >= 1, d >= 1, q >= 2; got k={k}, d={d}, q={q}")
    return sum(_ceil_div(d, q ** i) for i in range(k))


def classify_optimality(n: int, k: int, d: int, q: int) -> Optimality:
    """Classify an [n, k, d]_q code against the Griesmer bound only.

    griesmer-optimal: no [n, k, d+1] code can satisfy the bound.
    almost-optimal: an [n, k, d+1] code is not excluded but [n, k, d+2] is.
    This is weaker than optimality with respect to tables of best known
    codes, which are not consulted.
    """
    if n < 1 or k < 1 or d < 1:
        raise ParameterError(f"invalid code parameters [{n}, {k}, {d}]")
    if griesmer_lower_bound(k, d + 1, q) > n:
        return Optimality.GRIESMER_OPTIMAL
    if griesmer_lower_bound(k, d + 2, q) > n:
        return Optimality.ALMOST_OPTIMAL
    return Optimality.NEITHER

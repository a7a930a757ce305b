"""Weight distributions as sorted (weight, multiplicity) lists."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ConsistencyError


@dataclass(frozen=True)
class WeightDistribution:
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ws = [w for w, _ in self.entries]
        if ws != sorted(set(ws)):
            raise ConsistencyError("weights must be strictly increasing")
        if any(a <= 0 for _, a in self.entries):
            raise ConsistencyError("multiplicities must be positive")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> WeightDistribution:
        c: Counter = Counter()
        items = counts.items() if isinstance(counts, Mapping) else counts
        for w, a in items:
            c[int(w)] += int(a)
        return cls(tuple(sorted((w, a) for w, a in c.items() if a)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(a for _, a in self.entries)

    @property
    def nonzero(self) -> tuple[tuple[int, int], ...]:
        return tuple((w, a) for w, a in self.entries if w > 0)

    @property
    def min_distance(self) -> int | None:
        nz = self.nonzero
        return nz[0][0] if nz else None

    @property
    def num_weights(self) -> int:
        return len(self.nonzero)

    def multiplicity(self, w: int) -> int:
        return self.as_dict().get(w, 0)

    def enumerator(self) -> str:
        """The weight enumerator as '1+12z^6+...'."""
        parts = []
        for w, a in self.entries:
            parts.append(str(a) if w == 0 else f"{a}z^{w}")
        return "+".join(parts)

    def diff(self, other: WeightDistribution) -> dict[int, tuple[int, int]]:
        """Weights whose multiplicities differ, mapped to (self, other)."""
        a, b = self.as_dict(), other.as_dict()
        return {w: (a.get(w, 0), b.get(w, 0)) for w in sorted(set(a) | set(b)) if a.get(w, 0) != b.get(w, 0)}

    def __str__(self):
        return self.enumerator()

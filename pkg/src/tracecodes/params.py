"""Code parameters (p, e, l, i) and the hypotheses the closed forms need."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from math import gcd

from .errors import HypothesisError, ParameterError
from .field import is_prime


class UnprovenParametersWarning(UserWarning):
    """Parameters outside the range where the closed-form tables hold."""


@dataclass(frozen=True)
class CodeSpec:
    """Parameters of the codes C_{D_i}.

    With ``strict=True`` (the default) every hypothesis of the closed forms is
    enforced: p = 3 mod 4, e = 2m even and e/gcd(l, e) even.  ``strict=False``
    keeps only the structural checks (p an odd prime, e, l >= 1, i in {0, 1})
    and warns; such specs can be enumerated but every closed form refuses them.
    """

    p: int
    e: int
    l: int
    i: int = 0
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        for name in ("p", "e", "l", "i"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise ParameterError(f"{name} must be an integer")
        if not is_prime(self.p) or self.p == 2:
            raise ParameterError(f"p must be an odd prime, got {self.p}")
        if self.e < 1 or self.l < 1:
            raise ParameterError("e and l must be positive integers")
        if self.i not in (0, 1):
            raise ParameterError(f"i must be 0 or 1, got {self.i}")
        problems = self.violations()
        if problems:
            if self.strict:
                raise HypothesisError("; ".join(problems))
            warnings.warn("; ".join(problems), UnprovenParametersWarning, stacklevel=2)

    def violations(self) -> list[str]:
        out = []
        if self.p % 4 != 3:
            out.append(f"p = {self.p} is not 3 mod 4")
        if self.e % 2:
            out.append(f"e = {self.e} is odd")
        elif (self.e // self.s) % 2:
            out.append(f"e/gcd(l, e) = {self.e // self.s} is odd")
        return out

    @property
    def admissible(self) -> bool:
        return not self.violations()

    def require_admissible(self) -> None:
        problems = self.violations()
        if problems:
            raise HypothesisError("closed form refused: " + "; ".join(problems))

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def m(self) -> int:
        return self.e // 2

    @property
    def s(self) -> int:
        return gcd(self.l, self.e)

    @property
    def parity(self) -> int:
        """m/s mod 2 (1: permutation case, 0: kernel case)."""
        return (self.m // self.s) % 2

    @property
    def shift(self) -> int:
        """Exponent offset r in the case tables: m when m/s is odd, m + s when even."""
        return self.m if self.parity else self.m + self.s

    def as_dict(self) -> dict:
        d = {"p": self.p, "e": self.e, "l": self.l, "i": self.i, "q": self.q, "s": self.s}
        if self.e % 2 == 0:
            d["m"] = self.m
        return d

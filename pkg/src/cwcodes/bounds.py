"""Johnson-type upper bounds on A_q(n, d, w), evaluated exactly."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import CodeParams, johnson_t

__all__ = ["BoundValue", "johnson_t", "johnson_bound", "main_term"]


@dataclass(frozen=True)
class BoundValue:
    numerator: int
    denominator: int

    def __post_init__(self):
        f = Fraction(self.numerator, self.denominator)
        object.__setattr__(self, "numerator", f.numerator)
        object.__setattr__(self, "denominator", f.denominator)

    @classmethod
    def of(cls, f: Fraction) -> "BoundValue":
        return cls(f.numerator, f.denominator)

    @property
    def floor_value(self) -> int:
        return self.numerator // self.denominator

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.floor_value} ({self.numerator}/{self.denominator})"


def johnson_bound(p: CodeParams) -> BoundValue:
    """(q-1)^t C(n,t) / C(w,t) for odd d; exponent t-1 for even d."""
    t = p.t
    exp = t - 1 if p.even else t
    return BoundValue((p.q - 1) ** exp * comb(p.n, t), comb(p.w, t))


def main_term(p: CodeParams) -> BoundValue:
    """Leading term of the asymptotic for even d; coincides with the even bound."""
    if not p.even:
        raise ValueError(f"main term is defined for even d only, got d={p.d}")
    t = p.t
    value = BoundValue((p.q - 1) ** (t - 1) * comb(p.n, t), comb(p.w, t))
    assert value == johnson_bound(p)
    return value

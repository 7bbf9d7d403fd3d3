"""Degree criterion for uniqueness of a generic covering given its branch curve.

A covering of degree ``m`` is determined by its branch curve when
``m > 4(3d+g-1) / (2(3d+g-1) - c)``. The bound is kept as an unreduced
integer fraction; every comparison is a cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .invariants import BranchInvariants, SurfaceModel


@dataclass(frozen=True)
class BoundValue:
    numerator: int
    denominator: int

    @property
    def defined(self) -> bool:
        return self.denominator > 0

    def as_fraction(self) -> Fraction:
        if not self.defined:
            raise ValueError("bound has a non-positive denominator")
        return Fraction(self.numerator, self.denominator)

    def floor(self) -> int:
        if not self.defined:
            raise ValueError("bound has a non-positive denominator")
        return self.numerator // self.denominator

    def to_dict(self) -> dict:
        return {"num": self.numerator, "den": self.denominator, "defined": self.defined}


def kulikov_bound(b: BranchInvariants) -> BoundValue:
    x = 3 * b.d + b.g - 1
    return BoundValue(numerator=4 * x, denominator=2 * x - b.c)


def criterion_holds(m: int, b: BranchInvariants) -> bool:
    """True when ``m`` strictly exceeds a defined bound.

    Equality does not count: both exceptional degree-4 families sit exactly
    on the bound. An undefined bound also gives ``False``; callers that care
    should check :attr:`BoundValue.defined` first.
    """
    if m < 3:
        raise ValueError(f"degree m={m} is below 3")
    bound = kulikov_bound(b)
    if not bound.defined:
        return False
    return m * bound.denominator > bound.numerator


def polynomial_form(model: SurfaceModel) -> int:
    """The criterion rewritten in ``P^3`` model coordinates.

    Positive exactly when :func:`criterion_holds` is true for the derived
    branch curve (wherever the bound is defined).
    """
    m, dbar, u, gbar, t = model.astuple()
    return (m - 2) * (m * (m - 1) * (m - 2) - (7 * m - 24) * dbar - 8 * (u - gbar)) + 3 * (
        5 * m - 12
    ) * t


def violates_polynomial(model: SurfaceModel) -> bool:
    return polynomial_form(model) <= 0


def nemirovski_bound_check(b: BranchInvariants) -> bool:
    """Whether the defined bound is below 12."""
    bound = kulikov_bound(b)
    if not bound.defined:
        raise ValueError(f"bound undefined for {b}: denominator {bound.denominator}")
    return 12 * bound.denominator > bound.numerator

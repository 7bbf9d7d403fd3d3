"""Imported theorems, used as guarded axioms.

Each entry states an external result in one line, names its source, and
carries a guard saying where the audit is allowed to invoke it. A filter is
never consulted outside its guard, and every elimination records the id of
the axiom that produced it.

Roles:

``filter``
    may eliminate a tuple during a sweep;
``delegation``
    covers degrees the sweep does not enumerate;
``fibered``
    consulted only while listing competing covering degrees;
``assumption``
    background hypothesis; its guard is always false so it never fires.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable

from .criterion import criterion_holds, kulikov_bound
from .invariants import (
    BranchInvariants,
    ChernPair,
    SurfaceModel,
    chern_from_model,
    derive_branch,
    dual_degree,
)

ARITHMETIC = "arithmetic-infeasibility"


@dataclass(frozen=True)
class TupleContext:
    """Everything a guard may look at for one tuple."""

    m: int
    model: SurfaceModel | None
    branch: BranchInvariants
    chern: ChernPair

    @classmethod
    def from_model(cls, model: SurfaceModel) -> "TupleContext":
        return cls(model.m, model, derive_branch(model), chern_from_model(model))


@dataclass(frozen=True)
class Axiom:
    id: str
    name: str
    role: str
    source: str
    statement: str
    guard: Callable[[TupleContext], bool]
    decide: Callable[[TupleContext], str]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "role": self.role,
            "source": self.source,
            "statement": self.statement,
        }


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    applies: bool
    conclusion: str | None


def _never(ctx: TupleContext) -> bool:
    return False


def _ruled_conclusion(ctx: TupleContext) -> str:
    k2, e = ctx.chern.k2, ctx.chern.e
    if k2 <= 2 * e and k2 <= -2:
        return "ruled-candidate"
    return "unrealizable"


def plucker_violation(b: BranchInvariants) -> bool:
    """A plane curve has degree at most ``k(k-1)`` where ``k`` is its class."""
    k = dual_degree(b)
    if k < 2 and b.d >= 2:
        return True
    return b.degree > k * (k - 1)


def _build() -> tuple[Axiom, ...]:
    return (
        Axiom(
            "AX1",
            "degree criterion",
            "filter",
            "[Ku], Theorem 1",
            "A generic covering whose degree exceeds 4(3d+g-1)/(2(3d+g-1)-c) is "
            "determined by its branch curve.",
            guard=lambda ctx: kulikov_bound(ctx.branch).defined,
            decide=lambda ctx: "chisini-holds" if criterion_holds(ctx.m, ctx.branch) else "open",
        ),
        Axiom(
            "AX2",
            "degree at least 12",
            "delegation",
            "[Nem]",
            "By the Bogomolov-Miyaoka-Yau inequality the degree bound is below 12, "
            "so coverings of degree 12 or more are determined by their branch curve.",
            guard=lambda ctx: ctx.m >= 12,
            decide=lambda ctx: "chisini-holds",
        ),
        Axiom(
            "AX3",
            "non-general type, degree at least 8",
            "filter",
            "[Nem], Theorem 2",
            "For surfaces not of general type, coverings of degree 8 or more are "
            "determined by their branch curve.",
            guard=lambda ctx: ctx.m >= 8 and not ctx.chern.satisfies_bmy,
            decide=lambda ctx: "chisini-holds",
        ),
        Axiom(
            "AX4",
            "surfaces violating Bogomolov-Miyaoka-Yau",
            "filter",
            "classification of algebraic surfaces",
            "If K^2 > 3e then S is an irregular ruled surface, hence K^2 <= 2e and "
            "K^2 <= -2.",
            guard=lambda ctx: not ctx.chern.satisfies_bmy,
            decide=_ruled_conclusion,
        ),
        Axiom(
            "AX5",
            "low genus",
            "filter",
            "[Ku], Theorem 11",
            "Coverings branched over cuspidal curves of genus at most 3 are "
            "determined by their branch curve.",
            guard=lambda ctx: ctx.m >= 5 and ctx.branch.g <= 3,
            decide=lambda ctx: "chisini-holds",
        ),
        Axiom(
            "AX6",
            "biduality degree bound",
            "filter",
            "Plucker formulas",
            "The dual of B has degree k = 2d(2d-1)-3c-2n and B is the dual of its "
            "dual, so deg B <= k(k-1) and k >= 2 once deg B >= 4.",
            guard=lambda ctx: True,
            decide=lambda ctx: "infeasible" if plucker_violation(ctx.branch) else "consistent",
        ),
        Axiom(
            "AX7",
            "ordinary singularities",
            "assumption",
            "[Mo], Theorem 3",
            "A generic projection of S to P^3 has only double curves, triple points "
            "and pinch points as singularities.",
            guard=_never,
            decide=lambda ctx: "assumed",
        ),
        Axiom(
            "AX8",
            "nodeless degree-3 branch curves",
            "fibered",
            "[Ku]",
            "The branch curve of a degree-3 generic covering of P^2 by a smooth "
            "surface has no nodes.",
            guard=lambda ctx: ctx.branch.n > 0,
            decide=lambda ctx: "degree-3-excluded",
        ),
        Axiom(
            "AX9",
            "smooth fibered product",
            "assumption",
            "[Ku], Propositions 2 and 3",
            "The normalized fibered product of two generic coverings with the same "
            "branch curve is a smooth irreducible surface.",
            guard=_never,
            decide=lambda ctx: "assumed",
        ),
    )


_REGISTRY = _build()
AXIOMS = MappingProxyType({ax.id: ax for ax in _REGISTRY})


def registry() -> tuple[Axiom, ...]:
    """All axioms, AX1 first."""
    return _REGISTRY


def query(axiom_id: str, ctx: TupleContext) -> AxiomResult:
    ax = AXIOMS[axiom_id]
    if not ax.guard(ctx):
        return AxiomResult(axiom_id, False, None)
    return AxiomResult(axiom_id, True, ax.decide(ctx))

"""Intersection numbers on the fibered product of two coverings with one branch curve.

Let ``f1, f2`` be generic coverings of degrees ``deg1, deg2`` branched over
the same ``B`` and ``X`` the normalization of ``S1 x_{P^2} S2``. Above the
ramification curves, ``X`` carries ``R~`` (over both ramification curves),
``C~1`` and ``C~2``. Their intersection numbers depend only on the invariants
of ``B`` and the two degrees. Equal self-intersections together with a
vanishing 2x2 Gram determinant force numerically equal classes (Hodge
index), which is incompatible with ``(C~1, C~2) != C~1^2``. That
incompatibility rules out a second covering.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .criterion import kulikov_bound
from .invariants import BranchInvariants, ChernPair, SurfaceModel, line_preimage_genus
from .known_results import AXIOMS, TupleContext

CONTRADICTION = "Contradiction"
INCONCLUSIVE = "Inconclusive"
UNDEFINED_BOUND = "UndefinedBound"


@dataclass(frozen=True)
class IntersectionTable:
    r2: int
    c1sq: int
    c2sq: int
    rc1: int
    rc2: int
    c1c2: int
    deg1: int
    deg2: int

    def to_dict(self) -> dict:
        return asdict(self)


def intersection_table(b: BranchInvariants, deg1: int, deg2: int) -> IntersectionTable:
    if deg1 < 3 or deg2 < 3:
        raise ValueError(f"covering degrees must be at least 3, got {deg1}, {deg2}")
    x = 3 * b.d + b.g - 1
    return IntersectionTable(
        r2=2 * x - b.c,
        c1sq=(deg1 - 2) * x - b.c,
        c2sq=(deg2 - 2) * x - b.c,
        rc1=b.c,
        rc2=b.c,
        c1c2=b.c + 2 * b.n,
        deg1=deg1,
        deg2=deg2,
    )


def hodge_determinant(tab: IntersectionTable) -> int:
    """Gram determinant of ``R~`` and ``C~1``."""
    return tab.r2 * tab.c1sq - tab.rc1 * tab.rc1


@dataclass(frozen=True)
class CandidateCheck:
    degree: int
    table: IntersectionTable
    determinant: int
    failed: tuple[str, ...]

    @property
    def contradiction(self) -> bool:
        return not self.failed

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "table": self.table.to_dict(),
            "determinant": self.determinant,
            "contradiction": self.contradiction,
            "failed": list(self.failed),
        }


def check_candidate(b: BranchInvariants, deg_primary: int, k: int) -> CandidateCheck:
    tab = intersection_table(b, deg_primary, k)
    det = hodge_determinant(tab)
    failed = []
    if det != 0:
        failed.append("determinant != 0")
    if not (tab.r2 == tab.c1sq == tab.c2sq == tab.rc1 == tab.rc2):
        failed.append("r2 = c1sq = c2sq = rc fails")
    if tab.c1c2 == tab.c1sq:
        failed.append("c1c2 = c1sq")
    return CandidateCheck(k, tab, det, tuple(failed))


@dataclass(frozen=True)
class UniquenessCertificate:
    branch: BranchInvariants
    deg_primary: int
    outcome: str
    bound: tuple[int, int]
    candidates: tuple[CandidateCheck, ...] = ()
    excluded: tuple[tuple[int, str], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "branch": self.branch.to_dict(),
            "deg_primary": self.deg_primary,
            "bound": {"num": self.bound[0], "den": self.bound[1]},
            "excluded": [{"degree": k, "axiom": ax} for k, ax in self.excluded],
            "candidates": [cand.to_dict() for cand in self.candidates],
            "outcome": self.outcome,
        }


def uniqueness_certificate(b: BranchInvariants, deg_primary: int) -> UniquenessCertificate:
    """Try to rule out a second covering with branch curve ``b``.

    A competing covering has degree in ``[3, floor(bound)]``; degree 3 is
    dropped when ``B`` has nodes. The outcome is ``Contradiction`` when every
    remaining degree is obstructed (vacuously when none remain) and
    ``Inconclusive`` otherwise. Inconclusive means only that this obstruction
    fails.
    """
    if deg_primary < 3:
        raise ValueError(f"deg_primary={deg_primary} must be at least 3")
    bound = kulikov_bound(b)
    frac = (bound.numerator, bound.denominator)
    if not bound.defined:
        return UniquenessCertificate(b, deg_primary, UNDEFINED_BOUND, frac)

    ax8 = AXIOMS["AX8"]
    ctx = TupleContext(deg_primary, None, b, ChernPair(0, 0))
    excluded = []
    candidates = []
    for k in range(3, bound.floor() + 1):
        if k == 3 and ax8.guard(ctx):
            excluded.append((3, ax8.id))
            continue
        candidates.append(check_candidate(b, deg_primary, k))
    outcome = CONTRADICTION if all(c.contradiction for c in candidates) else INCONCLUSIVE
    return UniquenessCertificate(
        b, deg_primary, outcome, frac, tuple(candidates), tuple(excluded)
    )


def classify_survivor(model: SurfaceModel, b: BranchInvariants, chern: ChernPair) -> str:
    """Final classification of a tuple no filter eliminated.

    ``resolved-unique`` when the intersection obstruction settles uniqueness;
    ``exceptional-veronese`` for the degree-4 sextic with 9 cusps whose
    surface is forced to be ``P^2`` (``K^2 = 9``, ``e = 3``, rational line
    preimages); ``unresolved`` for anything else.
    """
    cert = uniqueness_certificate(b, model.m)
    if cert.outcome == CONTRADICTION:
        return "resolved-unique"
    if (
        model.m == 4
        and b.degree == 6
        and b.c == 9
        and (chern.k2, chern.e) == (9, 3)
        and line_preimage_genus(model.m, b.d) == 0
    ):
        return "exceptional-veronese"
    return "unresolved"

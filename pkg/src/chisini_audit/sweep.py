"""Exhaustive elimination sweep over the finite box of surface models.

For each degree ``m`` the box holds every integer tuple
``(m, dbar, u, gbar, t)`` with

* ``0 <= dbar <= (m-1)(m-2)/2``,
* ``1 <= u <= dbar`` (or ``u = 0`` when ``dbar = 0``),
* ``0 <= gbar <= (dbar-u)(dbar-u-1)/2``,
* ``0 <= t <= t_max``, the largest ``t`` keeping the node count ``n >= 0``
  (``n`` drops by exactly 12 per triple point; ``t_max`` is 0 when ``n`` is
  already negative at ``t = 0``).

Each tuple runs through a fixed pipeline and receives exactly one verdict:

1. derive branch invariants and Chern numbers;
2. arithmetic feasibility: ``g >= 0``, ``c >= 0``, ``n >= 0``, then the
   biduality bound (AX6);
3. undefined degree bound (``2(3d+g-1) - c <= 0``);
4. the degree criterion holds (AX1): not violating;
5. violating tuples: low genus for ``m >= 5`` (AX5); Bogomolov-Miyaoka-Yau
   satisfied for ``6 <= m <= 11`` (eliminated arithmetically); otherwise
   non-general type for ``m >= 8`` (AX3); for ``m`` in {6, 7} the ruled
   bounds of AX4 must hold or the tuple is unrealizable;
6. anything left is a survivor, classified by the fibered-product
   obstruction.

Histograms come from the sweep kernel; survivors are re-judged in Python
to build their full verdicts.
"""

from __future__ import annotations

import concurrent.futures
import enum
from dataclasses import dataclass, field
from typing import Iterator

from . import kernel
from .criterion import kulikov_bound, polynomial_form
from .fibered_product import classify_survivor, uniqueness_certificate
from .invariants import (
    BranchInvariants,
    ChernPair,
    SurfaceModel,
    chern_from_model,
    derive_branch,
    dual_degree,
    max_component_genus,
    max_double_curve_degree,
)
from .known_results import ARITHMETIC, AXIOMS, TupleContext, registry

CERTIFICATE_VERSION = 1
DEFAULT_MAX_DEGREE = 11

KNOWN_SURVIVORS = {
    (4, 2, 2, 0, 0): "resolved-unique",
    (4, 3, 3, 0, 1): "exceptional-veronese",
}


class Outcome(str, enum.Enum):
    NOT_VIOLATING = "NotViolating"
    ARITHMETIC_INFEASIBLE = "ArithmeticInfeasible"
    UNDEFINED_DENOMINATOR = "UndefinedDenominator"
    LEMMA_GEN_ELIMINATED = "LemmaGenEliminated"
    NON_GENERAL_TYPE_ELIMINATED = "NonGeneralTypeEliminated"
    UNREALIZABLE = "Unrealizable"
    SURVIVOR = "Survivor"


@dataclass(frozen=True)
class Verdict:
    model: SurfaceModel
    branch: BranchInvariants
    chern: ChernPair
    outcome: Outcome
    detail: str | None = None
    cited: str | None = None
    classification: str | None = None

    @property
    def key(self) -> str:
        """Histogram key, e.g. ``ArithmeticInfeasible/plucker``."""
        if self.detail is None:
            return self.outcome.value
        return f"{self.outcome.value}/{self.detail}"

    @property
    def eliminated(self) -> bool:
        return self.outcome not in (Outcome.SURVIVOR, Outcome.UNDEFINED_DENOMINATOR)

    def to_dict(self) -> dict:
        bound = kulikov_bound(self.branch)
        m, dbar, u, gbar, t = self.model.astuple()
        out = {
            "tuple": {"m": m, "dbar": dbar, "u": u, "gbar": gbar, "t": t},
            "branch": self.branch.to_dict(),
            "chern": self.chern.to_dict(),
            "bound": {"num": bound.numerator, "den": bound.denominator},
            "dual_degree": dual_degree(self.branch),
            "outcome": self.outcome.value,
            "detail": self.detail,
            "cited": self.cited,
            "classification": self.classification,
        }
        if self.outcome is Outcome.SURVIVOR:
            out["fibered"] = uniqueness_certificate(self.branch, m).to_dict()
        return out


def max_triple_points(m: int, dbar: int, u: int, gbar: int) -> int:
    """Largest ``t`` keeping ``n >= 0``, clamped at 0."""
    n0 = derive_branch(SurfaceModel(m, dbar, u, gbar, 0)).n
    return n0 // 12 if n0 > 0 else 0


def _u_range(dbar: int) -> range:
    return range(0, 1) if dbar == 0 else range(1, dbar + 1)


def enumeration_box(m: int) -> Iterator[SurfaceModel]:
    """Every box tuple of degree ``m``, in lexicographic order."""
    if m < 3:
        raise ValueError(f"degree m={m} is below 3")
    for dbar in range(max_double_curve_degree(m) + 1):
        for u in _u_range(dbar):
            for gbar in range(max_component_genus(dbar, u) + 1):
                for t in range(max_triple_points(m, dbar, u, gbar) + 1):
                    yield SurfaceModel(m, dbar, u, gbar, t)


def box_size(m: int) -> int:
    """Cardinality of the degree-``m`` box, summing the ``t`` ranges directly."""
    total = 0
    for dbar in range(max_double_curve_degree(m) + 1):
        for u in _u_range(dbar):
            # Each unit of gbar lowers n by exactly 4.
            n_base = derive_branch(SurfaceModel(m, dbar, u, 0, 0)).n
            for gbar in range(max_component_genus(dbar, u) + 1):
                n0 = n_base - 4 * gbar
                total += (n0 // 12 if n0 > 0 else 0) + 1
    return total


def box_violation(model: SurfaceModel) -> str | None:
    """The box constraint ``model`` breaks, if any.

    The structural constraints are enforced by :class:`SurfaceModel` itself,
    leaving only the triple-point bound.
    """
    t_max = max_triple_points(model.m, model.dbar, model.u, model.gbar)
    if model.t > t_max:
        return f"t <= t_max = {t_max}"
    return None


def judge(model: SurfaceModel) -> Verdict:
    ctx = TupleContext.from_model(model)
    m, b, ch = model.m, ctx.branch, ctx.chern

    def verdict(outcome, detail=None, cited=None, classification=None):
        return Verdict(model, b, ch, outcome, detail, cited, classification)

    failure = b.feasibility_failure()
    if failure is not None:
        return verdict(Outcome.ARITHMETIC_INFEASIBLE, failure, ARITHMETIC)
    ax6 = AXIOMS["AX6"]
    if ax6.guard(ctx) and ax6.decide(ctx) == "infeasible":
        return verdict(Outcome.ARITHMETIC_INFEASIBLE, "plucker", ax6.id)

    ax1 = AXIOMS["AX1"]
    if not ax1.guard(ctx):
        return verdict(Outcome.UNDEFINED_DENOMINATOR)
    if polynomial_form(model) > 0:
        return verdict(Outcome.NOT_VIOLATING, cited=ax1.id)

    if AXIOMS["AX5"].guard(ctx):
        return verdict(Outcome.LEMMA_GEN_ELIMINATED, "low-genus", "AX5")
    if 6 <= m <= 11 and ch.satisfies_bmy:
        return verdict(Outcome.LEMMA_GEN_ELIMINATED, "bmy", ARITHMETIC)
    if AXIOMS["AX3"].guard(ctx):
        return verdict(Outcome.NON_GENERAL_TYPE_ELIMINATED, cited="AX3")
    ax4 = AXIOMS["AX4"]
    if m in (6, 7) and ax4.guard(ctx):
        if ax4.decide(ctx) == "unrealizable":
            return verdict(Outcome.UNREALIZABLE, cited=ax4.id)
        # The ruled bounds hold and no filter is left: report it.
        return verdict(Outcome.SURVIVOR, classification="ruled-candidate")
    return verdict(Outcome.SURVIVOR, classification=classify_survivor(model, b, ch))


@dataclass
class DegreeSummary:
    m: int
    tuples_examined: int
    histogram: dict[str, int]
    survivors: list[Verdict]
    checks: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "tuples_examined": self.tuples_examined,
            "histogram": dict(self.histogram),
            "survivors": [v.to_dict() for v in self.survivors],
            "checks": dict(self.checks),
        }


@dataclass
class SweepCertificate:
    m_range: tuple[int, int]
    per_m: list[DegreeSummary]
    delegated: list[int] = field(default_factory=list)
    version: int = CERTIFICATE_VERSION

    @property
    def survivors(self) -> list[Verdict]:
        return [v for s in self.per_m for v in s.survivors]

    def survivor_map(self) -> dict[tuple[int, ...], str | None]:
        return {v.model.astuple(): v.classification for v in self.survivors}

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "m_range": list(self.m_range),
            "axioms": [ax.to_dict() for ax in registry()],
            "per_m": [s.to_dict() for s in self.per_m],
            "delegated": [{"m": m, "axiom": "AX2"} for m in self.delegated],
        }


def expected_survivors(m_min: int, m_max: int) -> dict[tuple[int, ...], str]:
    return {k: v for k, v in KNOWN_SURVIVORS.items() if m_min <= k[0] <= m_max}


def _chunks(m: int) -> list[tuple[int, int]]:
    top = max_double_curve_degree(m)
    if m < 8:
        return [(0, top + 1)]
    return [(dbar, dbar + 1) for dbar in range(top + 1)]


def _scan_chunk(args: tuple[int, int, int]) -> kernel.ScanResult:
    m, lo, hi = args
    return kernel.scan(m, lo, hi)


def scan_degree(m: int, workers: int = 1) -> kernel.ScanResult:
    """Kernel scan of one full degree box, optionally split across workers."""
    jobs = [(m, lo, hi) for lo, hi in _chunks(m)]
    if workers <= 1 or len(jobs) == 1:
        parts = [_scan_chunk(job) for job in jobs]
    else:
        # The compiled kernel drops the GIL; the fallback needs processes.
        pool_cls = (
            concurrent.futures.ThreadPoolExecutor
            if kernel.IMPLEMENTATION != "python"
            else concurrent.futures.ProcessPoolExecutor
        )
        with pool_cls(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, jobs))
    result = kernel.ScanResult(m)
    for part in parts:
        result.merge(part)
    return result


def summarize_degree(m: int, workers: int = 1) -> DegreeSummary:
    res = scan_degree(m, workers)
    expected = box_size(m)
    if res.examined != expected:
        raise RuntimeError(f"m={m}: kernel examined {res.examined}, box holds {expected}")
    survivors = [judge(SurfaceModel(*tup)) for tup in res.survivors]
    for v in survivors:
        if v.outcome is not Outcome.SURVIVOR:
            raise RuntimeError(f"kernel and judge disagree on {v.model}: {v.key}")
    return DegreeSummary(m, res.examined, res.histogram(), survivors, res.check_dict())


def run_sweep(
    m_min: int,
    m_max: int,
    *,
    workers: int = 1,
    above_max: str = "reject",
) -> SweepCertificate:
    """Sweep every degree in ``[m_min, m_max]``.

    Degrees above 11 are covered by AX2. ``above_max`` decides what happens
    to them: ``"reject"`` raises, ``"delegate"`` records them as delegated
    without enumerating, ``"enumerate"`` sweeps them anyway (exploration).
    """
    if m_min < 3 or m_min > m_max:
        raise ValueError(f"invalid degree range [{m_min}, {m_max}]")
    if above_max not in ("reject", "delegate", "enumerate"):
        raise ValueError(f"unknown above_max policy {above_max!r}")
    if m_max > DEFAULT_MAX_DEGREE and above_max == "reject":
        raise ValueError(
            f"degrees above {DEFAULT_MAX_DEGREE} are covered by AX2; "
            "pass above_max='delegate' or 'enumerate'"
        )
    per_m = []
    delegated = []
    for m in range(m_min, m_max + 1):
        if m > DEFAULT_MAX_DEGREE and above_max == "delegate":
            delegated.append(m)
            continue
        per_m.append(summarize_degree(m, workers))
    return SweepCertificate((m_min, m_max), per_m, delegated)

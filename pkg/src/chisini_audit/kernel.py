"""Selects the compiled sweep kernel when available, else the pure-Python one.

Set ``CHISINI_AUDIT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import _kernel_py

OUTCOME_KEYS = (
    "NotViolating",
    "ArithmeticInfeasible/genus",
    "ArithmeticInfeasible/cusps",
    "ArithmeticInfeasible/nodes",
    "ArithmeticInfeasible/plucker",
    "UndefinedDenominator",
    "LemmaGenEliminated/low-genus",
    "LemmaGenEliminated/bmy",
    "NonGeneralTypeEliminated",
    "Unrealizable",
    "Survivor",
)

CHECK_KEYS = (
    "chern_mismatches",
    "line_genus_mismatches",
    "parity_failures",
    "node_closure_failures",
    "equivalence_checked",
    "equivalence_failures",
    "bmy_bound_checked",
    "bmy_bound_failures",
    "lemma_gen_hits",
    "ruled_hits",
    "undefined_denominators",
)

# 64-bit headroom: the largest intermediate is about (2m^2)^2.
MAX_COMPILED_M = 100

python_backend = _kernel_py
compiled_backend = None
if os.environ.get("CHISINI_AUDIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernel as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
IMPLEMENTATION: str = backend.IMPLEMENTATION


def _pick(m: int, impl):
    if impl is None:
        impl = backend
    if impl is not python_backend and m > MAX_COMPILED_M:
        return python_backend
    return impl


@dataclass
class ScanResult:
    m: int
    counts: list[int] = field(default_factory=lambda: [0] * len(OUTCOME_KEYS))
    checks: list[int] = field(default_factory=lambda: [0] * len(CHECK_KEYS))
    survivors: list[tuple[int, int, int, int, int]] = field(default_factory=list)

    @property
    def examined(self) -> int:
        return sum(self.counts)

    def merge(self, other: "ScanResult") -> None:
        """Append ``other``, which must cover larger ``dbar`` values."""
        assert other.m == self.m
        self.counts = [a + b for a, b in zip(self.counts, other.counts)]
        self.checks = [a + b for a, b in zip(self.checks, other.checks)]
        self.survivors.extend(other.survivors)

    def histogram(self) -> dict[str, int]:
        return {k: v for k, v in zip(OUTCOME_KEYS, self.counts) if v}

    def check_dict(self) -> dict[str, int]:
        return dict(zip(CHECK_KEYS, self.checks))


def scan(m: int, dbar_lo: int = 0, dbar_hi: int | None = None, impl=None) -> ScanResult:
    if m < 3:
        raise ValueError(f"degree m={m} is below 3")
    if dbar_hi is None:
        dbar_hi = (m - 1) * (m - 2) // 2 + 1
    counts, checks, survivors = _pick(m, impl).scan(m, dbar_lo, dbar_hi)
    return ScanResult(m, list(counts), list(checks), [tuple(s) for s in survivors])


def classify(m: int, dbar: int, u: int, gbar: int, t: int, impl=None) -> str:
    return OUTCOME_KEYS[_pick(m, impl).classify(m, dbar, u, gbar, t)]

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from chisini_audit.invariants import SurfaceModel, max_component_genus, max_double_curve_degree
from chisini_audit.sweep import max_triple_points

_ACCEPTANCE: list[str] = []


@pytest.fixture
def record_criterion():
    """Record one acceptance line; the terminal summary prints them all."""

    def record(number: int, title: str, ok: bool) -> bool:
        _ACCEPTANCE.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


@st.composite
def box_models(draw, m_min: int = 3, m_max: int = 11) -> SurfaceModel:
    """A tuple from the enumeration box of a random degree."""
    m = draw(st.integers(m_min, m_max))
    dbar = draw(st.integers(0, max_double_curve_degree(m)))
    u = 0 if dbar == 0 else draw(st.integers(1, dbar))
    gbar = draw(st.integers(0, max_component_genus(dbar, u)))
    t = draw(st.integers(0, max_triple_points(m, dbar, u, gbar)))
    return SurfaceModel(m, dbar, u, gbar, t)


@st.composite
def raw_models(draw, m_max: int = 30) -> SurfaceModel:
    """A structurally valid model, triple points unbounded."""
    m = draw(st.integers(3, m_max))
    dbar = draw(st.integers(0, max_double_curve_degree(m)))
    u = 0 if dbar == 0 else draw(st.integers(1, dbar))
    gbar = draw(st.integers(0, max_component_genus(dbar, u)))
    t = draw(st.integers(0, 2000))
    return SurfaceModel(m, dbar, u, gbar, t)

import pytest

from chisini_audit.invariants import BranchInvariants, ChernPair, SurfaceModel, chern_from_model
from chisini_audit.known_results import (
    ARITHMETIC,
    AXIOMS,
    TupleContext,
    plucker_violation,
    query,
    registry,
)
from chisini_audit.sweep import enumeration_box, judge


def test_registry_order_and_roles():
    ids = [ax.id for ax in registry()]
    assert ids == [f"AX{i}" for i in range(1, 10)]
    roles = {ax.id: ax.role for ax in registry()}
    assert roles["AX7"] == roles["AX9"] == "assumption"
    assert roles["AX8"] == "fibered"
    assert roles["AX2"] == "delegation"
    assert all(ax.source and ax.statement for ax in registry())


def test_ax5_guard_is_off_below_degree_5():
    ctx = TupleContext(4, None, BranchInvariants(4, 1, 12, 8), ChernPair(0, 0))
    res = query("AX5", ctx)
    assert not res.applies and res.conclusion is None


def test_ax5_fires_on_genus_3_at_degree_5():
    ctx = TupleContext.from_model(SurfaceModel(5, 6, 6, 0, 4))
    assert ctx.branch.g == 3
    res = query("AX5", ctx)
    assert res.applies and res.conclusion == "chisini-holds"


def test_ax4_on_ruled_branch_tuple():
    model = SurfaceModel(6, 10, 10, 0, 10)
    assert chern_from_model(model) == ChernPair(14, -2)
    res = query("AX4", TupleContext.from_model(model))
    assert res.applies
    assert res.conclusion == "unrealizable"


def test_ax4_ruled_candidate_when_bounds_hold():
    ctx = TupleContext(6, None, BranchInvariants(1, 0, 0, 0), ChernPair(-5, -2))
    assert query("AX4", ctx).conclusion == "ruled-candidate"


@pytest.mark.parametrize("axiom_id", ["AX7", "AX9"])
def test_assumptions_never_fire(axiom_id):
    for model in enumeration_box(5):
        assert not query(axiom_id, TupleContext.from_model(model)).applies


def test_ax2_only_above_11():
    b = BranchInvariants(1, 0, 0, 0)
    assert not query("AX2", TupleContext(11, None, b, ChernPair(0, 0))).applies
    assert query("AX2", TupleContext(12, None, b, ChernPair(0, 0))).applies


def test_ax6_passes_both_exceptional_curves():
    # Biduality: the exceptional curves have class 4 and 3 with degree 8 <= 12 and 6 <= 6.
    assert not plucker_violation(BranchInvariants(4, 1, 12, 8))
    assert not plucker_violation(BranchInvariants(3, 1, 9, 0))
    assert plucker_violation(BranchInvariants(6, 4, 27, 24))
    assert plucker_violation(BranchInvariants(4, 3, 18, 0))


def test_ax8_requires_nodes():
    ax8 = AXIOMS["AX8"]
    assert ax8.guard(TupleContext(4, None, BranchInvariants(4, 1, 12, 8), ChernPair(0, 0)))
    assert not ax8.guard(TupleContext(4, None, BranchInvariants(3, 1, 9, 0), ChernPair(9, 3)))


@pytest.mark.parametrize("m", range(3, 8))
def test_every_elimination_cites_exactly_one_source(m):
    known = set(AXIOMS) | {ARITHMETIC}
    for model in enumeration_box(m):
        v = judge(model)
        if v.eliminated:
            assert v.cited in known, v
        else:
            assert v.cited is None


def test_judging_is_deterministic():
    for model in enumeration_box(6):
        assert judge(model) == judge(model)

import pytest

from chisini_audit.invariants import SurfaceModel
from chisini_audit.known_results import AXIOMS, TupleContext
from chisini_audit.report import certificate_json
from chisini_audit.sweep import (
    KNOWN_SURVIVORS,
    Outcome,
    box_size,
    box_violation,
    enumeration_box,
    judge,
    max_triple_points,
    run_sweep,
)


def test_degree_3_box():
    assert [m.astuple() for m in enumeration_box(3)] == [(3, 0, 0, 0, 0), (3, 1, 1, 0, 0)]


def test_degree_4_double_conic_slice():
    pairs = {(m.u, m.gbar) for m in enumeration_box(4) if m.dbar == 2}
    assert pairs == {(1, 0), (2, 0)}


def test_degree_4_box_contains_the_veronese_tuple():
    assert SurfaceModel(4, 3, 3, 0, 1) in set(enumeration_box(4))


@pytest.mark.parametrize("m", range(3, 8))
def test_box_is_lexicographic_and_counted(m):
    box = [model.astuple() for model in enumeration_box(m)]
    assert box == sorted(box)
    assert len(box) == len(set(box)) == box_size(m)


def test_triple_point_bound_is_tight():
    # (4;3,3,0,t): n = 12 - 12t, so t = 1 is the last admissible value.
    assert max_triple_points(4, 3, 3, 0) == 1
    assert box_violation(SurfaceModel(4, 3, 3, 0, 2)) == "t <= t_max = 1"
    assert max_triple_points(4, 3, 1, 0) == 0


@pytest.mark.parametrize(
    "tup, key, cited, classification",
    [
        ((4, 2, 2, 0, 0), "Survivor", None, "resolved-unique"),
        ((4, 3, 3, 0, 1), "Survivor", None, "exceptional-veronese"),
        ((4, 3, 3, 0, 0), "ArithmeticInfeasible/genus", "arithmetic-infeasibility", None),
        ((5, 4, 4, 0, 1), "ArithmeticInfeasible/plucker", "AX6", None),
        ((3, 0, 0, 0, 0), "NotViolating", "AX1", None),
    ],
)
def test_judge_examples(tup, key, cited, classification):
    v = judge(SurfaceModel(*tup))
    assert v.key == key
    assert v.cited == cited
    assert v.classification == classification


def test_genus_3_quintic_is_killed_before_the_low_genus_axiom():
    # Biduality runs first; the low-genus axiom would also eliminate it.
    model = SurfaceModel(5, 6, 6, 0, 4)
    v = judge(model)
    assert v.branch.g == 3
    assert v.key == "ArithmeticInfeasible/plucker"
    assert AXIOMS["AX5"].guard(TupleContext.from_model(model))


def test_infeasible_genus_value():
    assert judge(SurfaceModel(4, 3, 3, 0, 0)).branch.g == -8


@pytest.mark.parametrize("m", range(3, 8))
def test_histogram_matches_python_judge(m):
    cert = run_sweep(m, m)
    counts: dict[str, int] = {}
    for model in enumeration_box(m):
        key = judge(model).key
        counts[key] = counts.get(key, 0) + 1
    assert cert.per_m[0].histogram == counts


def test_single_degree_sweeps():
    assert run_sweep(3, 3).survivors == []
    assert run_sweep(10, 10).survivors == []
    assert run_sweep(6, 7).survivors == []


def test_full_sweep_survivors():
    cert = run_sweep(3, 11)
    assert cert.survivor_map() == KNOWN_SURVIVORS
    assert all(v.outcome is Outcome.SURVIVOR for v in cert.survivors)
    for summary in cert.per_m:
        assert sum(summary.histogram.values()) == summary.tuples_examined == box_size(summary.m)


def test_sweep_is_deterministic_across_runs_and_workers():
    a = certificate_json(run_sweep(3, 9))
    b = certificate_json(run_sweep(3, 9))
    c = certificate_json(run_sweep(3, 9, workers=4))
    assert a == b == c


@pytest.mark.parametrize("lo, hi", [(2, 5), (6, 5)])
def test_invalid_ranges(lo, hi):
    with pytest.raises(ValueError):
        run_sweep(lo, hi)


def test_degrees_above_11():
    with pytest.raises(ValueError):
        run_sweep(10, 12)
    cert = run_sweep(11, 13, above_max="delegate")
    assert [s.m for s in cert.per_m] == [11]
    assert cert.delegated == [12, 13]

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chisini_audit.criterion import (
    criterion_holds,
    kulikov_bound,
    nemirovski_bound_check,
    polynomial_form,
    violates_polynomial,
)
from chisini_audit.invariants import BranchInvariants, SurfaceModel, derive_branch
from chisini_audit.sweep import enumeration_box


def oracle_holds(m: int, b: BranchInvariants) -> bool | None:
    """Direct rational comparison; ``None`` where the bound is undefined."""
    x = 3 * b.d + b.g - 1
    den = 2 * x - b.c
    if den <= 0:
        return None
    return Fraction(m) > Fraction(4 * x, den)


@pytest.mark.parametrize(
    "b, num, den, value",
    [
        (BranchInvariants(4, 1, 12, 8), 48, 12, 4),
        (BranchInvariants(3, 1, 9, 0), 36, 9, 4),
        (BranchInvariants(1, 0, 0, 0), 8, 4, 2),
    ],
)
def test_kulikov_bound(b, num, den, value):
    bound = kulikov_bound(b)
    assert (bound.numerator, bound.denominator) == (num, den)
    assert bound.defined
    assert bound.as_fraction() == value
    assert bound.numerator == 2 * (bound.denominator + b.c)


def test_undefined_bound():
    bound = kulikov_bound(BranchInvariants(1, 0, 10, 0))
    assert not bound.defined
    with pytest.raises(ValueError):
        bound.as_fraction()
    assert criterion_holds(5, BranchInvariants(1, 0, 10, 0)) is False


@pytest.mark.parametrize(
    "m, b, expected",
    [
        (5, BranchInvariants(4, 1, 12, 8), True),
        (4, BranchInvariants(4, 1, 12, 8), False),
        (4, BranchInvariants(3, 1, 9, 0), False),
    ],
)
def test_criterion_holds(m, b, expected):
    assert criterion_holds(m, b) is expected
    assert oracle_holds(m, b) is expected


@pytest.mark.parametrize(
    "tup, value",
    [((4, 2, 2, 0, 0), 0), ((4, 3, 3, 0, 1), 0), ((3, 1, 1, 0, 0), 1)],
)
def test_polynomial_form(tup, value):
    model = SurfaceModel(*tup)
    assert polynomial_form(model) == value
    assert violates_polynomial(model) is (value <= 0)


@pytest.mark.parametrize(
    "b",
    [BranchInvariants(4, 1, 12, 8), BranchInvariants(6, 4, 27, 24), BranchInvariants(1, 0, 0, 0)],
)
def test_nemirovski_bound_check(b):
    assert nemirovski_bound_check(b)


def test_nemirovski_bound_rejects_undefined():
    with pytest.raises(ValueError):
        nemirovski_bound_check(BranchInvariants(1, 0, 10, 0))


@pytest.mark.parametrize("m", range(3, 9))
def test_polynomial_form_matches_rational_oracle(m):
    checked = 0
    for model in enumeration_box(m):
        expected = oracle_holds(m, derive_branch(model))
        if expected is None:
            continue
        checked += 1
        assert violates_polynomial(model) is (not expected), model
    assert checked > 0


branch_data = st.builds(
    BranchInvariants,
    d=st.integers(1, 200),
    g=st.integers(0, 500),
    c=st.integers(0, 2000),
    n=st.integers(0, 2000),
)


@given(branch_data, st.integers(3, 60), st.integers(0, 40))
def test_criterion_is_monotone_in_degree(b, m, step):
    if criterion_holds(m, b):
        assert criterion_holds(m + step, b)


@given(branch_data, st.integers(3, 60))
def test_criterion_agrees_with_oracle(b, m):
    expected = oracle_holds(m, b)
    assert criterion_holds(m, b) is (bool(expected) if expected is not None else False)

import pytest

from chisini_audit import kernel
from chisini_audit.sweep import enumeration_box, judge

needs_compiled = pytest.mark.skipif(
    kernel.compiled_backend is None, reason="compiled kernel not built"
)


def test_outcome_keys_cover_every_code():
    assert len(kernel.OUTCOME_KEYS) == kernel.python_backend.N_CODES
    assert len(kernel.CHECK_KEYS) == kernel.python_backend.N_CHECKS


@pytest.mark.parametrize("m", range(3, 8))
def test_python_kernel_classifies_like_judge(m):
    for model in enumeration_box(m):
        assert kernel.classify(*model.astuple(), impl=kernel.python_backend) == judge(model).key


@needs_compiled
@pytest.mark.parametrize("m", range(3, 8))
def test_compiled_kernel_classifies_like_judge(m):
    for model in enumeration_box(m):
        assert kernel.classify(*model.astuple(), impl=kernel.compiled_backend) == judge(model).key


@needs_compiled
@pytest.mark.parametrize("m", range(3, 10))
def test_backends_agree_on_scans(m):
    py = kernel.scan(m, impl=kernel.python_backend)
    cy = kernel.scan(m, impl=kernel.compiled_backend)
    assert py == cy


@pytest.mark.parametrize("m", [4, 7, 8])
def test_chunked_scan_equals_full_scan(m):
    full = kernel.scan(m)
    merged = kernel.ScanResult(m)
    top = (m - 1) * (m - 2) // 2
    for lo in range(0, top + 1, 3):
        merged.merge(kernel.scan(m, lo, lo + 3))
    assert merged == full


def test_scan_survivors_for_degree_4():
    res = kernel.scan(4)
    assert res.survivors == [(4, 2, 2, 0, 0), (4, 3, 3, 0, 1)]
    assert res.examined == 10


def test_scan_rejects_low_degree():
    with pytest.raises(ValueError):
        kernel.scan(2)


def test_large_degree_falls_back_to_python():
    assert kernel._pick(kernel.MAX_COMPILED_M + 1, None) is kernel.python_backend

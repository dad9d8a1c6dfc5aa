"""The compiled kernels and the pure-Python fallback must agree exactly."""
import pytest
from hypothesis import given, settings, strategies as st

from qpart import _kernels, _pykernels

compiled = _kernels.backends().get("cython")
needs_ext = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=40)


@needs_ext
@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(0, 45))
def test_mul_backends_agree(a, b, order):
    assert compiled.mul_trunc(a, b, order) == _pykernels.mul_trunc(a, b, order)


@needs_ext
@settings(max_examples=200, deadline=None)
@given(coeff_lists, st.sampled_from([1, -1]), st.integers(0, 45))
def test_invert_backends_agree(a, c0, order):
    a = [c0] + a[1:]
    fast = compiled.invert_trunc(a, order)
    exact = _pykernels.invert_trunc(a, order)
    if fast is None:
        # reciprocals grow geometrically; None must mean a genuine overflow
        assert max(abs(x) for x in exact) >= 2**56
    else:
        assert fast == exact


@needs_ext
@pytest.mark.parametrize("min_part,weight", [(1, 2), (2, 2), (1, 1), (3, 2)])
def test_run_dp_backends_agree(min_part, weight):
    assert compiled.run_dp_counts(60, min_part, weight) == _pykernels.run_dp_counts(
        60, min_part, weight
    )
    assert compiled.run_dp_refined(9, 40, min_part, weight) == _pykernels.run_dp_refined(
        9, 40, min_part, weight
    )


@needs_ext
def test_overpartition_backends_agree():
    plain = [v % 3 != 0 for v in range(81)]
    over = [True] * 81
    assert compiled.overpartition_counts(80, plain, over) == _pykernels.overpartition_counts(
        80, plain, over
    )


@needs_ext
def test_overflow_signals_fallback():
    big = 2**62
    assert compiled.mul_trunc([big], [4], 0) is None
    assert compiled.mul_trunc([2**70], [1], 0) is None
    # the dispatcher reruns in Python and stays exact
    assert _kernels.mul_trunc([big], [4], 0) == [big * 4]


def test_large_coefficients_exact():
    # overpartitions of n into odd parts exceed 2**63 somewhere below 1000
    counts = _kernels.run_dp_counts(800, 1, 2)
    assert counts == _pykernels.run_dp_counts(800, 1, 2)
    assert max(counts) > 2**63


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")

"""Both kernel backends against each other, plus the numpy fallback end to end."""
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from ntfkit import backend, kernels
from ntfkit.errors import ExponentOverflowError

rows = st.integers(1, 4).flatmap(
    lambda n: arrays(np.int64, st.tuples(st.integers(1, 40), st.just(n)), elements=st.integers(0, 3)))


def degree_sorted(a):
    return a[np.argsort(a.sum(axis=1), kind="stable")]


def reference_minimal(a):
    rows_ = {tuple(r) for r in a.tolist()}
    return sorted((r for r in rows_ if not any(s != r and all(x <= y for x, y in zip(s, r)) for s in rows_)),
                  key=lambda r: r[::-1])


@given(rows)
def test_minimal_mask_backends_agree(a):
    a = degree_sorted(a)
    assert np.array_equal(kernels._minimal_mask_nb(a), kernels._minimal_mask_np(a))


@given(rows)
def test_minimal_rows_matches_reference(a):
    assert [tuple(r) for r in kernels.minimal_rows(a).tolist()] == reference_minimal(a)


@given(rows, st.data())
def test_any_divides_backends_agree(a, data):
    m = np.array(data.draw(st.lists(st.integers(0, 3), min_size=a.shape[1], max_size=a.shape[1])),
                 dtype=np.int64)
    assert bool(kernels._any_divides_nb(a, m)) == bool(kernels._any_divides_np(a, m))


@given(rows)
def test_colon_scan_backends_agree(a):
    a = kernels.minimal_rows(a)
    if not a.any():
        return  # the unit ideal has no colon primes
    bounds = a.max(axis=0)
    i1, m1 = kernels._colon_prime_scan_nb(a, bounds)
    i2, m2 = kernels._colon_prime_scan_np(a, bounds)
    assert np.array_equal(i1, i2) and np.array_equal(m1, m2)


def test_decode_box_index_first_variable_fastest():
    assert kernels.decode_box_index(1, [2, 2]) == (1, 0)
    assert kernels.decode_box_index(3, [2, 2]) == (0, 1)


def test_pairwise_sum_overflow():
    a = np.array([[kernels.EXPONENT_LIMIT]], dtype=np.int64)
    with pytest.raises(ExponentOverflowError):
        kernels.pairwise_sum(a, a)


def test_default_backend_is_numba():
    assert backend() == ("numpy" if os.environ.get("NTFKIT_DISABLE_NUMBA") else "numba")


def test_numpy_fallback_end_to_end():
    code = (
        "from ntfkit import backend, cover_ideal, cycle_graph, is_ntf_up_to, ass_witness_oracle\n"
        "from ntfkit.ideal import power\n"
        "J = cover_ideal(cycle_graph(5))\n"
        "print(backend(), is_ntf_up_to(J, 3).verdict, len(ass_witness_oracle(power(J, 2))))\n"
    )
    env = dict(os.environ, NTFKIT_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["numpy", "fails-at-2", "6"]

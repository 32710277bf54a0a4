import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from isokit import _kernels
from isokit._kernels import _pykernels

P_BIG = 2**61 - 1
coeffs = st.lists(st.integers(0, P_BIG - 1), min_size=0, max_size=80)

needs_compiled = pytest.mark.skipif(_kernels.compiled is None, reason="extension not built")


@needs_compiled
@given(coeffs, coeffs, st.sampled_from([1, 2, 4, 16, 32]))
def test_compiled_mul_matches_python_with_counts(a, b, cross):
    assert _kernels.compiled.mul(a, b, P_BIG, cross) == _pykernels.mul(a, b, P_BIG, cross)


@needs_compiled
@given(coeffs, coeffs)
def test_compiled_schoolbook_matches(a, b):
    assert _kernels.compiled.school_mul(a, b, P_BIG) == _pykernels.school_mul(a, b, P_BIG)


@needs_compiled
@given(coeffs, st.lists(st.integers(0, P_BIG - 1), min_size=1, max_size=30).filter(lambda b: b[-1]))
def test_compiled_divmod_matches(a, b):
    cq, cr = _kernels.compiled.divmod_(a, b, P_BIG)
    pq, pr = _pykernels.divmod_(a, b, P_BIG)
    assert list(cq) == list(pq) and list(cr) == list(pr)


@given(coeffs, st.lists(st.integers(0, P_BIG - 1), min_size=1, max_size=30).filter(lambda b: b[-1]))
def test_divmod_reconstructs(a, b):
    q, r = _pykernels.divmod_(a, b, P_BIG)
    prod, _ = _pykernels.school_mul(q, b, P_BIG) if q else ([], 0)
    n = max(len(prod), len(r), len(a))
    pad = lambda v: list(v) + [0] * (n - len(v))
    assert [(x + y) % P_BIG for x, y in zip(pad(prod), pad(r))] == pad([c % P_BIG for c in a])
    assert len(r) < len(b)


def test_karatsuba_count_at_crossover_one():
    # 3 products per halving down to single coefficients: 3^k for n = 2^k
    for k in range(1, 8):
        n = 2**k
        _, count = _pykernels.mul([1] * n, [1] * n, P_BIG, 1)
        assert count == 3**k


def test_pure_python_env_forces_fallback():
    env = dict(os.environ, ISOKIT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "import isokit._kernels as k; from isokit.field import prime_field; from isokit.poly import Polynomial;"
         "F = prime_field(19); f = Polynomial(F, [1, 2, 3]);"
         "print(k.BACKEND, k.compiled is None, (f * f).to_list())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.split() == ["python", "True", "[1,", "4,", "10,", "12,", "9]"]

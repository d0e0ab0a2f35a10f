from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccsymbol import _kernels
from ccsymbol._kernels import _slow

try:
    from ccsymbol._kernels import _fast
except ImportError:  # extension not built
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled kernels not built")

MODULI = [2, 4, 27, 7**5, 2**31 - 1]


def test_backend_is_reported():
    assert _kernels.BACKEND in ("cython", "python")


def test_slow_convolution_by_hand():
    assert _slow.conv_mod([1, 1], [1, 3], 3, 4) == [1, 0, 3]
    assert _slow.conv_trunc_mod([(1, 1)], [(1, 3)], 1, 5, 2) == [(1, 4)]


def test_slow_params_by_hand():
    # (1 - t)(1 - t^2) = 1 - t - t^2 + t^3
    assert _slow.pos_params_mod([1, -1, -1, 1], 4, 7) == [1, 1, 0, 0]
    assert _slow.pos_params_trunc_mod([(1, 0), (0, 4)], 2, 5, 2) == [(0, 1), (0, 0)]


def _poly(rng, n, m):
    return [rng.randrange(m) for _ in range(n)]


@needs_fast
@pytest.mark.parametrize("modulus", MODULI)
def test_fast_conv_matches_slow(modulus):
    rng = random.Random(modulus)
    for _ in range(50):
        a, b = _poly(rng, rng.randint(0, 30), modulus), _poly(rng, rng.randint(0, 30), modulus)
        n = rng.randint(0, 70)
        assert _fast.conv_mod(a, b, n, modulus) == _slow.conv_mod(a, b, n, modulus)


@needs_fast
@pytest.mark.parametrize("modulus", MODULI)
def test_fast_params_match_slow(modulus):
    rng = random.Random(modulus + 1)
    for _ in range(50):
        c = [1] + _poly(rng, rng.randint(0, 20), modulus)
        K = rng.randint(0, 25)
        assert _fast.pos_params_mod(c, K, modulus) == _slow.pos_params_mod(c, K, modulus)


@needs_fast
@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from([2, 5, 101]),
    st.integers(2, 5),
    st.integers(0, 2**32),
)
def test_fast_truncated_kernels_match_slow(p, nu, seed):
    rng = random.Random(seed)

    def coeffs(n):
        return [tuple(rng.randrange(p) for _ in range(nu)) for _ in range(n)]

    a, b = coeffs(rng.randint(0, 12)), coeffs(rng.randint(0, 12))
    n = rng.randint(0, 30)
    assert _fast.conv_trunc_mod(a, b, n, p, nu) == _slow.conv_trunc_mod(a, b, n, p, nu)
    c = [(1,) + (0,) * (nu - 1)] + coeffs(rng.randint(0, 10))
    K = rng.randint(0, 12)
    assert _fast.pos_params_trunc_mod(c, K, p, nu) == _slow.pos_params_trunc_mod(c, K, p, nu)


@needs_fast
def test_fast_accepts_unreduced_input():
    assert _fast.conv_mod([-1, 9], [5], 2, 4) == _slow.conv_mod([-1, 9], [5], 2, 4)

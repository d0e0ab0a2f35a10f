from __future__ import annotations

import pytest

from ccsymbol import classify_gamma, parse_ring_spec, random_gamma_series
from ccsymbol.sampling import PROFILES, STEINBERG_STRATA, matches_profile, sample_steinberg, steinberg_feasible


@pytest.mark.parametrize("spec", ["Q", "F7", "Z/4", "Z/27", "Q[e]/e^2", "F5[e]/e^3"])
@pytest.mark.parametrize("profile", PROFILES)
def test_profiles_hold(spec, profile):
    ring = parse_ring_spec(spec)
    for seed in range(20):
        f = random_gamma_series(ring, profile, seed)
        assert matches_profile(f, profile)
        assert classify_gamma(f).member
        assert not f.coeffs or (-4 <= f.val and f.top <= 6)
        for k, c in f.items():
            if k < classify_gamma(f).w:
                assert not ring.is_unit(c)


def test_pos_winding_example():
    f = random_gamma_series(parse_ring_spec("F7"), "posWinding", 1)
    assert classify_gamma(f).w >= 1


def test_one_plus_nilpotent_example():
    ring = parse_ring_spec("Q[e]/e^2")
    f = random_gamma_series(ring, "onePlusNilpotent", 5)
    assert all(not ring.is_unit(c) for _, c in (f - 1).items())


def test_deterministic():
    ring = parse_ring_spec("Z/27")
    assert random_gamma_series(ring, "anyGamma", 9) == random_gamma_series(ring, "anyGamma", 9)


def test_unknown_profile():
    with pytest.raises(ValueError):
        random_gamma_series(parse_ring_spec("Q"), "nope", 0)


def test_zero_winding_strata_empty_over_residue_field_f2():
    z4 = parse_ring_spec("Z/4")
    assert not steinberg_feasible(z4, "zeroWindingUnitCoeff")
    assert not steinberg_feasible(z4, "zeroWindingNilpotent")
    with pytest.raises(ValueError):
        sample_steinberg(z4, "zeroWindingNilpotent", __import__("random").Random(0))


@pytest.mark.parametrize("spec", ["F7", "Z/27", "Q[e]/e^2"])
@pytest.mark.parametrize("stratum", STEINBERG_STRATA)
def test_steinberg_strata(spec, stratum):
    import random

    ring = parse_ring_spec(spec)
    rng = random.Random(0)
    for _ in range(10):
        f = sample_steinberg(ring, stratum, rng)
        assert matches_profile(f, stratum)
        cls = classify_gamma(1 - f)
        assert cls.member
        if stratum.startswith("zeroWinding"):
            assert cls.w == 0

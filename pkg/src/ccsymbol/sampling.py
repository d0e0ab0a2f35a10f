"""Seeded random generators for unit Laurent series, used by the check suites and tests."""

from __future__ import annotations

import random

from .laurent import LaurentSeries, classify_gamma
from .rings import Ring

PROFILES = (
    "anyGamma",
    "posWinding",
    "negWinding",
    "zeroWindingUnitCoeff",
    "zeroWindingNilpotent",
    "onePlusNilpotent",
)

# The four case profiles for Steinberg trials: the sign of w(f), then the two
# zero-winding shapes in which 1 - f must also have winding number zero.
STEINBERG_STRATA = ("posWinding", "negWinding", "zeroWindingUnitCoeff", "zeroWindingNilpotent")

LOW, HIGH = -4, 6
_MAX_ATTEMPTS = 10_000


def _sparse(rng: random.Random, ring: Ring, lo: int, hi: int, draw, density: float = 0.6) -> dict:
    return {k: draw(rng) for k in range(lo, hi + 1) if rng.random() < density}


def _candidate(ring: Ring, profile: str, rng: random.Random) -> LaurentSeries:
    unit, elem, nil = ring.sample_unit, ring.sample_element, ring.sample_nilpotent
    if profile == "onePlusNilpotent":
        terms = _sparse(rng, ring, LOW, HIGH, nil)
        terms[0] = ring.add(ring.one, terms.get(0, ring.zero))
        return LaurentSeries.from_payloads(ring, terms)
    if profile == "anyGamma":
        w = rng.randint(LOW, HIGH)
    elif profile == "posWinding":
        w = rng.randint(1, HIGH)
    elif profile == "negWinding":
        w = rng.randint(LOW, -1)
    else:
        w = 0
    terms = _sparse(rng, ring, LOW, w - 1, nil)
    if profile == "zeroWindingNilpotent":
        terms.update(_sparse(rng, ring, 1, HIGH, nil))
    else:
        terms.update(_sparse(rng, ring, w + 1, HIGH, elem))
    if profile == "zeroWindingUnitCoeff" and w + 1 <= HIGH:
        terms[rng.randint(w + 1, HIGH)] = unit(rng)
    terms[w] = unit(rng)
    return LaurentSeries.from_payloads(ring, terms)


def matches_profile(f: LaurentSeries, profile: str) -> bool:
    cls = classify_gamma(f)
    if not cls.member:
        return False
    ring = f.ring
    if profile == "anyGamma":
        return True
    if profile == "posWinding":
        return cls.w >= 1
    if profile == "negWinding":
        return cls.w <= -1
    if profile == "onePlusNilpotent":
        return all(not ring.is_unit(c) for _, c in (f - 1).items())
    if cls.w != 0:
        return False
    off_units = [k for k, c in f.items() if k != 0 and ring.is_unit(c)]
    if profile == "zeroWindingUnitCoeff":
        return bool(off_units)
    if profile == "zeroWindingNilpotent":
        return not off_units
    raise ValueError(f"unknown profile {profile!r}")


def sample_profile(ring: Ring, profile: str, rng: random.Random) -> LaurentSeries:
    """Draw from ``rng`` until a candidate matches ``profile``."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {', '.join(PROFILES)}")
    for _ in range(_MAX_ATTEMPTS):
        f = _candidate(ring, profile, rng)
        if matches_profile(f, profile):
            return f
    raise AssertionError(f"could not sample profile {profile} over {ring}")


def random_gamma_series(ring: Ring, profile: str = "anyGamma", seed: int = 0) -> LaurentSeries:
    """A reproducible unit series over ``ring`` matching ``profile``, supported in ``[-4, 6]``."""
    return sample_profile(ring, profile, random.Random(seed))


def steinberg_feasible(ring: Ring, stratum: str) -> bool:
    """Whether ``f`` and ``1 - f`` can both have winding number zero.

    That needs a unit ``c`` with ``1 - c`` a unit, which fails exactly when the
    residue field has two elements.
    """
    if stratum in ("zeroWindingUnitCoeff", "zeroWindingNilpotent"):
        return ring.residue_field_size() > 2
    return True


def sample_steinberg(ring: Ring, stratum: str, rng: random.Random) -> LaurentSeries:
    """``f`` in ``stratum`` with ``1 - f`` a unit, and of winding zero in the zero-winding strata."""
    if not steinberg_feasible(ring, stratum):
        raise ValueError(f"stratum {stratum} is empty over {ring}")
    for _ in range(_MAX_ATTEMPTS):
        f = sample_profile(ring, stratum, rng)
        cls = classify_gamma(1 - f)
        if not cls.member:
            continue
        if stratum.startswith("zeroWinding") and cls.w != 0:
            continue
        return f
    raise AssertionError(f"could not sample a Steinberg pair in {stratum} over {ring}")

from __future__ import annotations

import random

import pytest
from conftest import series

from ccsymbol import (
    CoboundaryWitness,
    PairingHandle,
    canonical_coboundary,
    check_steinberg_map,
    check_two_cocycle,
    coboundary_from_witness,
    parse_ring_spec,
    random_gamma_series,
    verify_characterization,
)

Q = parse_ring_spec("Q")
QE2 = parse_ring_spec("Q[e]/e^2")
Z4 = parse_ring_spec("Z/4")
F7 = parse_ring_spec("F7")


def _triples(ring, n, seed):
    rng = random.Random(seed)
    return [tuple(random_gamma_series(ring, "anyGamma", rng.randrange(2**32)) for _ in range(3)) for _ in range(n)]


@pytest.mark.parametrize("kind", ["CommutatorPairing", "CCSymbol"])
def test_builtin_pairings_are_cocycles(kind):
    p = PairingHandle(kind, QE2)
    report = check_two_cocycle(p, _triples(QE2, 100, 1))
    assert report.passed and report.results[0].checked == 100


def test_cocycle_small_cases():
    t = series(Q, "t")
    assert check_two_cocycle(PairingHandle.cc(Q), [(t, t, t)]).passed
    one = series(Q, "1")
    for p in (PairingHandle.cc(Q), PairingHandle.commutator(Q), PairingHandle.composite(Q, {(1, 0): 1})):
        assert check_two_cocycle(p, [(one, one, one)]).passed


def test_cocycle_failure_is_reported():
    # (-1)^(w(f) * w(g)^2) is not bimultiplicative in general, but as a
    # parity-only twist it still is; a twist on (0, 1) alone breaks it
    p = PairingHandle.composite(Q, {(0, 1): 1})
    t, two = series(Q, "t"), series(Q, "2")
    report = check_two_cocycle(p, [(two, t, t)])
    assert not report.passed
    assert set(report.results[0].witness) == {"f", "g", "h", "left", "right"}


def test_canonical_coboundary_examples():
    assert canonical_coboundary(1, 1) == -1
    assert canonical_coboundary(2, 3) == 1
    assert canonical_coboundary(3, 3, F7) == 6


def test_witness_example():
    w = CoboundaryWitness(Q(2))
    assert coboundary_from_witness(w, 1, 1) == -1
    assert w.phi(2) == -4 and w.phi(0) == 1
    assert len(w.table()) == 21
    with pytest.raises(ValueError):
        CoboundaryWitness(Q(0))


@pytest.mark.parametrize("spec", ["Q", "F7", "Z/9", "Q[e]/e^2"])
def test_coboundary_is_independent_of_lambda(spec):
    ring = parse_ring_spec(spec)
    rng = random.Random(spec)
    for _ in range(5):
        w = CoboundaryWitness(ring.element(ring.sample_unit(rng)))
        for a in range(-10, 11):
            for b in range(-10, 11):
                assert coboundary_from_witness(w, a, b) == canonical_coboundary(a, b, ring)


def test_steinberg_map_cc_symbol_over_z4():
    report = check_steinberg_map(PairingHandle.cc(Z4), 200, 0)
    assert report.passed
    assert all(r.checked == 200 for r in report.results)


def test_steinberg_map_commutator_fails_with_inverse_t():
    report = check_steinberg_map(PairingHandle.commutator(Q), 50, 0)
    assert report.failing_axioms == ["steinberg"]
    witness = report.result("steinberg").witness
    assert witness == {"f": "t^-1", "g": "-t^-1 + 1", "value": "-1"}
    assert report.result("bimultiplicativity").passed
    assert report.result("antisymmetry").passed


def test_steinberg_map_zero_trials():
    report = check_steinberg_map(PairingHandle.cc(Q), 0, 0)
    assert report.passed and all(r.checked == 0 for r in report.results)


def test_composite_matching_cc_symbol_is_steinberg():
    report = check_steinberg_map(PairingHandle.composite(F7, {(1, 1): 1}), 50, 3)
    assert report.passed


def test_report_json_shape():
    data = check_steinberg_map(PairingHandle.commutator(F7), 3, 0).to_json()
    assert data["pairing"] == "CommutatorPairing" and data["ring"] == "F7"
    assert [r["name"] for r in data["results"]] == ["bimultiplicativity", "steinberg", "antisymmetry", "f_minus_f"]


def test_characterization_examples():
    t = series(Q, "t")
    assert verify_characterization(t, t)
    assert verify_characterization(series(QE2, "1 - e*t^-1"), series(QE2, "1 - t"))
    assert verify_characterization(series(Q, "1"), series(Q, "3*t^-2 + t"))


@pytest.mark.parametrize("spec", ["F7", "Z/4", "Z/27", "Q[e]/e^2"])
def test_characterization_random(spec):
    ring = parse_ring_spec(spec)
    for seed in range(40):
        f = random_gamma_series(ring, "anyGamma", seed)
        g = random_gamma_series(ring, "anyGamma", seed + 999)
        assert verify_characterization(f, g)

"""Cocycle, coboundary and Steinberg-map checks for pairings on unit Laurent series."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .laurent import LaurentSeries, winding_number
from .rings import Ring, RingElement, rationals
from .sampling import STEINBERG_STRATA, sample_profile, sample_steinberg, steinberg_feasible
from .symbol import SymbolValue, cc_symbol, commutator_pairing

# ---------------------------------------------------------------------------
# pairings


@dataclass(frozen=True)
class PairingHandle:
    """A named pairing ``Gamma x Gamma -> A^x`` over a fixed ring.

    ``kind`` is ``"CommutatorPairing"``, ``"CCSymbol"`` or ``"UserComposite"``.
    A user composite multiplies the commutator pairing by ``(-1)^e`` where
    ``e = sign_twist[(w(f) % 2, w(g) % 2)]`` (missing entries mean 0); the
    table ``{(1, 1): 1}`` reproduces the Contou-Carrere symbol.
    """

    kind: str
    ring: Ring
    sign_twist: tuple = ()

    KINDS = ("CommutatorPairing", "CCSymbol", "UserComposite")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown pairing kind {self.kind!r}")

    @classmethod
    def commutator(cls, ring: Ring) -> "PairingHandle":
        return cls("CommutatorPairing", ring)

    @classmethod
    def cc(cls, ring: Ring) -> "PairingHandle":
        return cls("CCSymbol", ring)

    @classmethod
    def composite(cls, ring: Ring, table: dict) -> "PairingHandle":
        return cls("UserComposite", ring, tuple(sorted(table.items())))

    def __call__(self, f: LaurentSeries, g: LaurentSeries) -> SymbolValue:
        if self.kind == "CCSymbol":
            return cc_symbol(f, g)
        value = commutator_pairing(f, g)
        if self.kind == "UserComposite":
            e = dict(self.sign_twist).get((winding_number(f) % 2, winding_number(g) % 2), 0)
            if e % 2:
                value = SymbolValue(-value.value)
        return value

    def __str__(self):
        return self.kind


# ---------------------------------------------------------------------------
# reports


@dataclass
class PropertyResult:
    """Outcome of one identity over a batch of samples; ``witness`` is the first failure."""

    name: str
    kind: str  # "axiom" or "derived"
    checked: int = 0
    failures: int = 0
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness() if callable(witness) else witness

    def to_json(self):
        return {
            "name": self.name,
            "kind": self.kind,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.passed,
            "witness": self.witness,
        }


@dataclass
class CheckReport:
    pairing: str
    ring: str
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failing_axioms(self) -> list[str]:
        return [r.name for r in self.results if r.kind == "axiom" and not r.passed]

    @property
    def failing(self) -> list[str]:
        return [r.name for r in self.results if not r.passed]

    def result(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_json(self):
        return {
            "pairing": self.pairing,
            "ring": self.ring,
            "passed": self.passed,
            "results": [r.to_json() for r in self.results],
        }


def _series_witness(**items) -> dict:
    out = {}
    for key, value in items.items():
        if isinstance(value, LaurentSeries):
            out[key] = value.to_expression()
        else:
            out[key] = str(value)
    return out


# ---------------------------------------------------------------------------
# 2-cocycles


def check_two_cocycle(p: PairingHandle, triples) -> CheckReport:
    """Test ``c(f,g) c(fg,h) = c(f,gh) c(g,h)`` on each triple."""
    report = CheckReport(str(p), str(p.ring))
    res = PropertyResult("cocycle", "axiom")
    report.results.append(res)
    for f, g, h in triples:
        left = p(f, g) * p(f * g, h)
        right = p(f, g * h) * p(g, h)
        res.record(left == right, lambda: _series_witness(f=f, g=g, h=h, left=left, right=right))
    return report


# ---------------------------------------------------------------------------
# coboundaries on winding numbers


def canonical_coboundary(alpha: int, beta: int, ring: Ring | None = None) -> RingElement:
    """``(-1)^(alpha * beta)`` in ``ring`` (default ``Q``)."""
    ring = ring or rationals()
    return RingElement(ring, ring.from_int(-1 if (alpha * beta) % 2 else 1))


@dataclass(frozen=True)
class CoboundaryWitness:
    """``phi(a) = (-1)^(a(a-1)/2) * lam1^a``, whose coboundary is ``(-1)^(a b)``."""

    lam1: RingElement
    window: tuple[int, int] = (-10, 10)

    def __post_init__(self):
        if not self.lam1.is_unit():
            raise ValueError(f"{self.lam1} is not a unit")

    def phi(self, alpha: int) -> RingElement:
        ring = self.lam1.ring
        sign = ring.from_int(-1 if (alpha * (alpha - 1) // 2) % 2 else 1)
        return RingElement(ring, ring.mul(sign, ring.pow(self.lam1.payload, alpha)))

    def table(self) -> dict[int, RingElement]:
        lo, hi = self.window
        return {a: self.phi(a) for a in range(lo, hi + 1)}


def coboundary_from_witness(w: CoboundaryWitness, alpha: int, beta: int) -> RingElement:
    """``phi(alpha + beta) / (phi(alpha) phi(beta))``."""
    return w.phi(alpha + beta) * (w.phi(alpha) * w.phi(beta)).inverse()


# ---------------------------------------------------------------------------
# Steinberg maps


def check_steinberg_map(p: PairingHandle, trials: int, seed: int) -> CheckReport:
    """Sample the Steinberg-map axioms and their consequences for ``p``.

    Axioms are bimultiplicativity and ``p(f, 1 - f) = 1``; the derived
    properties are ``p(g, f) = p(f, g)^-1`` and ``p(f, -f) = 1``.  The first
    Steinberg trial always uses ``f = 1/t``; later ones cycle through the
    winding-number strata.
    """
    ring = p.ring
    rng = random.Random(f"steinberg-map/{ring}/{seed}")
    report = CheckReport(str(p), str(ring))
    bimult = PropertyResult("bimultiplicativity", "axiom")
    steinberg = PropertyResult("steinberg", "axiom")
    antisym = PropertyResult("antisymmetry", "derived")
    minus = PropertyResult("f_minus_f", "derived")
    report.results.extend([bimult, steinberg, antisym, minus])
    strata = [s for s in STEINBERG_STRATA if steinberg_feasible(ring, s)]
    for k in range(trials):
        if k == 0:
            f = LaurentSeries.monomial(ring, 1, -1)
        else:
            f = sample_steinberg(ring, strata[k % len(strata)], rng)
        value = p(f, 1 - f)
        steinberg.record(value == 1, lambda: _series_witness(f=f, g=1 - f, value=value))

        a, b, c = (sample_profile(ring, "anyGamma", rng) for _ in range(3))
        ok = p(a, b * c) == p(a, b) * p(a, c) and p(a * b, c) == p(a, c) * p(b, c)
        bimult.record(ok, lambda: _series_witness(f=a, g=b, h=c))

        fwd, back = p(a, b), p(b, a)
        antisym.record(fwd * back == 1, lambda: _series_witness(f=a, g=b, value=fwd, reverse=back))
        value = p(a, -a)
        minus.record(value == 1, lambda: _series_witness(f=a, g=-a, value=value))
    return report


def verify_characterization(f: LaurentSeries, g: LaurentSeries) -> bool:
    """``<f, g> == (-1)^(w(f) w(g)) {f, g}``, and ``<f, g> == {f, g}`` when ``w(f) == 0``."""
    cc = cc_symbol(f, g)
    comm = commutator_pairing(f, g)
    wf, wg = winding_number(f), winding_number(g)
    if cc != comm * canonical_coboundary(wf, wg, f.ring):
        return False
    return wf != 0 or cc == comm

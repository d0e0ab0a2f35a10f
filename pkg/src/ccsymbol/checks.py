"""Seeded verification suites behind ``ccsymbol check``.

Each suite draws its samples from one ``random.Random`` seeded by the suite
name, ring and seed, so a run is fully determined by its arguments.
"""

from __future__ import annotations

import random
import shlex
from dataclasses import dataclass, field
from typing import Callable

from .cohomology import PairingHandle, verify_characterization
from .errors import CCError
from .laurent import LaurentSeries
from .rings import Ring
from .sampling import STEINBERG_STRATA, sample_profile, sample_steinberg, steinberg_feasible
from .symbol import NormContext, adjunction_sides, cc_symbol, reparameterized_symbol, residue_symbol, tame_symbol

DEFAULT_PHI = "t^2"
DEFAULT_TAU = "t + t^2"


class SuiteNotApplicable(CCError, ValueError):
    """The suite's identity is not defined over the requested ring."""


@dataclass
class SuiteResult:
    name: str
    ring: str
    trials: int
    passed: int = 0
    failed: int = 0
    witness: dict | None = None
    skipped: str | None = None
    reproduce: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, witness: Callable[[], dict]) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.witness is None:
            self.witness = witness()

    def to_json(self):
        out = {"suite": self.name, "trials": self.trials, "passed": self.passed, "failed": self.failed}
        if self.skipped:
            out["skipped"] = self.skipped
        return out

    def summary(self) -> str:
        if self.skipped:
            return f"{self.name}: skipped ({self.skipped})"
        status = "ok" if self.ok else "FAIL"
        return f"{self.name}: {status} {self.passed}/{self.passed + self.failed}"


@dataclass
class SuiteOptions:
    phi: LaurentSeries | None = None
    tau: LaurentSeries | None = None
    extra_args: list[str] = field(default_factory=list)


def _expr(**items) -> dict:
    return {k: v.to_expression() if isinstance(v, LaurentSeries) else str(v) for k, v in items.items()}


def _rng(name: str, ring: Ring, seed: int) -> random.Random:
    return random.Random(f"check/{name}/{ring}/{seed}")


def _any(ring, rng):
    return sample_profile(ring, "anyGamma", rng)


def suite_steinberg(ring, trials, seed, opts, res):
    rng = _rng("steinberg", ring, seed)
    strata = [s for s in STEINBERG_STRATA if steinberg_feasible(ring, s)]
    for k in range(trials):
        f = sample_steinberg(ring, strata[k % len(strata)], rng)
        value = cc_symbol(f, 1 - f)
        res.record(value == 1, lambda: _expr(f=f, g=1 - f, value=value))


def suite_bimult(ring, trials, seed, opts, res):
    rng = _rng("bimult", ring, seed)
    for _ in range(trials):
        f, g, h = _any(ring, rng), _any(ring, rng), _any(ring, rng)
        left, right = cc_symbol(f, g * h), cc_symbol(f, g) * cc_symbol(f, h)
        left2, right2 = cc_symbol(f * g, h), cc_symbol(f, h) * cc_symbol(g, h)
        ok = left == right and left2 == right2
        res.record(ok, lambda: _expr(f=f, g=g, h=h, left=left, right=right, left_first_slot=left2, right_first_slot=right2))


def suite_antisym(ring, trials, seed, opts, res):
    rng = _rng("antisym", ring, seed)
    for _ in range(trials):
        f, g = _any(ring, rng), _any(ring, rng)
        fg, gf, ff = cc_symbol(f, g), cc_symbol(g, f), cc_symbol(f, -f)
        res.record(fg * gf == 1 and ff == 1, lambda: _expr(f=f, g=g, fg=fg, gf=gf, f_minus_f=ff))


def suite_tame(ring, trials, seed, opts, res):
    if not ring.is_field:
        raise SuiteNotApplicable(f"tame symbol needs a field, {ring} is not one")
    rng = _rng("tame", ring, seed)
    for _ in range(trials):
        f, g = _any(ring, rng), _any(ring, rng)
        cc, tame = cc_symbol(f, g), tame_symbol(f, g)
        res.record(cc == tame, lambda: _expr(f=f, g=g, cc_symbol=cc, tame_symbol=tame))


def suite_residue(ring, trials, seed, opts, res):
    if not ring.is_q_algebra:
        raise SuiteNotApplicable(f"residue formula needs a Q-algebra, {ring} is not one")
    rng = _rng("residue", ring, seed)
    for _ in range(trials):
        f, g = sample_profile(ring, "onePlusNilpotent", rng), _any(ring, rng)
        cc, rs = cc_symbol(f, g), residue_symbol(f, g)
        res.record(cc == rs, lambda: _expr(f=f, g=g, cc_symbol=cc, residue_symbol=rs))


def suite_adjunction(ring, trials, seed, opts, res):
    ctx = NormContext.from_phi(opts.phi)
    rng = _rng("adjunction", ring, seed)
    for _ in range(trials):
        f, g = _any(ring, rng), _any(ring, rng)
        left, right = adjunction_sides(f, g, ctx)
        res.record(left == right, lambda: _expr(f=f, g=g, phi=ctx.phi, left=left, right=right))


def suite_reparam(ring, trials, seed, opts, res):
    tau = opts.tau
    rng = _rng("reparam", ring, seed)
    for _ in range(trials):
        f, g = _any(ring, rng), _any(ring, rng)
        before, after = cc_symbol(f, g), reparameterized_symbol(f, g, tau)
        res.record(before == after, lambda: _expr(f=f, g=g, tau=tau, before=before, after=after))


def suite_cocycle(ring, trials, seed, opts, res):
    rng = _rng("cocycle", ring, seed)
    pairings = (PairingHandle.cc(ring), PairingHandle.commutator(ring))
    for _ in range(trials):
        f, g, h = _any(ring, rng), _any(ring, rng), _any(ring, rng)
        for p in pairings:
            left = p(f, g) * p(f * g, h)
            right = p(f, g * h) * p(g, h)
            if left != right:
                res.record(False, lambda: _expr(pairing=p, f=f, g=g, h=h, left=left, right=right))
                break
        else:
            res.record(True, dict)


def suite_characterization(ring, trials, seed, opts, res):
    rng = _rng("characterization", ring, seed)
    for _ in range(trials):
        f, g = _any(ring, rng), _any(ring, rng)
        res.record(verify_characterization(f, g), lambda: _expr(f=f, g=g))


SUITES: dict[str, Callable] = {
    "steinberg": suite_steinberg,
    "bimult": suite_bimult,
    "antisym": suite_antisym,
    "tame": suite_tame,
    "residue": suite_residue,
    "adjunction": suite_adjunction,
    "reparam": suite_reparam,
    "cocycle": suite_cocycle,
    "characterization": suite_characterization,
}


def reproduce_command(name: str, ring: Ring, trials: int, seed: int, extra_args=()) -> str:
    args = ["ccsymbol", "check", name, "--ring", str(ring), "--trials", str(trials), "--seed", str(seed)]
    args.extend(extra_args)
    return " ".join(shlex.quote(a) for a in args)


def run_suite(name: str, ring: Ring, trials: int, seed: int, opts: SuiteOptions | None = None) -> SuiteResult:
    """Run one suite; raises :class:`SuiteNotApplicable` if it makes no sense over ``ring``."""
    from .parsing import parse_series

    opts = opts or SuiteOptions()
    if opts.phi is None:
        opts.phi = parse_series(DEFAULT_PHI, ring)
    if opts.tau is None:
        opts.tau = parse_series(DEFAULT_TAU, ring)
    res = SuiteResult(name, str(ring), trials)
    SUITES[name](ring, trials, seed, opts, res)
    if not res.ok:
        res.reproduce = reproduce_command(name, ring, trials, seed, opts.extra_args)
    return res


def run_all(ring: Ring, trials: int, seed: int, opts: SuiteOptions | None = None) -> list[SuiteResult]:
    """Every suite in order; inapplicable ones are reported as skipped."""
    results = []
    for name in SUITES:
        try:
            results.append(run_suite(name, ring, trials, seed, opts))
        except SuiteNotApplicable as exc:
            results.append(SuiteResult(name, str(ring), trials, skipped=str(exc)))
    return results

"""The commutator pairing, the Contou-Carrere symbol and its specializations."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import gcd
from typing import Callable, TypeVar

from .errors import (
    NonTermination,
    NotAField,
    NotAUnitSeries,
    NotOnePlusNilpotent,
    NotQAlgebra,
    RingMismatch,
    TruncationTooCoarse,
    ZeroWindingComposition,
)
from .laurent import (
    LaurentSeries,
    classify_gamma,
    compose,
    derivative,
    exp_nilpotent,
    log_one_plus,
    ls_invert,
    winding_number,
)
from .rings import RingElement
from .witt import _Factored, _neg_params, split_gamma0

T = TypeVar("T")

MAX_WORKING_PRECISION = 1 << 12

# recompute every symbol with a doubled parameter bound and compare
_DEBUG = os.environ.get("CCSYMBOL_DEBUG", "") not in ("", "0")


@dataclass(frozen=True)
class SymbolValue:
    """A unit of the coefficient ring produced by a pairing."""

    value: RingElement

    def __eq__(self, other):
        if isinstance(other, SymbolValue):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __mul__(self, other):
        other = other.value if isinstance(other, SymbolValue) else other
        return SymbolValue(self.value * other)

    def inverse(self) -> "SymbolValue":
        return SymbolValue(self.value.inverse())

    def __str__(self):
        return str(self.value)

    def to_json(self):
        return self.value.to_json()


def with_precision(fn: Callable[[int], T], start: int = 8, limit: int = MAX_WORKING_PRECISION) -> T:
    """Call ``fn(prec)`` with growing ``prec`` until it stops raising :class:`TruncationTooCoarse`."""
    prec = start
    while True:
        try:
            return fn(prec)
        except TruncationTooCoarse:
            if prec >= limit:
                raise
            prec = min(2 * prec, limit)


def _bound_from_negatives(neg: dict, ring) -> int:
    bound = 0
    for j, b in neg.items():
        bound = max(bound, j * ring.nilpotency_order(b))
    return bound


def _neg_of(f: LaurentSeries) -> dict:
    cls = classify_gamma(f)
    if not cls.member:
        raise NotAUnitSeries(f"{f} is not invertible")
    _, h = split_gamma0(f.shift(-cls.w))
    return _neg_params(h)


def required_pos_bound(f: LaurentSeries, g: LaurentSeries) -> int:
    """How many positive Witt parameters of ``f`` the pairing with ``g`` can see.

    Factors involving ``a_i`` with ``i`` above the returned bound are exactly
    one, because the matching power of each negative parameter ``b_{-j}`` of
    ``g`` vanishes.  The bound for ``g``'s parameters is
    ``required_pos_bound(g, f)``.
    """
    return _bound_from_negatives(_neg_of(g), g.ring)


def _cross_product(ring, pos: list, neg: dict):
    """``prod_{i,j} (1 - p_i^{j/d} n_j^{i/d})^d`` with ``d = gcd(i, j)``; ``pos[i-1] = p_i``."""
    one, zero = ring.one, ring.zero
    total = one
    for j, b in neg.items():
        order = ring.nilpotency_order(b)
        for i, a in enumerate(pos, start=1):
            if a == zero:
                continue
            d = gcd(i, j)
            if i // d >= order:
                continue
            term = ring.sub(one, ring.mul(ring.pow(a, j // d), ring.pow(b, i // d)))
            total = ring.mul(total, ring.pow(term, d))
    return total


def _commutator_payload(f: LaurentSeries, g: LaurentSeries, pos_bound: int | None = None):
    if f.ring != g.ring:
        raise RingMismatch("both series must live over one ring")
    ring = f.ring
    ff = _Factored(f)
    gg = _Factored(g)
    if pos_bound is None:
        kf = _bound_from_negatives(gg.neg, ring)
        kg = _bound_from_negatives(ff.neg, ring)
    else:
        kf = kg = pos_bound
    value = _closed_formula(ring, ff, gg, kf, kg)
    if pos_bound is None and _DEBUG:
        # factors past the bound must be exactly 1
        wider = _closed_formula(ring, ff, gg, 2 * kf + 1, 2 * kg + 1)
        if wider != value:
            raise NonTermination(f"symbol changed when widening the bound: {f}, {g}")
    return value, ff.w, gg.w


def _closed_formula(ring, ff: _Factored, gg: _Factored, kf: int, kg: int):
    num = ring.mul(ring.pow(ff.a0, gg.w), _cross_product(ring, ff.pos(kf), gg.neg))
    den = ring.mul(ring.pow(gg.a0, ff.w), _cross_product(ring, gg.pos(kg), ff.neg))
    return ring.mul(num, ring.inv(den))


def commutator_pairing(f: LaurentSeries, g: LaurentSeries, pos_bound: int | None = None) -> SymbolValue:
    """The commutator ``{f, g}`` of lifts to the central extension, via its closed formula.

    ``pos_bound`` overrides the automatic number of positive parameters; a
    value below :func:`required_pos_bound` can give a different answer.
    """
    value, _, _ = _commutator_payload(f, g, pos_bound)
    return SymbolValue(RingElement(f.ring, value))


def cc_symbol(f: LaurentSeries, g: LaurentSeries, pos_bound: int | None = None) -> SymbolValue:
    """The Contou-Carrere symbol ``<f, g> = (-1)^{w(f) w(g)} {f, g}``."""
    value, wf, wg = _commutator_payload(f, g, pos_bound)
    ring = f.ring
    if (wf * wg) % 2:
        value = ring.neg(value)
    return SymbolValue(RingElement(ring, value))


def tame_symbol(f: LaurentSeries, g: LaurentSeries) -> SymbolValue:
    """Milnor's tame symbol for the t-adic valuation; the ring must be a field.

    Evaluates ``(-1)^{v(f) v(g)} f^{v(g)} / g^{v(f)}`` as a series and reads
    off its constant term.
    """
    ring = f.ring
    if not ring.is_field:
        raise NotAField(f"{ring} is not a field")
    vf, vg = winding_number(f), winding_number(g)
    quotient = _signed_power(f, vg) * _signed_power(g, -vf)
    value = quotient.coeff(0)
    if (vf * vg) % 2:
        value = ring.neg(value)
    return SymbolValue(RingElement(ring, value))


def _signed_power(f: LaurentSeries, e: int) -> LaurentSeries:
    if e >= 0:
        base = f.truncate(f.val + 1)
        return base**e
    inv = ls_invert(f, -f.val + 1)
    return inv ** (-e)


def residue_symbol(f: LaurentSeries, g: LaurentSeries) -> SymbolValue:
    """``exp(Res(log f * dg / g))`` for ``f`` in ``1 + m((t))`` over a Q-algebra."""
    ring = f.ring
    if not ring.is_q_algebra:
        raise NotQAlgebra(f"{ring} is not a Q-algebra")
    h = f - 1
    for _, c in h.items():
        if ring.is_unit(c):
            raise NotOnePlusNilpotent(f"{f} is not 1 plus a series with nilpotent coefficients")
    cls = classify_gamma(g)
    if not cls.member:
        raise NotAUnitSeries(f"{g} is not invertible")
    log_f = log_one_plus(h)
    if not log_f.coeffs:
        return SymbolValue(RingElement(ring, ring.one))
    dg = derivative(g)

    def attempt(prec):
        dlog = dg * ls_invert(g, prec)
        return (log_f * dlog).coeff(-1)

    start = log_f.negative_depth + abs(cls.w) + 2
    res = with_precision(attempt, start)
    return SymbolValue(exp_nilpotent(RingElement(ring, res)))


# ---------------------------------------------------------------------------
# norm map


@dataclass(frozen=True)
class NormContext:
    """A series ``phi`` of positive winding number ``n`` defining ``A((t))`` over ``A((phi))``."""

    phi: LaurentSeries
    n: int

    @classmethod
    def from_phi(cls, phi: LaurentSeries) -> "NormContext":
        if not phi.is_exact:
            raise ValueError("the norm map needs an exact (finite-support) phi")
        n = winding_number(phi)
        if n < 1:
            raise ZeroWindingComposition(f"phi must have positive winding number, got {n}")
        return cls(phi, n)


class _PhiPowers:
    """Cache of ``phi^q`` known through a requested exponent."""

    def __init__(self, phi: LaurentSeries):
        self.phi = phi
        self.pos = {0: LaurentSeries.one(phi.ring)}
        self.neg = {}
        self._inv = None
        self._inv_prec = None

    def get(self, q: int, need: int) -> LaurentSeries:
        if q >= 0:
            while q not in self.pos:
                k = max(self.pos)
                self.pos[k + 1] = self.pos[k] * self.phi
            return self.pos[q]
        cached = self.neg.get(q)
        if cached is not None and (cached.prec is None or cached.prec >= need):
            return cached
        work = need + 8
        while True:
            inv = ls_invert(self.phi, work) if not self._exact_inverse() else self._inv
            power = inv ** (-q)
            if power.prec is None or power.prec >= need:
                self.neg[q] = power
                return power
            work += need - power.prec + 8

    def _exact_inverse(self) -> bool:
        if self._inv is None:
            try:
                inv = ls_invert(self.phi)
            except TruncationTooCoarse:
                inv = False
            self._inv = inv if inv is not False and inv.is_exact else False
        return self._inv is not False


def _level(ring, c) -> int:
    return ring.level(c) if c != ring.zero else ring.nilpotency_index


def phi_adic_digits(F: LaurentSeries, ctx: NormContext, top: int, powers: _PhiPowers | None = None):
    """Expand ``F = sum_r c_r(phi) t^r`` with ``0 <= r < n``.

    Terms are eliminated lowest-first, one m-adic layer per pass.  Returns the
    ``n`` digit series in the variable ``u = phi`` (written in ``t``), each
    truncated where the expansion is determined by the coefficients of ``F``
    up to exponent ``top``.
    """
    ring = F.ring
    phi, n = ctx.phi, ctx.n
    nu = ring.nilpotency_index
    reach = (nu - 1) * (n + phi.negative_depth)
    powers = powers or _PhiPowers(phi)
    lead_inv = ring.inv(phi.coeff(n))
    if F.prec is not None and F.prec < top:
        raise TruncationTooCoarse(f"series known only through t^{F.prec}, t^{top} needed")
    residual = F.truncate(top)
    digits = [dict() for _ in range(n)]
    for _ in range(nu):
        if not residual.coeffs:
            break
        v = residual.val
        while v <= top:
            x = residual.coeff(v)
            if x != ring.zero:
                q, r = divmod(v, n)
                c = ring.mul(x, ring.pow(lead_inv, q))
                digits[r][q] = ring.add(digits[r].get(q, ring.zero), c)
                term = powers.get(q, top - r).scale(c).shift(r)
                residual = residual - term
                if residual.prec is not None and residual.prec < top:
                    raise TruncationTooCoarse("powers of phi not known far enough")
            v += 1
    out = []
    for r in range(n):
        qmax = (top - reach - r) // n
        series = LaurentSeries.from_dict(ring, {q: RingElement(ring, c) for q, c in digits[r].items() if q <= qmax}, qmax)
        out.append(series)
    return out


def _determinant(matrix: list[list[LaurentSeries]], ring) -> LaurentSeries:
    n = len(matrix)
    total = LaurentSeries.zero(ring)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = LaurentSeries.one(ring)
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
        total = total - term if inversions % 2 else total + term
    return total


def norm_map(ctx: NormContext, f: LaurentSeries, prec: int | None = None) -> LaurentSeries:
    """Determinant of multiplication by ``f`` on the basis ``1, t, ..., t^(n-1)`` over ``A((phi))``.

    The result is a series in ``phi`` written in the variable ``t``.  With
    ``prec`` given, the working window grows until the determinant is known
    through ``t^prec``.
    """
    if f.ring != ctx.phi.ring:
        from .errors import RingMismatch

        raise RingMismatch("f and phi must live over one ring")
    cls = classify_gamma(f)
    if not cls.member:
        raise NotAUnitSeries(f"{f} is not invertible")
    ring = f.ring
    n = ctx.n
    powers = _PhiPowers(ctx.phi)
    reach = (ring.nilpotency_index - 1) * (n + ctx.phi.negative_depth)
    target = 0 if prec is None else prec
    top = max(target, 0) * n + 2 * n + reach + abs(f.val) + 4
    while True:
        try:
            matrix_cols = []
            for k in range(n):
                col = phi_adic_digits(f.shift(k), ctx, top, powers)
                matrix_cols.append(col)
            matrix = [[matrix_cols[k][row] for k in range(n)] for row in range(n)]
            det = _determinant(matrix, ring)
            if det.prec is None or det.prec >= target:
                return det if prec is None else det.truncate(prec)
        except TruncationTooCoarse:
            if f.prec is not None and top >= f.prec:
                raise
        if top > MAX_WORKING_PRECISION:
            raise TruncationTooCoarse("norm map did not reach the requested precision")
        top *= 2
        if f.prec is not None:
            top = min(top, f.prec)


def symbol_with_truncation(f_of: Callable[[int], LaurentSeries], g_of: Callable[[int], LaurentSeries], pairing=None):
    """Evaluate a pairing on series produced at a working precision, raising it as needed."""
    pairing = pairing or cc_symbol
    return with_precision(lambda p: pairing(f_of(p), g_of(p)), start=16)


def verify_adjunction(f: LaurentSeries, g: LaurentSeries, ctx: NormContext) -> bool:
    """Check ``<f, g o phi> == <N_phi(f), g>`` exactly."""
    left = with_precision(lambda p: cc_symbol(f, compose(g, ctx.phi, p)), start=16)
    right = with_precision(lambda p: cc_symbol(norm_map(ctx, f, p), g), start=16)
    return left == right


def adjunction_sides(f: LaurentSeries, g: LaurentSeries, ctx: NormContext) -> tuple[SymbolValue, SymbolValue]:
    left = with_precision(lambda p: cc_symbol(f, compose(g, ctx.phi, p)), start=16)
    right = with_precision(lambda p: cc_symbol(norm_map(ctx, f, p), g), start=16)
    return left, right


def reparameterized_symbol(f: LaurentSeries, g: LaurentSeries, tau: LaurentSeries) -> SymbolValue:
    """``<f o tau, g o tau>`` with working precision chosen automatically."""
    if winding_number(tau) != 1:
        raise ValueError("reparameterization needs winding number 1")
    return with_precision(lambda p: cc_symbol(compose(f, tau, p), compose(g, tau, p)), start=16)

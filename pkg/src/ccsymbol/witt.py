"""Witt-parameter decomposition of unit Laurent series.

Every unit ``f`` of ``A((t))`` factors uniquely as::

    f = t^w * a0 * prod_{i>=1} (1 - a_i t^i) * prod_{i>=1} (1 - a_{-i} t^{-i})

with ``a0`` a unit, ``a_{-i}`` in the maximal ideal and only finitely many of
them nonzero.  The positive parameters are infinite in general, so they are
produced up to a caller-chosen bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonTermination, NotAUnitSeries, NotInGamma0, NotInGammaMinus, NotInGammaPlus, TruncationTooCoarse
from .laurent import LaurentSeries, classify_gamma, ls_invert
from .rings import Ring, RingElement

# Each round of the minus-factor iteration squares the m-adic error, so
# log2(nu) + 1 rounds suffice; this cap only guards against bugs.
_MAX_SPLIT_ROUNDS = 64
_MAX_NEG_STEPS = 100_000


def _power_series_inverse_trunc(ring: Ring, a: list, n: int) -> list:
    from .laurent import _power_series_inverse

    return _power_series_inverse(ring, a, n)


def _truncate_minus(h: LaurentSeries, depth: int) -> LaurentSeries:
    """Drop terms of ``h`` below ``t^-depth``; ``h`` must be exact."""
    if h.val >= -depth:
        return h
    return LaurentSeries(h.ring, -depth, h.coeffs[-depth - h.val:])


def split_gamma0(f: LaurentSeries) -> tuple[LaurentSeries, LaurentSeries]:
    """Factor ``f`` (winding number 0) as ``g_plus * h_minus``.

    ``g_plus`` is a power series unit and ``h_minus`` is ``1`` plus a
    polynomial in ``t^-1`` with coefficients in ``m``.  The minus factor is
    found by a fixed-point iteration that only touches the coefficients of
    ``f`` near the origin; it has the same degree in ``t^-1`` as ``f`` and
    comes out exact.  ``g_plus`` is then ``f / h_minus``, as precise as ``f``.
    """
    cls = classify_gamma(f)
    if not cls.member or cls.w != 0:
        raise NotInGamma0(f"{f} does not have winding number 0")
    ring = f.ring
    depth = f.negative_depth
    one = LaurentSeries.one(ring)
    if depth == 0:
        return f, one
    h = one
    for _ in range(_MAX_SPLIT_ROUNDS):
        h_inv = ls_invert(h)
        q = f * h_inv
        q_minus = q.negative_part()
        if not q_minus.coeffs:
            return q, h
        d = q_minus.negative_depth
        q_plus = q.dense(0, d - 1)
        if not ring.is_unit(q_plus[0]):
            raise NotInGamma0("constant coefficient lost its unit property")
        inv_plus = LaurentSeries(ring, 0, _power_series_inverse_trunc(ring, q_plus, d), d - 1)
        y = (inv_plus * q_minus).negative_part()
        h = _truncate_minus(h * (one + y), depth)
    raise NonTermination("minus-factor iteration did not converge")


def pos_witt_params(g: LaurentSeries, K: int) -> list[RingElement]:
    """``[a_1, ..., a_K]`` with ``g / g(0) = prod (1 - a_i t^i) mod t^(K+1)``."""
    return [RingElement(g.ring, a) for a in _pos_params(g, K)]


def _pos_params(g: LaurentSeries, K: int) -> list:
    ring = g.ring
    if g.coeffs and g.val < 0:
        raise NotInGammaPlus("series has negative exponents")
    c = g.dense(0, K) if K >= 0 else g.dense(0, 0)
    if not ring.is_unit(c[0]):
        raise NotInGammaPlus("constant coefficient is not a unit")
    if K <= 0:
        return []
    inv0 = ring.inv(c[0])
    if c[0] != ring.one:
        c = [ring.mul(inv0, x) for x in c]
    return ring.pos_params(c, K)


def neg_witt_params(h: LaurentSeries) -> dict[int, RingElement]:
    """Finite map ``i -> a_{-i}`` with ``h = prod (1 - a_{-i} t^{-i})`` exactly."""
    return {i: RingElement(h.ring, a) for i, a in _neg_params(h).items()}


def _neg_params(h: LaurentSeries) -> dict:
    ring = h.ring
    if not h.is_exact or (h.coeffs and h.top > 0) or h.coeff(0) != ring.one:
        raise NotInGammaMinus(f"{h} is not 1 plus a polynomial in t^-1")
    zero = ring.zero
    # c[k] is the coefficient of s^k, s = 1/t
    c = [h.coeff(-k) for k in range(h.negative_depth + 1)]
    for x in c[1:]:
        if ring.is_unit(x):
            raise NotInGammaMinus("a coefficient below t^0 is a unit")
    params = {}
    i = 1
    while True:
        while len(c) > 1 and c[-1] == zero:
            c.pop()
        if i >= len(c):
            return params
        if i > _MAX_NEG_STEPS:
            raise NonTermination("negative Witt parameters did not terminate")
        a = ring.neg(c[i])
        if a != zero:
            params[i] = a
            order = ring.nilpotency_order(a)
            geo = [zero] * (i * (order - 1) + 1)
            power = ring.one
            for k in range(order):
                geo[i * k] = power
                power = ring.mul(power, a)
            c = ring.series_mul(c, geo, len(c) + len(geo) - 1)
        i += 1


@dataclass(frozen=True)
class WittDecomposition:
    """Winding number, leading unit and Witt parameters of a unit series."""

    ring: Ring
    w: int
    a0: RingElement
    neg: dict[int, RingElement]
    pos: list[RingElement]
    pos_bound: int
    minus_depth: int = field(default=0, compare=False)

    def pos_map(self) -> dict[int, RingElement]:
        return {i + 1: a for i, a in enumerate(self.pos)}

    def apply_hom(self, target: Ring) -> "WittDecomposition":
        """Entrywise image under a canonical homomorphism; zero negative entries are dropped."""
        neg = {}
        for i, a in self.neg.items():
            b = a.apply_hom(target)
            if b:
                neg[i] = b
        return WittDecomposition(
            target,
            self.w,
            self.a0.apply_hom(target),
            neg,
            [a.apply_hom(target) for a in self.pos],
            self.pos_bound,
            self.minus_depth,
        )

    @property
    def valid_window(self) -> int:
        """Largest exponent where :func:`witt_reconstruct` is determined by these parameters."""
        return self.w + self.pos_bound - self.minus_depth

    def to_json(self):
        return {
            "w": self.w,
            "a0": self.a0.to_json(),
            "neg": {str(i): a.to_json() for i, a in sorted(self.neg.items())},
            "pos": [a.to_json() for a in self.pos],
            "pos_bound": self.pos_bound,
        }

    def __str__(self):
        neg = ", ".join(f"{i}: {a}" for i, a in sorted(self.neg.items()))
        pos = ", ".join(str(a) for a in self.pos)
        return f"w={self.w}, a0={self.a0}, neg={{{neg}}}, pos=[{pos}]"


class _Factored:
    """Split of a unit series, with positive parameters extracted on demand."""

    __slots__ = ("ring", "w", "g_plus", "h_minus", "a0", "neg", "_pos")

    def __init__(self, f: LaurentSeries):
        cls = classify_gamma(f)
        if not cls.member:
            raise NotAUnitSeries(f"{f} is not invertible")
        self.ring = f.ring
        self.w = cls.w
        self.g_plus, self.h_minus = split_gamma0(f.shift(-cls.w))
        self.a0 = self.g_plus.coeff(0)
        self.neg = _neg_params(self.h_minus)
        self._pos = []

    def pos(self, K: int) -> list:
        if K > len(self._pos):
            self._pos = _pos_params(self.g_plus, K)
        return self._pos[:K]


def witt_decompose(f: LaurentSeries, K: int) -> WittDecomposition:
    """Full decomposition with positive parameters ``a_1..a_K``."""
    fac = _Factored(f)
    ring = fac.ring
    return WittDecomposition(
        ring,
        fac.w,
        RingElement(ring, fac.a0),
        {i: RingElement(ring, a) for i, a in sorted(fac.neg.items())},
        [RingElement(ring, a) for a in fac.pos(K)],
        K,
        fac.h_minus.negative_depth,
    )


def _finite_product(d: WittDecomposition) -> LaurentSeries:
    ring = d.ring
    one = LaurentSeries.one(ring)
    plus = one
    for i, a in enumerate(d.pos, start=1):
        if a:
            plus = plus * LaurentSeries(ring, 0, [ring.one] + [ring.zero] * (i - 1) + [ring.neg(a.payload)])
    minus = one
    for i, a in sorted(d.neg.items()):
        minus = minus * LaurentSeries(ring, -i, [ring.neg(a.payload)] + [ring.zero] * (i - 1) + [ring.one])
    return (plus * minus).scale(d.a0).shift(d.w)


def witt_reconstruct(d: WittDecomposition, prec: int | None = None) -> LaurentSeries:
    """Multiply the factors back together.

    The unknown parameters beyond ``pos_bound`` affect exponents above
    ``d.valid_window``, so the result is truncated there; asking for more
    raises :class:`TruncationTooCoarse`.
    """
    result = _finite_product(d).truncate(d.valid_window)
    if prec is not None:
        if prec > result.prec:
            raise TruncationTooCoarse(f"parameters determine the product only through t^{result.prec}")
        result = result.truncate(prec)
    return result


def finite_product(d: WittDecomposition) -> LaurentSeries:
    """The exact Laurent polynomial with parameters ``d`` and ``a_i = 0`` for ``i > pos_bound``."""
    return _finite_product(d)

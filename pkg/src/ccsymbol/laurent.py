"""Laurent series with exact negative parts and tracked truncation.

A :class:`LaurentSeries` stores a dense run of coefficients starting at
exponent ``val`` and a precision ``prec``: every coefficient at an exponent
``<= prec`` is known (absent ones are zero), coefficients above ``prec`` are
unknown.  ``prec is None`` marks an exact series with finite support.

Every operation propagates ``prec`` so that a result never claims a
coefficient it could not have determined from its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import (
    CoefficientNotNilpotent,
    NotAUnitSeries,
    NotQAlgebra,
    RingMismatch,
    TruncationTooCoarse,
    ZeroWindingComposition,
)
from ._rational import RATIONAL_TYPES
from .rings import Ring, RingElement

_INF = math.inf


def _min_prec(*precs):
    known = [p for p in precs if p is not None]
    return min(known) if known else None


class LaurentSeries:
    __slots__ = ("ring", "val", "coeffs", "prec")

    def __init__(self, ring: Ring, val: int, coeffs: list, prec: int | None = None):
        zero = ring.zero
        if prec is not None:
            cut = prec - val + 1
            if cut < len(coeffs):
                coeffs = coeffs[: max(cut, 0)]
        start = 0
        n = len(coeffs)
        while start < n and coeffs[start] == zero:
            start += 1
        end = n
        while end > start and coeffs[end - 1] == zero:
            end -= 1
        if start == end:
            coeffs, val = [], 0
        elif start or end < n:
            coeffs = coeffs[start:end]
            val += start
        self.ring = ring
        self.val = val
        self.coeffs = coeffs
        self.prec = prec

    # construction ---------------------------------------------------------

    @classmethod
    def from_dict(cls, ring: Ring, terms: dict, prec: int | None = None) -> "LaurentSeries":
        """Series from ``{exponent: value}``; values may be ints, Fractions or ring elements."""
        return cls.from_payloads(ring, {k: ring(v).payload for k, v in terms.items()}, prec)

    @classmethod
    def from_payloads(cls, ring: Ring, terms: dict, prec: int | None = None) -> "LaurentSeries":
        """Series from ``{exponent: payload}`` with payloads already in ``ring``'s representation."""
        payloads = {k: p for k, p in terms.items() if p != ring.zero}
        if not payloads:
            return cls(ring, 0, [], prec)
        lo, hi = min(payloads), max(payloads)
        coeffs = [payloads.get(k, ring.zero) for k in range(lo, hi + 1)]
        return cls(ring, lo, coeffs, prec)

    @classmethod
    def constant(cls, ring: Ring, c=1) -> "LaurentSeries":
        return cls(ring, 0, [ring(c).payload])

    @classmethod
    def monomial(cls, ring: Ring, c, k: int) -> "LaurentSeries":
        return cls(ring, k, [ring(c).payload])

    @classmethod
    def one(cls, ring: Ring) -> "LaurentSeries":
        return cls(ring, 0, [ring.one])

    @classmethod
    def zero(cls, ring: Ring) -> "LaurentSeries":
        return cls(ring, 0, [])

    @classmethod
    def t(cls, ring: Ring) -> "LaurentSeries":
        return cls(ring, 1, [ring.one])

    # inspection -------------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    @property
    def is_zero_known(self) -> bool:
        return not self.coeffs

    @property
    def top(self) -> int:
        """Largest stored exponent (``val - 1`` when nothing is stored)."""
        return self.val + len(self.coeffs) - 1

    @property
    def valuation_bound(self):
        """Lower bound for the exponent of the first nonzero coefficient."""
        if self.coeffs:
            return self.val
        return _INF if self.prec is None else self.prec + 1

    @property
    def negative_depth(self) -> int:
        return max(0, -self.val) if self.coeffs else 0

    def coeff(self, k: int):
        """Payload of the coefficient at exponent ``k``."""
        if self.prec is not None and k > self.prec:
            raise TruncationTooCoarse(f"coefficient of t^{k} is beyond the known window (<= {self.prec})")
        i = k - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def __getitem__(self, k: int) -> RingElement:
        return RingElement(self.ring, self.coeff(k))

    def items(self) -> Iterable[tuple[int, object]]:
        zero = self.ring.zero
        for i, c in enumerate(self.coeffs):
            if c != zero:
                yield self.val + i, c

    def coefficients(self) -> dict[int, RingElement]:
        return {k: RingElement(self.ring, c) for k, c in self.items()}

    def dense(self, lo: int, hi: int) -> list:
        """Payloads at exponents ``lo..hi``; every one of them must be known."""
        if hi < lo:
            return []
        if self.prec is not None and hi > self.prec:
            raise TruncationTooCoarse(f"coefficients up to t^{hi} requested, known only to t^{self.prec}")
        zero = self.ring.zero
        out = [zero] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            k = self.val + i
            if lo <= k <= hi:
                out[k - lo] = c
        return out

    def _check_ring(self, other: "LaurentSeries"):
        if other.ring != self.ring:
            raise RingMismatch(f"series over {self.ring} and {other.ring} cannot be combined")

    def _coerce(self, other) -> "LaurentSeries | None":
        if isinstance(other, LaurentSeries):
            self._check_ring(other)
            return other
        if isinstance(other, (int, RingElement) + RATIONAL_TYPES):
            return LaurentSeries.constant(self.ring, other)
        return None

    # comparison -------------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.prec is not None or other.prec is not None:
            raise TruncationTooCoarse(
                "equality of truncated series is undefined; use agrees_with(other, upto)"
            )
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self):
        if self.prec is not None:
            raise TypeError("truncated series are unhashable")
        return hash((self.ring, self.val, tuple(self.coeffs)))

    def agrees_with(self, other: "LaurentSeries", upto: int) -> bool:
        """Compare coefficients at every exponent ``<= upto``; both must be known there."""
        other = self._coerce(other)
        lo = min(self.val if self.coeffs else upto, other.val if other.coeffs else upto)
        return self.dense(lo, upto) == other.dense(lo, upto)

    # arithmetic -------------------------------------------------------------

    def _linear(self, other: "LaurentSeries", op: Callable) -> "LaurentSeries":
        ring = self.ring
        prec = _min_prec(self.prec, other.prec)
        if not self.coeffs and not other.coeffs:
            return LaurentSeries(ring, 0, [], prec)
        lo = min(k for k in (self.val if self.coeffs else None, other.val if other.coeffs else None) if k is not None)
        hi = max(self.top if self.coeffs else lo, other.top if other.coeffs else lo)
        if prec is not None:
            hi = min(hi, prec)
        a = self._window(lo, hi)
        b = other._window(lo, hi)
        return LaurentSeries(ring, lo, [op(x, y) for x, y in zip(a, b)], prec)

    def _window(self, lo, hi):
        zero = self.ring.zero
        out = [zero] * max(hi - lo + 1, 0)
        for i, c in enumerate(self.coeffs):
            k = self.val + i
            if lo <= k <= hi:
                out[k - lo] = c
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._linear(other, self.ring.add)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._linear(other, self.ring.sub)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._linear(self, self.ring.sub)

    def __neg__(self):
        neg = self.ring.neg
        return LaurentSeries(self.ring, self.val, [neg(c) for c in self.coeffs], self.prec)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ring = self.ring
        vf, vg = self.valuation_bound, other.valuation_bound
        if self.prec is None and other.prec is None:
            prec = None
        else:
            cands = []
            if self.prec is not None:
                cands.append(self.prec + vg)
            if other.prec is not None:
                cands.append(other.prec + vf)
            prec = min(cands)
            if prec == _INF:
                prec = None
        if not self.coeffs or not other.coeffs:
            return LaurentSeries(ring, 0, [], prec)
        lo = self.val + other.val
        hi = self.top + other.top
        if prec is not None:
            hi = min(hi, prec)
        if hi < lo:
            return LaurentSeries(ring, 0, [], prec)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = ring.series_mul(a, b, hi - lo + 1)
        return LaurentSeries(ring, lo, out, prec)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentSeries":
        """Multiply every coefficient by the ring element (or payload) ``c``."""
        ring = self.ring
        p = c.payload if isinstance(c, RingElement) else c
        mul = ring.mul
        return LaurentSeries(ring, self.val, [mul(p, x) for x in self.coeffs], self.prec)

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.invert() ** (-n)
        result = LaurentSeries.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by ``t**k``."""
        return LaurentSeries(
            self.ring, self.val + k, self.coeffs, None if self.prec is None else self.prec + k
        )

    def truncate(self, prec: int) -> "LaurentSeries":
        new = prec if self.prec is None else min(prec, self.prec)
        return LaurentSeries(self.ring, self.val, self.coeffs, new)

    def positive_part(self) -> "LaurentSeries":
        """Terms with exponent ``>= 0``."""
        if self.val >= 0:
            return self
        return LaurentSeries(self.ring, 0, self.coeffs[-self.val:] if self.top >= 0 else [], self.prec)

    def negative_part(self) -> "LaurentSeries":
        """Terms with exponent ``< 0``, as an exact series."""
        if self.prec is not None and self.prec < -1:
            raise TruncationTooCoarse("negative part is not fully known")
        if self.val >= 0:
            return LaurentSeries(self.ring, 0, [])
        return LaurentSeries(self.ring, self.val, self.coeffs[: -self.val])

    def map_coefficients(self, target: Ring) -> "LaurentSeries":
        h = self.ring.hom_to(target)
        return LaurentSeries(target, self.val, [h(c) for c in self.coeffs], self.prec)

    def apply_hom(self, target: Ring) -> "LaurentSeries":
        return self.map_coefficients(target)

    def div_by_integer(self, n: int) -> "LaurentSeries":
        ring = self.ring
        return LaurentSeries(ring, self.val, [ring.div_int(c, n) for c in self.coeffs], self.prec)

    # unit structure -------------------------------------------------------

    def classify(self) -> "GammaClass":
        return classify_gamma(self)

    def winding_number(self) -> int:
        return winding_number(self)

    def invert(self, prec: int | None = None) -> "LaurentSeries":
        return ls_invert(self, prec)

    def derivative(self) -> "LaurentSeries":
        return derivative(self)

    def residue(self) -> RingElement:
        return residue(self)

    def compose(self, phi: "LaurentSeries", prec: int | None = None) -> "LaurentSeries":
        return compose(self, phi, prec)

    # rendering --------------------------------------------------------------

    def to_expression(self) -> str:
        """Render in the series expression grammar (parseable by :func:`parse_series`)."""
        ring = self.ring
        parts = []
        for k, c in self.items():
            s = ring.render(c)
            neg = False
            if s.startswith("-") and not s.startswith("("):
                neg, s = True, s[1:]
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                term = s
            elif s == "1":
                term = mono
            else:
                term = f"{s}*{mono}"
            parts.append((neg, term))
        if not parts:
            return "0"
        neg, term = parts[0]
        out = f"-{term}" if neg else term
        for neg, term in parts[1:]:
            out += f" - {term}" if neg else f" + {term}"
        return out

    def __str__(self):
        body = self.to_expression()
        if self.prec is None:
            return body
        return f"{body} + O(t^{self.prec + 1})"

    def __repr__(self):
        return f"LaurentSeries({self.ring}, {self})"

    def to_json(self):
        return {
            "coefficients": {str(k): self.ring.to_json(c) for k, c in self.items()},
            "precision": self.prec,
        }


@dataclass(frozen=True)
class GammaClass:
    """Membership of a series in the unit group and its distinguished subgroups."""

    member: bool
    w: int | None = None
    in_gamma0: bool = False
    in_gamma_plus: bool = False
    in_gamma_minus: bool = False

    def __str__(self):
        if not self.member:
            return "NotInvertible"
        flags = [n for n, on in (("Gamma0", self.in_gamma0), ("Gamma+", self.in_gamma_plus), ("Gamma-", self.in_gamma_minus)) if on]
        return f"Member(w={self.w}{''.join(', ' + f for f in flags)})"


NOT_INVERTIBLE = GammaClass(False)


def classify_gamma(f: LaurentSeries) -> GammaClass:
    """Locate the lowest unit coefficient; lower ones are automatically in ``m``."""
    ring = f.ring
    w = None
    for i, c in enumerate(f.coeffs):
        if ring.is_unit(c):
            w = f.val + i
            break
    if w is None:
        if f.prec is not None:
            raise TruncationTooCoarse("no unit coefficient inside the known window")
        return NOT_INVERTIBLE
    if w != 0:
        return GammaClass(True, w)
    plus = f.val >= 0
    minus = f.prec is None and f.top <= 0 and f.coeff(0) == ring.one
    return GammaClass(True, 0, True, plus, minus)


def winding_number(f: LaurentSeries) -> int:
    cls = classify_gamma(f)
    if not cls.member:
        raise NotAUnitSeries(f"{f} is not invertible")
    return cls.w


def _power_series_inverse(ring: Ring, a: list, n: int) -> list:
    """First ``n`` coefficients of ``1/a`` for a dense power series with unit constant term."""
    b = [ring.inv(a[0])]
    size = 1
    two = ring.from_int(2)
    while size < n:
        size = min(2 * size, n)
        e = ring.series_mul(a[:size], b, size)
        e = [ring.neg(x) for x in e]
        e[0] = ring.add(e[0], two)
        b = ring.series_mul(b, e, size)
    return b[:n]


def _nilpotent_geometric(x: LaurentSeries, terms: int) -> LaurentSeries:
    """``sum_{k < terms} (-x)^k`` for a series with nilpotent coefficients."""
    mx = -x
    total = LaurentSeries.one(x.ring)
    power = total
    for _ in range(terms - 1):
        power = power * mx
        if power.is_exact and not power.coeffs:
            break
        total = total + power
    return total


def ls_invert(f: LaurentSeries, prec: int | None = None) -> LaurentSeries:
    """Inverse of a unit series.

    With ``prec=None`` the result is as precise as ``f`` allows (exact when
    ``f`` is a monomial times an element of the minus subgroup).  With an
    integer ``prec`` the result is truncated there, and
    :class:`TruncationTooCoarse` is raised when ``f`` does not determine that
    many coefficients.
    """
    cls = classify_gamma(f)
    if not cls.member:
        raise NotAUnitSeries(f"{f} is not invertible")
    ring = f.ring
    w = cls.w
    u = f.shift(-w)
    plus = u.positive_part()
    minus = u.negative_part()
    depth = minus.negative_depth
    nu = ring.nilpotency_index
    if plus.is_exact and plus.top == 0:
        inv_plus = LaurentSeries(ring, 0, [ring.inv(plus.coeffs[0])])
    else:
        if prec is None:
            target = u.prec if u.prec is not None else None
            if target is None:
                raise TruncationTooCoarse("inverse of a non-monomial series needs a precision")
        else:
            target = prec + w + (nu - 1) * depth
        if u.prec is not None:
            target = min(target, u.prec)
        if target < 0:
            if u.prec is not None and u.prec < 0:
                raise TruncationTooCoarse("series is not known far enough to invert")
            target = 0
        a = plus.dense(0, target)
        inv_plus = LaurentSeries(ring, 0, _power_series_inverse(ring, a, target + 1), target)
    if minus.coeffs:
        x = inv_plus * minus
        result = inv_plus * _nilpotent_geometric(x, nu)
    else:
        result = inv_plus
    result = result.shift(-w)
    if prec is not None and result.prec is not None:
        if result.prec < prec:
            raise TruncationTooCoarse(f"inverse known only through t^{result.prec}, t^{prec} requested")
        result = result.truncate(prec)
    return result


def _phi_power_valuation_slack(phi: LaurentSeries, n: int) -> int:
    nu = phi.ring.nilpotency_index
    return (nu - 1) * (abs(n) + phi.negative_depth)


def compose(g: LaurentSeries, phi: LaurentSeries, prec: int | None = None) -> LaurentSeries:
    """``g(phi(t))`` for a unit series ``phi`` of nonzero winding number.

    ``g`` may be truncated only when ``phi`` has positive winding number.
    Negative powers of ``phi`` go through :func:`ls_invert`; when that inverse
    has an infinite tail the working precision is raised until the requested
    window ``<= prec`` is reached.
    """
    if g.ring != phi.ring:
        raise RingMismatch("compose needs series over one ring")
    n = winding_number(phi)
    if n == 0:
        raise ZeroWindingComposition("cannot compose with a series of winding number 0")
    cap = None
    if g.prec is not None:
        if n < 0:
            raise TruncationTooCoarse("a truncated series can only be composed with positive winding")
        cap = (g.prec + 1) * n - _phi_power_valuation_slack(phi, n) - 1
        prec = cap if prec is None else min(prec, cap)

    def finish(result):
        if cap is not None:
            result = result.truncate(cap)
        if prec is not None and result.prec is not None:
            if result.prec < prec:
                raise TruncationTooCoarse(f"composition known only through t^{result.prec}")
            result = result.truncate(prec)
        return result

    if g.val >= 0 or not g.coeffs:
        return finish(_compose_at(g, phi, None))
    if phi.is_exact:
        try:
            inv = ls_invert(phi)
        except TruncationTooCoarse:
            inv = None
        if inv is not None and inv.is_exact:
            return finish(_compose_at(g, phi, inv))
    if prec is None:
        raise TruncationTooCoarse("composition has an infinite tail; give a precision")
    extra = 4 + _phi_power_valuation_slack(phi, n)
    last = None
    while True:
        result = _compose_at(g, phi, ls_invert(phi, prec + extra))
        if cap is not None:
            result = result.truncate(cap)
        if result.prec is None or result.prec >= prec:
            return finish(result)
        if last is not None and result.prec <= last:
            raise TruncationTooCoarse(f"composition known only through t^{result.prec}")
        last = result.prec
        extra = 2 * extra + abs(g.val) * abs(n)


def _compose_at(g, phi, inv):
    ring = g.ring
    total = LaurentSeries.zero(ring)
    power = LaurentSeries.one(ring)
    powers = {0: power}
    for i in range(1, g.top + 1):
        power = power * phi
        powers[i] = power
    power = powers[0]
    for i in range(1, -g.val + 1):
        power = power * inv
        powers[-i] = power
    for k, c in g.items():
        total = total + powers[k].scale(c)
    return total


def derivative(f: LaurentSeries) -> LaurentSeries:
    ring = f.ring
    out = [ring.mul(ring.from_int(f.val + i), c) for i, c in enumerate(f.coeffs)]
    return LaurentSeries(ring, f.val - 1, out, None if f.prec is None else f.prec - 1)


def residue(f: LaurentSeries) -> RingElement:
    return f[-1]


def _require_nilpotent(h: LaurentSeries):
    ring = h.ring
    if not ring.is_q_algebra:
        raise NotQAlgebra(f"{ring} is not a Q-algebra")
    for _, c in h.items():
        if ring.is_unit(c):
            raise CoefficientNotNilpotent(f"coefficient {ring.render(c)} is a unit")


def log_one_plus(h: LaurentSeries) -> LaurentSeries:
    """``log(1 + h)`` for ``h`` with every coefficient in ``m`` (a finite sum)."""
    _require_nilpotent(h)
    total = LaurentSeries.zero(h.ring)
    power = LaurentSeries.one(h.ring)
    for n in range(1, h.ring.nilpotency_index):
        power = power * h
        term = power.div_by_integer(n)
        total = total + term if n % 2 else total - term
    return total


def exp_series(x: LaurentSeries) -> LaurentSeries:
    """``exp(x)`` for ``x`` with every coefficient in ``m`` (a finite sum)."""
    _require_nilpotent(x)
    total = LaurentSeries.one(x.ring)
    power = total
    for n in range(1, x.ring.nilpotency_index):
        power = (power * x).div_by_integer(n)
        total = total + power
    return total


def exp_nilpotent(c: RingElement) -> RingElement:
    """``exp`` of a nilpotent element of a Q-algebra."""
    ring = c.ring
    return exp_series(LaurentSeries.constant(ring, c))[0]


# free-function aliases matching the documented operation names


def ls_add(f, g):
    return f + g


def ls_sub(f, g):
    return f - g


def ls_neg(f):
    return -f


def ls_mul(f, g):
    return f * g

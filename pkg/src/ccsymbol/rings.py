"""Concrete artinian local coefficient rings.

Every ring works on raw *payloads* (``int`` residues, exact rationals, or
tuples of those for truncated algebras) so that series arithmetic can run
without wrapping each coefficient.  :class:`RingElement` is the public,
user-facing wrapper.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable

from . import _kernels
from ._rational import QQ, RATIONAL_TYPES
from .errors import NoCanonicalHom, NotAUnit, NotQAlgebra, RingMismatch, UnsupportedRing

MAX_MODULUS = 2**31

INFINITY = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_decomposition(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` for prime ``p``, else ``None``."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


class Ring:
    """Base class of the supported coefficient rings.

    Subclasses implement the payload-level operations.  Rings are immutable
    value objects; two rings compare equal when they describe the same ring.
    """

    kind: str
    nilpotency_index: int
    is_q_algebra: bool
    zero: Any
    one: Any

    # payload arithmetic -------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        num = self.from_int(q.numerator)
        den = self.from_int(q.denominator)
        if not self.is_unit(den):
            raise NotAUnit(f"denominator {q.denominator} is not a unit in {self}")
        return self.mul(num, self.inv(den))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def level(self, a) -> int:
        """Largest ``j <= nilpotency_index`` with ``a`` in ``m**j``."""
        raise NotImplementedError

    def div_int(self, a, n: int):
        raise NotQAlgebra(f"{self} is not a Q-algebra")

    def pow(self, a, e: int):
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def nilpotency_order(self, a) -> int | float:
        if self.is_zero(a):
            return 1
        lvl = self.level(a)
        if lvl == 0:
            return INFINITY
        return -(-self.nilpotency_index // lvl)

    def render(self, a) -> str:
        raise NotImplementedError

    def to_json(self, a):
        raise NotImplementedError

    # series kernels -----------------------------------------------------
    def series_mul(self, a: list, b: list, n_out: int) -> list:
        """First ``n_out`` coefficients of the product of dense coefficient lists."""
        zero = self.zero
        add, mul = self.add, self.mul
        out = [zero] * n_out
        lb = len(b)
        for i, x in enumerate(a):
            if i >= n_out:
                break
            if x == zero:
                continue
            for j in range(min(lb, n_out - i)):
                y = b[j]
                if y != zero:
                    out[i + j] = add(out[i + j], mul(x, y))
        return out

    def pos_params(self, c: list, K: int) -> list:
        """``a_1..a_K`` with ``c == prod(1 - a_i t^i) mod t^(K+1)``; ``c[0]`` must be one."""
        zero = self.zero
        add, mul, neg = self.add, self.mul, self.neg
        work = [c[m] if m < len(c) else zero for m in range(K + 1)]
        params = []
        for i in range(1, K + 1):
            a = neg(work[i])
            params.append(a)
            if a == zero:
                continue
            for m in range(i, K + 1):
                src = work[m - i]
                if src != zero:
                    work[m] = add(work[m], mul(a, src))
        return params

    # homomorphisms ------------------------------------------------------
    def hom_to(self, target: "Ring") -> Callable:
        if target == self:
            return lambda a: a
        raise NoCanonicalHom(f"no canonical homomorphism {self} -> {target}")

    # element construction -----------------------------------------------
    def __call__(self, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatch(f"element of {value.ring} used in {self}")
            return value
        return RingElement(self, self.coerce(value))

    def coerce(self, value):
        """Payload for a Python ``int`` or ``Fraction``."""
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, RATIONAL_TYPES):
            return self.from_fraction(value)
        raise TypeError(f"cannot convert {value!r} into {self}")

    def element(self, payload) -> "RingElement":
        return RingElement(self, payload)

    @property
    def is_field(self) -> bool:
        return self.nilpotency_index == 1

    @property
    def has_nilpotent_generator(self) -> bool:
        return False

    @property
    def description(self) -> str:
        return str(self)

    def residue_field_size(self) -> int | float:
        raise NotImplementedError

    def sample_unit(self, rng):
        raise NotImplementedError

    def sample_element(self, rng):
        raise NotImplementedError

    def sample_nilpotent(self, rng):
        raise NotImplementedError


class ModularRing(Ring):
    """``Z/p^k``; the prime field ``F_p`` is the case ``k == 1``."""

    is_q_algebra = False

    def __init__(self, p: int, k: int = 1):
        if not isinstance(p, int) or not is_prime(p):
            raise UnsupportedRing(f"{p} is not prime")
        if not isinstance(k, int) or k < 1:
            raise UnsupportedRing(f"exponent {k} must be a positive integer")
        if p**k >= MAX_MODULUS:
            raise UnsupportedRing(f"modulus {p}^{k} exceeds the supported range")
        self.p = p
        self.k = k
        self.modulus = p**k
        self.nilpotency_index = k
        self.kind = "PrimeField" if k == 1 else "IntegersModPrimePower"
        self.zero = 0
        self.one = 1 % self.modulus

    def __eq__(self, other):
        return isinstance(other, ModularRing) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("mod", self.p, self.k))

    def __str__(self):
        return f"F{self.p}" if self.k == 1 else f"Z/{self.modulus}"

    def __repr__(self):
        return f"ModularRing({self.p}, {self.k})"

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def from_int(self, n):
        return int(n) % self.modulus

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise NotAUnit(f"{a} is not a unit in {self}")
        return pow(a, -1, self.modulus)

    def pow(self, a, e):
        if e < 0:
            a = self.inv(a)
            e = -e
        return pow(a, e, self.modulus)

    def level(self, a):
        if a == 0:
            return self.k
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def render(self, a):
        return str(a)

    def to_json(self, a):
        return a

    def series_mul(self, a, b, n_out):
        return _kernels.conv_mod(a, b, n_out, self.modulus)

    def pos_params(self, c, K):
        return _kernels.pos_params_mod(c, K, self.modulus)

    def hom_to(self, target):
        if target == self:
            return lambda a: a
        if isinstance(target, ModularRing) and target.p == self.p and target.k <= self.k:
            m = target.modulus
            return lambda a: a % m
        raise NoCanonicalHom(f"no canonical homomorphism {self} -> {target}")

    def residue_field_size(self):
        return self.p

    def sample_unit(self, rng):
        while True:
            a = rng.randrange(self.modulus)
            if a % self.p:
                return a

    def sample_element(self, rng):
        return rng.randrange(self.modulus)

    def sample_nilpotent(self, rng):
        return self.p * rng.randrange(self.modulus // self.p)


class RationalField(Ring):
    """The field ``Q`` with exact reduced fractions."""

    kind = "Rationals"
    is_q_algebra = True
    nilpotency_index = 1

    def __init__(self):
        self.zero = QQ(0)
        self.one = QQ(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __str__(self):
        return "Q"

    def __repr__(self):
        return "RationalField()"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return QQ(n)

    def from_fraction(self, q):
        return QQ(q.numerator, q.denominator)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not a unit in Q")
        return 1 / a

    def level(self, a):
        return 1 if a == 0 else 0

    def div_int(self, a, n):
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return a / n

    def render(self, a):
        return str(a)

    def to_json(self, a):
        return str(a)

    def residue_field_size(self):
        return INFINITY

    def sample_unit(self, rng):
        while True:
            num = rng.randint(-5, 5)
            if num:
                return QQ(num, rng.randint(1, 4))

    def sample_element(self, rng):
        return QQ(rng.randint(-5, 5), rng.randint(1, 4))

    def sample_nilpotent(self, rng):
        return self.zero


class TruncatedAlgebra(Ring):
    """``B[e]/e^nu`` over ``B = F_p`` or ``B = Q``; payloads are ``nu``-tuples, lowest degree first."""

    kind = "TruncatedAlgebra"

    def __init__(self, base: Ring, nu: int):
        if not isinstance(base, (RationalField, ModularRing)) or (
            isinstance(base, ModularRing) and base.k != 1
        ):
            raise UnsupportedRing(f"truncated algebras need a prime field or Q as base, got {base}")
        if not isinstance(nu, int) or nu < 2:
            raise UnsupportedRing(f"truncation order {nu} must be at least 2")
        self.base = base
        self.nu = nu
        self.nilpotency_index = nu
        self.is_q_algebra = base.is_q_algebra
        self._p = base.modulus if isinstance(base, ModularRing) else None
        self.zero = (base.zero,) * nu
        self.one = (base.one,) + (base.zero,) * (nu - 1)

    def __eq__(self, other):
        return isinstance(other, TruncatedAlgebra) and (self.base, self.nu) == (other.base, other.nu)

    def __hash__(self):
        return hash(("trunc", self.base, self.nu))

    def __str__(self):
        return f"{self.base}[e]/e^{self.nu}"

    def __repr__(self):
        return f"TruncatedAlgebra({self.base!r}, {self.nu})"

    @property
    def has_nilpotent_generator(self):
        return True

    @cached_property
    def eps(self):
        return (self.base.zero, self.base.one) + (self.base.zero,) * (self.nu - 2)

    def _reduce(self, coeffs):
        p = self._p
        if p is None:
            return tuple(coeffs)
        return tuple(c % p for c in coeffs)

    def add(self, a, b):
        return self._reduce([x + y for x, y in zip(a, b)])

    def sub(self, a, b):
        return self._reduce([x - y for x, y in zip(a, b)])

    def neg(self, a):
        return self._reduce([-x for x in a])

    def mul(self, a, b):
        nu = self.nu
        out = [self.base.zero] * nu
        for i, x in enumerate(a):
            if x:
                for j in range(nu - i):
                    y = b[j]
                    if y:
                        out[i + j] += x * y
        return self._reduce(out)

    def from_int(self, n):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.nu - 1)

    def from_base(self, c):
        return (c,) + (self.base.zero,) * (self.nu - 1)

    def is_unit(self, a):
        return a[0] != 0

    def inv(self, a):
        base = self.base
        if a[0] == 0:
            raise NotAUnit(f"{self.render(a)} is not a unit in {self}")
        c0 = base.inv(a[0])
        out = [c0]
        for k in range(1, self.nu):
            s = base.zero
            for j in range(1, k + 1):
                if a[j]:
                    s = base.add(s, base.mul(a[j], out[k - j]))
            out.append(base.neg(base.mul(c0, s)))
        return tuple(out)

    def level(self, a):
        for i, x in enumerate(a):
            if x:
                return i
        return self.nu

    def div_int(self, a, n):
        if not self.is_q_algebra:
            raise NotQAlgebra(f"{self} is not a Q-algebra")
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return tuple(x / n for x in a)

    def render(self, a):
        terms = []
        for i, x in enumerate(a):
            if not x:
                continue
            mono = "" if i == 0 else ("e" if i == 1 else f"e^{i}")
            if not mono:
                terms.append(str(x))
            elif x == 1:
                terms.append(mono)
            elif x == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{x}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out if len(terms) == 1 else f"({out})"

    def to_json(self, a):
        return [self.base.to_json(x) for x in a]

    def series_mul(self, a, b, n_out):
        if self._p is not None:
            return _kernels.conv_trunc_mod(a, b, n_out, self._p, self.nu)
        return super().series_mul(a, b, n_out)

    def pos_params(self, c, K):
        if self._p is not None:
            return _kernels.pos_params_trunc_mod(c, K, self._p, self.nu)
        return super().pos_params(c, K)

    def hom_to(self, target):
        if target == self:
            return lambda a: a
        if target == self.base:
            return lambda a: a[0]
        if isinstance(target, TruncatedAlgebra) and target.base == self.base and target.nu <= self.nu:
            n = target.nu
            return lambda a: a[:n]
        raise NoCanonicalHom(f"no canonical homomorphism {self} -> {target}")

    def residue_field_size(self):
        return self.base.residue_field_size()

    def sample_unit(self, rng):
        return (self.base.sample_unit(rng),) + tuple(
            self.base.sample_element(rng) for _ in range(self.nu - 1)
        )

    def sample_element(self, rng):
        return tuple(self.base.sample_element(rng) for _ in range(self.nu))

    def sample_nilpotent(self, rng):
        return (self.base.zero,) + tuple(self.base.sample_element(rng) for _ in range(self.nu - 1))


# ---------------------------------------------------------------------------
# constructors


def prime_field(p: int) -> ModularRing:
    return ModularRing(p, 1)


def integers_mod_prime_power(p: int, k: int) -> ModularRing:
    return ModularRing(p, k)


def rationals() -> RationalField:
    return RationalField()


def truncated_algebra(base: Ring, nu: int) -> Ring:
    """``base[e]/e^nu``; ``nu == 1`` returns the base field itself."""
    if nu == 1:
        if not isinstance(base, (RationalField, ModularRing)) or (
            isinstance(base, ModularRing) and base.k != 1
        ):
            raise UnsupportedRing(f"truncated algebras need a prime field or Q as base, got {base}")
        return base
    return TruncatedAlgebra(base, nu)


def make_ring(spec) -> Ring:
    """Build a ring from a descriptor.

    Accepts a :class:`Ring`, a ring-spec string such as ``"Z/9"`` or
    ``"Q[e]/e^3"``, or a tuple ``(kind, *params)`` with kind one of
    ``PrimeField``, ``IntegersModPrimePower``, ``Rationals``,
    ``TruncatedAlgebra``.
    """
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, str):
        from .parsing import parse_ring_spec

        return parse_ring_spec(spec)
    if isinstance(spec, tuple) and spec:
        kind, *params = spec
        if kind == "PrimeField" and len(params) == 1:
            return prime_field(params[0])
        if kind == "IntegersModPrimePower" and len(params) == 2:
            return integers_mod_prime_power(*params)
        if kind == "Rationals" and not params:
            return rationals()
        if kind == "TruncatedAlgebra" and len(params) == 2:
            return truncated_algebra(make_ring(params[0]), params[1])
    raise UnsupportedRing(f"unsupported ring descriptor {spec!r}")


# ---------------------------------------------------------------------------
# public element wrapper


class RingElement:
    """An element of a coefficient ring in canonical form."""

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.payload
        if isinstance(other, (int,) + RATIONAL_TYPES):
            return self.ring.coerce(other)
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.add(self.payload, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(self.payload, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(b, self.payload))

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul(self.payload, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.payload))

    def __pow__(self, e: int):
        return RingElement(self.ring, self.ring.pow(self.payload, e))

    def __truediv__(self, other):
        if isinstance(other, int) and self.ring.is_q_algebra:
            return self.div_by_integer(other)
        b = self._other(other)
        if b is None:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul(self.payload, self.ring.inv(b)))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.payload == other.payload
        if isinstance(other, (int,) + RATIONAL_TYPES):
            try:
                return self.payload == self.ring.coerce(other)
            except NotAUnit:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __bool__(self):
        return not self.ring.is_zero(self.payload)

    def __repr__(self):
        return f"RingElement({self.ring}, {self.ring.render(self.payload)})"

    def __str__(self):
        return self.ring.render(self.payload)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.payload)

    def in_maximal_ideal(self) -> bool:
        return not self.ring.is_unit(self.payload)

    def inverse(self) -> "RingElement":
        return RingElement(self.ring, self.ring.inv(self.payload))

    def nilpotency_order(self) -> int | float:
        return self.ring.nilpotency_order(self.payload)

    def div_by_integer(self, n: int) -> "RingElement":
        return RingElement(self.ring, self.ring.div_int(self.payload, n))

    def apply_hom(self, target: Ring) -> "RingElement":
        return RingElement(target, self.ring.hom_to(target)(self.payload))

    def to_json(self):
        return self.ring.to_json(self.payload)


# spec-level free functions ---------------------------------------------------


def arith(x: RingElement, y: RingElement | None, op: str) -> RingElement:
    """Dispatch ``add``/``sub``/``mul``/``neg`` on two elements of one ring."""
    if op == "neg":
        return -x
    if y is None or x.ring != getattr(y, "ring", None):
        raise RingMismatch("arith needs two elements of the same ring")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def is_unit(x: RingElement) -> bool:
    return x.is_unit()


def in_maximal_ideal(x: RingElement) -> bool:
    return x.in_maximal_ideal()


def invert_unit(x: RingElement) -> RingElement:
    return x.inverse()


def nilpotency_order(x: RingElement) -> int | float:
    return x.nilpotency_order()


def div_by_integer(x: RingElement, n: int) -> RingElement:
    return x.div_by_integer(n)


def apply_hom(x: RingElement, target: Ring) -> RingElement:
    return x.apply_hom(target)

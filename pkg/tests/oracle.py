"""Slow reference computations used to freeze expected values.

Nothing here shares code with the library's series layer: series are plain
``{exponent: payload}`` dicts and only the ring's scalar operations are used.
The positive factor of a winding-zero unit is found by solving a linear
system over the local ring instead of by iteration.
"""

from __future__ import annotations

from math import gcd

from ccsymbol.laurent import LaurentSeries


def as_dict(f: LaurentSeries) -> dict:
    return dict(f.items())


def _mul(ring, a: dict, b: dict, lo=None, hi=None) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            if (lo is not None and k < lo) or (hi is not None and k > hi):
                continue
            out[k] = ring.add(out.get(k, ring.zero), ring.mul(x, y))
    return {k: v for k, v in out.items() if v != ring.zero}


def _solve(ring, a: list[list], b: list) -> list:
    """Gaussian elimination with unit pivots (the matrix is invertible over a local ring)."""
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if ring.is_unit(m[r][col]))
        m[col], m[piv] = m[piv], m[col]
        inv = ring.inv(m[col][col])
        m[col] = [ring.mul(inv, x) for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != ring.zero:
                c = m[r][col]
                m[r] = [ring.sub(x, ring.mul(c, y)) for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def winding(f: dict, ring) -> int:
    return min(k for k, c in f.items() if ring.is_unit(c))


def factor(f: LaurentSeries, K: int):
    """``(w, a0, neg, pos)`` with ``pos`` the first ``K`` positive parameters."""
    ring = f.ring
    fd = as_dict(f)
    w = winding(fd, ring)
    fd = {k - w: c for k, c in fd.items()}
    depth = max(0, -min(fd))
    nu = ring.nilpotency_index
    M = K + nu * (depth + 1) + 4
    # u = G^-1 solves: (u * f) has coefficient 1 at t^0 and 0 at t^1..t^M
    a = [[fd.get(k - i, ring.zero) for i in range(M + 1)] for k in range(M + 1)]
    b = [ring.one] + [ring.zero] * M
    u = {i: x for i, x in enumerate(_solve(ring, a, b)) if x != ring.zero}
    h = {k: c for k, c in _mul(ring, u, fd, hi=0).items()}
    g = _mul(ring, fd, _inverse_minus(ring, h), lo=0, hi=K)
    a0 = g.get(0, ring.zero)
    g = {k: ring.mul(ring.inv(a0), c) for k, c in g.items()}
    return w, a0, _peel(ring, {-k: c for k, c in h.items()}, None), _peel(ring, g, K)


def _inverse_minus(ring, h: dict) -> dict:
    """Inverse of ``1 + n`` with ``n`` nilpotent, as a finite sum."""
    n = {k: c for k, c in h.items() if k != 0}
    out, term = {0: ring.one}, {0: ring.one}
    while True:
        term = _mul(ring, term, {k: ring.neg(c) for k, c in n.items()})
        if not term:
            return out
        for k, c in term.items():
            out[k] = ring.add(out.get(k, ring.zero), c)


def _peel(ring, c: dict, K: int | None) -> dict:
    """Parameters ``a_i`` with ``c = prod (1 - a_i x^i)`` (through ``x^K`` if given)."""
    params = {}
    c = dict(c)
    i = 1
    while True:
        if K is not None and i > K:
            return params
        if K is None and all(v == ring.zero for k, v in c.items() if k >= i):
            return params
        a = ring.neg(c.get(i, ring.zero))
        if a != ring.zero:
            params[i] = a
            # divide by (1 - a x^i) = multiply by sum (a x^i)^k
            hi = K if K is not None else None
            geo, power, k = {0: ring.one}, ring.one, 1
            while True:
                power = ring.mul(power, a)
                if power == ring.zero or (hi is not None and i * k > hi):
                    break
                geo[i * k] = power
                k += 1
            c = _mul(ring, c, geo, hi=hi)
        i += 1


def double_product(f: LaurentSeries, g: LaurentSeries, K: int = 24):
    """``{f, g}`` straight from the defining formula, with generous parameter bounds."""
    ring = f.ring
    wf, af, nf, pf = factor(f, K)
    wg, ag, ng, pg = factor(g, K)

    def cross(pos, neg):
        total = ring.one
        for i, a in pos.items():
            for j, b in neg.items():
                d = gcd(i, j)
                term = ring.sub(ring.one, ring.mul(ring.pow(a, j // d), ring.pow(b, i // d)))
                total = ring.mul(total, ring.pow(term, d))
        return total

    num = ring.mul(ring.pow(af, wg), cross(pf, ng))
    den = ring.mul(ring.pow(ag, wf), cross(pg, nf))
    return ring.mul(num, ring.inv(den)), wf, wg


def cc_value(f: LaurentSeries, g: LaurentSeries, K: int = 24):
    value, wf, wg = double_product(f, g, K)
    return f.ring.neg(value) if (wf * wg) % 2 else value


def norm_monomial_phi(f: LaurentSeries, n: int) -> dict:
    """``N_{t^n}(f)`` as ``{exponent: payload}``, via the residue-class matrix."""
    ring = f.ring
    fd = as_dict(f)
    # f = sum_r t^r F_r(t^n); multiplication by f sends t^c to sum_r t^(r+c) F_r
    parts = [dict() for _ in range(n)]
    for k, c in fd.items():
        r = k % n
        parts[r][(k - r) // n] = c
    matrix = [[dict() for _ in range(n)] for _ in range(n)]
    for col in range(n):
        for r in range(n):
            row, carry = (r + col) % n, (r + col) // n
            matrix[row][col] = {q + carry: c for q, c in parts[r].items()}
    return _det(ring, matrix)


def _det(ring, m: list[list[dict]]) -> dict:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = {}
    for col in range(n):
        minor = [row[:col] + row[col + 1:] for row in m[1:]]
        term = _mul(ring, m[0][col], _det(ring, minor))
        if col % 2:
            term = {k: ring.neg(c) for k, c in term.items()}
        for k, c in term.items():
            total[k] = ring.add(total.get(k, ring.zero), c)
    return {k: c for k, c in total.items() if c != ring.zero}

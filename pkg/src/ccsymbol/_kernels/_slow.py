"""Pure-Python reference versions of the modular kernels."""

from __future__ import annotations


def conv_mod(a: list[int], b: list[int], n_out: int, modulus: int) -> list[int]:
    """First ``n_out`` coefficients of the product of two dense polynomials mod ``modulus``."""
    out = [0] * n_out
    lb = len(b)
    for i, x in enumerate(a):
        if i >= n_out:
            break
        if not x:
            continue
        top = min(lb, n_out - i)
        for j in range(top):
            y = b[j]
            if y:
                out[i + j] += x * y
    return [v % modulus for v in out]


def conv_trunc_mod(a: list[tuple], b: list[tuple], n_out: int, p: int, nu: int) -> list[tuple]:
    """Convolution of series whose coefficients lie in F_p[e]/e^nu (tuples, lowest degree first)."""
    acc = [[0] * nu for _ in range(n_out)]
    lb = len(b)
    for i, x in enumerate(a):
        if i >= n_out:
            break
        xs = [(k, v) for k, v in enumerate(x) if v]
        if not xs:
            continue
        top = min(lb, n_out - i)
        for j in range(top):
            y = b[j]
            row = acc[i + j]
            for k, u in xs:
                for l in range(nu - k):
                    w = y[l]
                    if w:
                        row[k + l] += u * w
    return [tuple(v % p for v in row) for row in acc]


def pos_params_mod(c: list[int], K: int, modulus: int) -> list[int]:
    """Parameters a_1..a_K with c = prod(1 - a_i t^i) mod t^(K+1); requires c[0] == 1."""
    work = [c[m] % modulus if m < len(c) else 0 for m in range(K + 1)]
    params = []
    for i in range(1, K + 1):
        a = (-work[i]) % modulus
        params.append(a)
        if a:
            for m in range(i, K + 1):
                work[m] = (work[m] + a * work[m - i]) % modulus
    return params


def pos_params_trunc_mod(c: list[tuple], K: int, p: int, nu: int) -> list[tuple]:
    """Same as :func:`pos_params_mod` for coefficients in F_p[e]/e^nu."""
    zero = (0,) * nu
    work = [list(c[m]) if m < len(c) else list(zero) for m in range(K + 1)]
    params = []
    for i in range(1, K + 1):
        a = [(-v) % p for v in work[i]]
        params.append(tuple(a))
        nz = [(k, v) for k, v in enumerate(a) if v]
        if not nz:
            continue
        for m in range(i, K + 1):
            src = work[m - i]
            dst = work[m]
            for k, u in nz:
                for l in range(nu - k):
                    if src[l]:
                        dst[k + l] = (dst[k + l] + u * src[l]) % p
    return params

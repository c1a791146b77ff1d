"""Pure-Python kernels for dense polynomial arithmetic over F_p.

Polynomials are plain lists of ints, little-endian, normalized (no trailing
zeros, zero polynomial = []), with every coefficient already reduced into
[0, p).  The compiled backend in ``_modp_cy`` implements the exact same
surface; :mod:`sexticlab.backend` picks one at import time.
"""

from __future__ import annotations


def nnorm(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def nadd(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return nnorm(out)


def nsub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        av = a[i] if i < len(a) else 0
        bv = b[i] if i < len(b) else 0
        out[i] = (av - bv) % p
    return nnorm(out)


def nmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return nnorm(out)


def nscale(a: list[int], k: int, p: int) -> list[int]:
    k %= p
    if k == 0:
        return []
    return nnorm([c * k % p for c in a])


def nmonic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    lc = a[-1]
    if lc == 1:
        return list(a)
    inv = pow(lc, p - 2, p)
    return [c * inv % p for c in a]


def ndivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    rem = list(a)
    db = len(b) - 1
    inv = 1 if b[-1] == 1 else pow(b[-1], p - 2, p)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        q = rem[k + db] * inv % p
        quot[k] = q
        if q:
            for i in range(db + 1):
                rem[k + i] = (rem[k + i] - q * b[i]) % p
    return nnorm(quot), nnorm(rem[:db])


def nrem(a: list[int], b: list[int], p: int) -> list[int]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return list(a)
    rem = list(a)
    db = len(b) - 1
    inv = 1 if b[-1] == 1 else pow(b[-1], p - 2, p)
    for k in range(len(a) - db - 1, -1, -1):
        q = rem[k + db] * inv % p
        if q:
            for i in range(db + 1):
                rem[k + i] = (rem[k + i] - q * b[i]) % p
    return nnorm(rem[:db])


def ngcd(a: list[int], b: list[int], p: int) -> list[int]:
    u, v = list(a), list(b)
    while v:
        u, v = v, nrem(u, v, p)
    return nmonic(u, p)


def nmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    return nrem(nmul(a, b, p), m, p)


def npowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    """a**e mod m over F_p; e is an arbitrary nonnegative Python int."""
    if e < 0:
        raise ValueError("negative exponent")
    result = [1 % p]
    base = nrem(a, m, p)
    while e:
        if e & 1:
            result = nrem(nmul(result, base, p), m, p)
        e >>= 1
        if e:
            base = nrem(nmul(base, base, p), m, p)
    return result


def nderiv(a: list[int], p: int) -> list[int]:
    return nnorm([i * c % p for i, c in enumerate(a)][1:])

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense polynomial arithmetic over F_p.

Same surface and same results as ``sexticlab._modp_py``; only valid for
p < 2**31 so that coefficient products fit in 64-bit intermediates (the
backend dispatcher enforces this).
"""

from libc.stdlib cimport free, malloc


cdef inline long long _invmod(long long a, long long p):
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef long long* _alloc(Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*> malloc((n if n > 0 else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef object _to_list(long long* buf, Py_ssize_t n):
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    cdef list out = []
    cdef Py_ssize_t i
    for i in range(n):
        out.append(buf[i])
    return out


def nnorm(a):
    while a and a[len(a) - 1] == 0:
        a.pop()
    return a


def nadd(a, b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), n = na if na > nb else nb
    cdef Py_ssize_t i
    cdef long long av, bv
    cdef long long* buf = _alloc(n)
    for i in range(n):
        av = a[i] if i < na else 0
        bv = b[i] if i < nb else 0
        buf[i] = (av + bv) % p
    out = _to_list(buf, n)
    free(buf)
    return out


def nsub(a, b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b), n = na if na > nb else nb
    cdef Py_ssize_t i
    cdef long long av, bv, v
    cdef long long* buf = _alloc(n)
    for i in range(n):
        av = a[i] if i < na else 0
        bv = b[i] if i < nb else 0
        v = (av - bv) % p
        if v < 0:
            v += p
        buf[i] = v
    out = _to_list(buf, n)
    free(buf)
    return out


def nmul(a, b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return []
    cdef Py_ssize_t n = na + nb - 1
    cdef Py_ssize_t i, j
    cdef long long ca
    cdef long long* av = _alloc(na)
    cdef long long* bv = _alloc(nb)
    cdef long long* buf = _alloc(n)
    for i in range(na):
        av[i] = a[i]
    for j in range(nb):
        bv[j] = b[j]
    for i in range(n):
        buf[i] = 0
    for i in range(na):
        ca = av[i]
        if ca:
            for j in range(nb):
                buf[i + j] = (buf[i + j] + ca * bv[j]) % p
    out = _to_list(buf, n)
    free(av)
    free(bv)
    free(buf)
    return out


def nscale(a, k, long long p):
    cdef long long kk = k % p
    if kk < 0:
        kk += p
    if kk == 0:
        return []
    cdef Py_ssize_t n = len(a), i
    cdef long long* buf = _alloc(n)
    for i in range(n):
        buf[i] = (<long long> a[i]) * kk % p
    out = _to_list(buf, n)
    free(buf)
    return out


def nmonic(a, long long p):
    cdef Py_ssize_t n = len(a), i
    if n == 0:
        return []
    cdef long long lc = a[n - 1]
    if lc == 1:
        return list(a)
    cdef long long inv = _invmod(lc, p)
    cdef long long* buf = _alloc(n)
    for i in range(n):
        buf[i] = (<long long> a[i]) * inv % p
    out = _to_list(buf, n)
    free(buf)
    return out


cdef Py_ssize_t _rem_inplace(long long* rem, Py_ssize_t nr,
                             long long* b, Py_ssize_t nb,
                             long long p, long long* quot) nogil:
    """Reduce rem (length nr) modulo b in place; fill quot when non-NULL.

    Returns the normalized remainder length (< nb)."""
    cdef Py_ssize_t db = nb - 1
    cdef long long inv = 1
    cdef long long lc = b[nb - 1]
    cdef long long q, v
    cdef Py_ssize_t k, i
    cdef long long base, e
    if lc != 1:
        base = lc % p
        e = p - 2
        while e:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
    for k in range(nr - db - 1, -1, -1):
        q = rem[k + db] * inv % p
        if quot != NULL:
            quot[k] = q
        if q:
            for i in range(db + 1):
                v = (rem[k + i] - q * b[i]) % p
                if v < 0:
                    v += p
                rem[k + i] = v
    cdef Py_ssize_t m = db
    while m > 0 and rem[m - 1] == 0:
        m -= 1
    return m


def ndivmod(a, b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return [], list(a)
    cdef Py_ssize_t i
    cdef long long* rem = _alloc(na)
    cdef long long* bv = _alloc(nb)
    cdef long long* quot = _alloc(na - nb + 1)
    for i in range(na):
        rem[i] = a[i]
    for i in range(nb):
        bv[i] = b[i]
    cdef Py_ssize_t m = _rem_inplace(rem, na, bv, nb, p, quot)
    q_out = _to_list(quot, na - nb + 1)
    r_out = _to_list(rem, m)
    free(rem)
    free(bv)
    free(quot)
    return q_out, r_out


def nrem(a, b, long long p):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if nb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        return list(a)
    cdef Py_ssize_t i
    cdef long long* rem = _alloc(na)
    cdef long long* bv = _alloc(nb)
    for i in range(na):
        rem[i] = a[i]
    for i in range(nb):
        bv[i] = b[i]
    cdef Py_ssize_t m = _rem_inplace(rem, na, bv, nb, p, NULL)
    out = _to_list(rem, m)
    free(rem)
    free(bv)
    return out


def ngcd(a, b, long long p):
    u = list(a)
    v = list(b)
    while v:
        u, v = v, nrem(u, v, p)
    return nmonic(u, p)


def nmulmod(a, b, m, long long p):
    return nrem(nmul(a, b, p), m, p)


def npowmod(a, e, m, long long p):
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


def nderiv(a, long long p):
    cdef Py_ssize_t n = len(a), i
    if n <= 1:
        return []
    cdef long long* buf = _alloc(n - 1)
    for i in range(1, n):
        buf[i - 1] = (<long long> i) * (<long long> a[i]) % p
    out = _to_list(buf, n - 1)
    free(buf)
    return out

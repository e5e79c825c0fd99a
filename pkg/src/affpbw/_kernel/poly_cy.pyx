# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of poly_py: dense integer polynomial kernels.

Coefficients stay python ints (arbitrary precision is mandatory); the win over
the pure kernel is loop and list-access overhead in the O(n*m) inner loops.
"""

from math import gcd


cpdef list pnorm(list a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    del a[n:]
    return a


cpdef list padd(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list out = list(a)
    for i in range(len(b)):
        out[i] = out[i] + b[i]
    return pnorm(out)


cpdef list psub(list a, list b):
    cdef Py_ssize_t i
    cdef list out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] = out[i] - b[i]
    return pnorm(out)


cpdef list pneg(list a):
    return [-c for c in a]


cpdef list pmul(list a, list b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object ai, bj
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return pnorm(out)


cpdef list pmul_int(list a, object c):
    if c == 0:
        return []
    return [ai * c for ai in a]


cpdef list pshift(list a, Py_ssize_t k):
    if not a:
        return []
    return [0] * k + list(a)


cpdef object pcontent(list a):
    cdef object g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


cpdef list pprim(list a):
    if not a:
        return []
    cdef object g = pcontent(a)
    if a[len(a) - 1] < 0:
        g = -g
    if g == 1:
        return list(a)
    return [c // g for c in a]


cpdef list pdiv_exact(list a, list b):
    cdef Py_ssize_t i, j, db
    cdef object c, q, r, lb
    if not a:
        return []
    if len(b) == 1:
        d = b[0]
        out = []
        for c in a:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(q)
        return pnorm(out)
    cdef list rem = list(a)
    db = len(b) - 1
    lb = b[db]
    cdef list outq = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + db]
        if c:
            q, r = divmod(c, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            outq[i] = q
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - q * b[j]
    for i in range(len(rem)):
        if rem[i]:
            raise ArithmeticError("inexact polynomial division")
    return pnorm(outq)


cpdef list pprem(list a, list b):
    cdef Py_ssize_t i, j, db
    cdef object c, lb
    cdef list rem = list(a)
    db = len(b) - 1
    lb = b[db]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + db]
        for j in range(i + db):
            rem[j] = rem[j] * lb
        for j in range(db):
            rem[i + j] = rem[i + j] - c * b[j]
        rem[i + db] = 0
    return pnorm(rem)


cpdef list pgcd(list a, list b):
    if not a:
        return pprim(b)
    if not b:
        return pprim(a)
    if len(a) == 1 or len(b) == 1:
        return [1]
    cdef list r0 = pprim(a)
    cdef list r1 = pprim(b)
    cdef list r2
    if len(r0) < len(r1):
        r0, r1 = r1, r0
    while r1:
        if len(r1) == 1:
            return [1]
        r2 = pprim(pprem(r0, r1))
        r0 = r1
        r1 = r2
    return r0

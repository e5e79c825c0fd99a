"""Dense integer-coefficient polynomial arithmetic (pure-python kernel).

Polynomials are lists of python ints, lowest degree first, no trailing zeros;
the zero polynomial is the empty list.  These routines are the hot inner loops
of every exact computation in the engine; poly_cy.pyx is the compiled twin.
"""

from math import gcd


def pnorm(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    del a[n:]
    return a


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] += b[i]
    return pnorm(out)


def psub(a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    for i in range(len(b)):
        out[i] -= b[i]
    return pnorm(out)


def pneg(a):
    return [-c for c in a]


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return pnorm(out)


def pmul_int(a, c):
    if c == 0:
        return []
    return [ai * c for ai in a]


def pshift(a, k):
    # multiply by u^k, k >= 0
    if not a:
        return []
    return [0] * k + list(a)


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def pprim(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return list(a)
    return [c // g for c in a]


def pdiv_exact(a, b):
    """Exact division a // b when b divides a (b nonzero)."""
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
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + db]
        if c:
            q, r = divmod(c, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[i] = q
            for j in range(db + 1):
                rem[i + j] -= q * b[j]
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return pnorm(out)


def pprem(a, b):
    """Pseudo-remainder of a by b (b nonzero, deg a >= deg b)."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + db]
        for j in range(i + db):
            rem[j] *= lb
        for j in range(db):
            rem[i + j] -= c * b[j]
        rem[i + db] = 0
    return pnorm(rem)


def pgcd(a, b):
    """Primitive gcd in Z[u], positive leading coefficient; pgcd(0,0) = 0."""
    if not a:
        return pprim(b)
    if not b:
        return pprim(a)
    if len(a) == 1 or len(b) == 1:
        return [1]
    r0, r1 = pprim(a), pprim(b)
    if len(r0) < len(r1):
        r0, r1 = r1, r0
    while r1:
        if len(r1) == 1:
            return [1]
        r0, r1 = r1, pprim(pprem(r0, r1))
    return r0

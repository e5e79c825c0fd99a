"""Exact coefficient arithmetic.

Two scalar types:

* ``QLaurent``: Z[q_s, q_s^-1], a dense coefficient list plus an offset.
* ``QRat``: the fraction field, stored as num/den in the variable u = q_s^-1
  with integer polynomials, poly-gcd 1, coprime contents and positive leading
  denominator coefficient.  Regularity at q_s = infinity is the constant-term
  test den(0) != 0, and the value there is num(0)/den(0).

Both are immutable by convention and safe to share across threads.
"""

from fractions import Fraction
from math import gcd

from ._kernel import padd, pdiv_exact, pgcd, pmul, pmul_int, pnorm, pshift
from .errors import NotRegular


class QLaurent:
    __slots__ = ("off", "coeffs", "_hash")

    def __init__(self, off=0, coeffs=()):
        coeffs = list(coeffs)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.off = 0
            self.coeffs = ()
        else:
            self.off = off + lo
            self.coeffs = tuple(coeffs[lo:hi])
        self._hash = None

    @staticmethod
    def from_int(n):
        return QLaurent(0, (n,))

    @staticmethod
    def monomial(k, c=1):
        return QLaurent(k, (c,))

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QLaurent.from_int(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.off == other.off and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.off, self.coeffs))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = QLaurent.from_int(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        off = min(self.off, other.off)
        a = [0] * (max(self.off + len(self.coeffs), other.off + len(other.coeffs)) - off)
        for i, c in enumerate(self.coeffs):
            a[self.off - off + i] += c
        for i, c in enumerate(other.coeffs):
            a[other.off - off + i] += c
        return QLaurent(off, a)

    def __neg__(self):
        return QLaurent(self.off, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = QLaurent.from_int(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QLaurent(self.off, [c * other for c in self.coeffs])
        return QLaurent(self.off + other.off, pmul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = QLaurent.from_int(1)
        for _ in range(n):
            out = out * self
        return out

    def bar(self):
        """Substitute q_s -> q_s^-1."""
        return QLaurent(-(self.off + len(self.coeffs) - 1), list(reversed(self.coeffs)))

    def terms(self):
        return [(self.off + i, c) for i, c in enumerate(self.coeffs) if c]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in reversed(self.terms()):
            if k == 0:
                parts.append(f"{c:+d}")
            elif k == 1:
                parts.append(f"{c:+d}*qs")
            else:
                parts.append(f"{c:+d}*qs^{k}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    __repr__ = __str__


def _monomial_power(den):
    # den == u^k  ->  k, else None
    if den[-1] != 1:
        return None
    for c in den[:-1]:
        if c:
            return None
    return len(den) - 1


class QRat:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _canon=False):
        if _canon:
            self.num, self.den = num, den
        else:
            self.num, self.den = _canonicalize(num, den)
        self._hash = None

    @staticmethod
    def from_int(n):
        return QRat([n] if n else [], [1], _canon=True)

    @staticmethod
    def from_fraction(f):
        f = Fraction(f)
        return QRat([f.numerator] if f.numerator else [], [f.denominator], _canon=True)

    @staticmethod
    def qs_power(k):
        # q_s^k = u^-k
        if k >= 0:
            return QRat([1], pshift([1], k), _canon=True)
        return QRat(pshift([1], -k), [1], _canon=True)

    @staticmethod
    def from_laurent(x):
        num, k = [0] * max(0, -(x.off)), max(0, -x.off)
        # value = sum c_i u^{-(off+i)}; multiply through by u^K, K = max(off+deg, 0)
        top = x.off + len(x.coeffs) - 1 if x.coeffs else 0
        kk = max(top, 0)
        num = [0] * (kk - x.off + 1) if x.coeffs else []
        for i, c in enumerate(x.coeffs):
            num[kk - (x.off + i)] = c
        return QRat(pnorm(num), pshift([1], kk))

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.num), tuple(self.den)))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return QRat(padd(self.num, other.num), self.den)
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return QRat(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QRat([-c for c in self.num], self.den, _canon=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return QRat.from_int(0)
        ka, kb = _monomial_power(self.den), _monomial_power(other.den)
        if ka is not None and kb is not None:
            num = pmul(self.num, other.num)
            k = ka + kb
            v = 0
            while v < len(num) and num[v] == 0:
                v += 1
            v = min(v, k)
            if v:
                num = num[v:]
                k -= v
            return QRat(num, pshift([1], k), _canon=True)
        return QRat(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("scalar inverse of zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = [-c for c in num], [-c for c in den]
        return QRat(num, den, _canon=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = QRat.from_int(1)
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def bar(self):
        """Substitute q_s -> q_s^-1 (i.e. u -> 1/u)."""
        dn = len(self.num) - 1 if self.num else 0
        dd = len(self.den) - 1
        num = pnorm(list(reversed(self.num)))
        den = pnorm(list(reversed(self.den)))
        if dd > dn:
            num = pshift(num, dd - dn)
        elif dn > dd:
            den = pshift(den, dn - dd)
        return QRat(num, den)

    def is_regular_at_infinity(self):
        return self.den[0] != 0

    def residue_at_infinity(self):
        """Value at q_s = infinity (u = 0)."""
        if self.den[0] == 0:
            raise NotRegular(f"pole at infinity: {self}")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def is_laurent(self):
        """Membership in Z[q_s, q_s^-1]."""
        return _monomial_power(self.den) is not None

    def to_laurent(self):
        k = _monomial_power(self.den)
        if k is None:
            raise ValueError(f"not a Laurent polynomial: {self}")
        # num/u^k = sum num[i] q_s^{k-i}
        return QLaurent(k - len(self.num) + 1, list(reversed(self.num)))

    def is_int_poly_in_qsinv(self):
        """Membership in Z[q_s^-1]."""
        return self.den == [1]

    def in_qsinv_times_A(self):
        """Membership in q_s^-1 * A (regular at infinity with value 0)."""
        return self.den[0] != 0 and (not self.num or self.num[0] == 0)

    def __str__(self):
        if not self.num:
            return "0"
        if self.is_laurent():
            return str(self.to_laurent())
        num = "+".join(f"{c}*u^{i}" for i, c in enumerate(self.num) if c).replace("+-", "-")
        den = "+".join(f"{c}*u^{i}" for i, c in enumerate(self.den) if c).replace("+-", "-")
        return f"({num})/({den})"

    __repr__ = __str__


def _canonicalize(num, den):
    num = pnorm(list(num))
    den = pnorm(list(den))
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return [], [1]
    g = pgcd(num, den)
    if len(g) > 1:
        num = pdiv_exact(num, g)
        den = pdiv_exact(den, g)
    cn = 0
    for c in num:
        cn = gcd(cn, c)
        if cn == 1:
            break
    cd = 0
    for c in den:
        cd = gcd(cd, c)
        if cd == 1:
            break
    cg = gcd(cn, cd)
    if den[-1] < 0:
        cg = -cg
    if cg != 1:
        num = [c // cg for c in num]
        den = [c // cg for c in den]
    return num, den


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, int):
        return QRat.from_int(x)
    if isinstance(x, QLaurent):
        return QRat.from_laurent(x)
    if isinstance(x, Fraction):
        return QRat.from_fraction(x)
    return None


ZERO = QRat.from_int(0)
ONE = QRat.from_int(1)


def quantum_int(n, qs_exp):
    """[n] at q_i = q_s^qs_exp: q_i^{n-1} + q_i^{n-3} + ... + q_i^{1-n}."""
    if n < 0:
        raise ValueError("quantum integer of negative n")
    out = QLaurent.from_int(0)
    for j in range(n):
        out = out + QLaurent.monomial(qs_exp * (n - 1 - 2 * j))
    return out


def quantum_factorial(n, qs_exp):
    out = QLaurent.from_int(1)
    for k in range(2, n + 1):
        out = out * quantum_int(k, qs_exp)
    return out


def quantum_binomial(m, n, qs_exp):
    """Gaussian binomial [m choose n] at q_i = q_s^qs_exp (0 <= n <= m)."""
    num = QLaurent.from_int(1)
    for k in range(m - n + 1, m + 1):
        num = num * quantum_int(k, qs_exp)
    den = QRat.from_laurent(quantum_factorial(n, qs_exp))
    res = QRat.from_laurent(num) / den
    return res.to_laurent()


def bar_scalar(x):
    """Bar involution on either scalar type."""
    return x.bar()


def residue_at_infinity(x):
    if isinstance(x, QLaurent):
        x = QRat.from_laurent(x)
    return x.residue_at_infinity()


# ---------------------------------------------------------------------------
# textual scalar syntax: integers, q^k, qs^k, + - * / and parentheses

class _Tok:
    def __init__(self, kind, val=None):
        self.kind = kind
        self.val = val


def _lex(s):
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(_Tok("int", int(s[i:j])))
            i = j
        elif s.startswith("qs", i):
            toks.append(_Tok("qs"))
            i += 2
        elif ch == "q":
            toks.append(_Tok("q"))
            i += 1
        elif ch in "+-*/^()":
            toks.append(_Tok(ch))
            i += 1
        else:
            raise ValueError(f"bad character {ch!r} in scalar {s!r}")
    toks.append(_Tok("end"))
    return toks


def parse_scalar(s, d=1):
    """Parse the CLI scalar syntax; q means q_s^d."""
    toks = _lex(s)
    pos = [0]

    def peek():
        return toks[pos[0]]

    def take(kind=None):
        t = toks[pos[0]]
        if kind and t.kind != kind:
            raise ValueError(f"expected {kind} in scalar {s!r}")
        pos[0] += 1
        return t

    def atom():
        t = peek()
        if t.kind == "int":
            take()
            return QRat.from_int(t.val)
        if t.kind == "q":
            take()
            return QRat.qs_power(d * _expt())
        if t.kind == "qs":
            take()
            return QRat.qs_power(_expt())
        if t.kind == "(":
            take()
            v = expr()
            take(")")
            return v
        raise ValueError(f"unexpected token in scalar {s!r}")

    def _expt():
        if peek().kind != "^":
            return 1
        take("^")
        sign = 1
        if peek().kind == "-":
            take()
            sign = -1
        return sign * take("int").val

    def factor():
        if peek().kind == "-":
            take()
            return -factor()
        return atom()

    def term():
        v = factor()
        while peek().kind in ("*", "/"):
            op = take().kind
            rhs = factor()
            v = v * rhs if op == "*" else v / rhs
        return v

    def expr():
        v = term()
        while peek().kind in ("+", "-"):
            op = take().kind
            rhs = term()
            v = v + rhs if op == "+" else v - rhs
        return v

    out = expr()
    take("end")
    return out

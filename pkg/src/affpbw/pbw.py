"""Root vectors, Lusztig data and PBW monomials for arbitrary convex orders.

Real root vectors are braid-chain images of Chevalley generators along the
order's extremal chain; imaginary vectors are built from the commuting
bracket vectors, with the one-row Schur normalization pinned by projecting
E_{d_i delta - r_i alpha_i}^{(a)} E_i^{(r_i a)} onto the purely imaginary
block of the bracket-monomial basis for a standard-coarse-type order.
"""

import json
import re

from . import cartan
from .algebra import engine_for, word_weight
from .errors import RootBeyondCutoff
from .linear import ExpansionSolver
from .orders import coarse_order
from .partitions import (jacobi_trudi_terms, multipartition_weight,
                         multipartitions, partitions)
from .scalars import ONE, QRat, quantum_factorial


class LusztigDatum:
    """Exponents on positive real roots plus a multipartition at delta."""

    __slots__ = ("real", "imag", "_hash")

    def __init__(self, real, imag):
        self.real = tuple(sorted((tuple(r), int(n)) for r, n in real if n))
        self.imag = tuple(tuple(lam) for lam in imag)
        self._hash = hash((self.real, self.imag))

    @staticmethod
    def zero(typ):
        return LusztigDatum((), ((),) * typ.n)

    @staticmethod
    def purely_imaginary(typ, mp):
        return LusztigDatum((), mp)

    def count(self, beta):
        for r, n in self.real:
            if r == tuple(beta):
                return n
        return 0

    def is_purely_imaginary(self):
        return not self.real

    def with_count(self, beta, n):
        beta = tuple(beta)
        items = [(r, c) for r, c in self.real if r != beta]
        if n:
            items.append((beta, n))
        return LusztigDatum(items, self.imag)

    def with_imag(self, mp):
        return LusztigDatum(self.real, mp)

    def weight(self, typ):
        wt = [0] * len(typ.nodes)
        for r, n in self.real:
            for k, c in enumerate(r):
                wt[k] += n * c
        m = multipartition_weight(typ, self.imag)
        for k, c in enumerate(typ.delta):
            wt[k] += m * c
        return tuple(wt)

    def __eq__(self, other):
        return (isinstance(other, LusztigDatum)
                and self.real == other.real and self.imag == other.imag)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.real, self.imag) < (other.real, other.imag)

    def __repr__(self):
        parts = [f"{list(r)}:{n}" for r, n in self.real]
        body = ", ".join(parts) if parts else ""
        if any(self.imag):
            body += ("; " if body else "") + "delta=" + json.dumps(
                [list(l) for l in self.imag])
        return "{" + body + "}"


def parse_datum(typ, s):
    s = s.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"bad datum literal {s!r}")
    body = s[1:-1]
    imag = ((),) * typ.n
    if "delta=" in body:
        body, dpart = body.split("delta=")
        body = body.rstrip().rstrip(";").rstrip(",")
        imag = tuple(tuple(int(x) for x in lam)
                     for lam in json.loads(dpart.strip()))
        if len(imag) != typ.n:
            raise ValueError("multipartition must have one entry per classical node")
    real = []
    for m in re.finditer(r"(\[[^\]]*\])\s*:\s*(\d+)", body):
        coords = tuple(json.loads(m.group(1)))
        real.append((cartan.root_from_coords(typ, coords), int(m.group(2))))
    return LusztigDatum(real, imag)


def lusztig_weight(typ, datum):
    return datum.weight(typ)


def lusztig_data_of_weight(typ, weight, deg=None):
    """All Lusztig data of the given weight (order-independent set).

    deg defaults to the delta-degree ceiling implied by the weight itself.
    """
    weight = tuple(weight)
    if deg is None:
        deg = max(2, weight[0] + 1)
    roots = [r for r in cartan.enumerate_roots(typ, deg)
             if r != typ.delta and all(c <= w for c, w in zip(r, weight))]
    out = []

    def rec(idx, rem, acc):
        if idx == len(roots):
            m = rem[0]
            if m >= 0 and all(c == m * d for c, d in zip(rem, typ.delta)):
                for mp in multipartitions(typ, m):
                    out.append(LusztigDatum(acc, mp))
            return
        beta = roots[idx]
        top = min((rem[k] // beta[k]) for k in range(len(rem)) if beta[k])
        for n in range(top, -1, -1):
            nrem = tuple(c - n * b for c, b in zip(rem, beta))
            rec(idx + 1, nrem, acc + [(beta, n)] if n else acc)

    rec(0, weight, [])
    return sorted(set(out))


class PBWContext:
    """Window-bounded computations: root vectors, imaginary vectors, PBW
    monomials and expansion solvers, all cached per type."""

    def __init__(self, typ, deg):
        self.typ = typ
        self.deg = deg
        self.en = engine_for(typ)
        self._rv = {}
        self._dp = {}
        self._psi = {}
        self._hcoeffs = {}
        self._schur = {}
        self._solvers = {}
        self._monomials = {}

    # -- real root vectors ---------------------------------------------------

    def root_vector(self, order, beta):
        """E^<_beta as {eword: coeff}, pure positive."""
        beta = tuple(beta)
        typ = self.typ
        if sum(beta) == 1:
            return {(beta.index(1),): ONE}
        side, letters = order.letters_to(beta, self.deg)
        return self._rv_chain(side, letters)

    def _rv_chain(self, side, letters):
        key = (side, letters)
        hit = self._rv.get(key)
        if hit is not None:
            return hit
        en = self.en
        if len(letters) == 1:
            out = {(letters[0],): ONE}
        else:
            inner = self._rv_chain(side, letters[1:])
            full = en.from_positive(inner)
            full = en.braid(letters[0], full) if side == "upper" else en.braid_inv(letters[0], full)
            out = en.assert_positive(full, f"root vector chain {letters}")
        self._rv[key] = out
        return out

    def root_vector_dp(self, order, beta, n):
        """Divided power E^<_beta^{(n)}."""
        beta = tuple(beta)
        if n == 0:
            return {(): ONE}
        if sum(beta) == 1:
            return self.en.divided_power_word(beta.index(1), n)
        side, letters = order.letters_to(beta, self.deg)
        key = (side, letters, n)
        hit = self._dp.get(key)
        if hit is None:
            base = self._rv_chain(side, letters)
            out = base
            for _ in range(n - 1):
                out = pos_mult(out, base)
            fac = QRat.from_laurent(
                quantum_factorial(n, self.typ.root_qexp(beta))).inv()
            hit = {w: c * fac for w, c in out.items()}
            self._dp[key] = hit
        return hit

    # -- imaginary vectors -----------------------------------------------------

    def _min_root_with_classical_part(self, cls):
        for d in range(0, self.deg + 1):
            cand = tuple(d * m for m in self.typ.delta)
            cand = tuple(c + (cls[k - 1] if k else 0)
                         for k, c in enumerate(cand))
            if self.typ.is_positive(cand) and cartan.is_root(self.typ, cand):
                return cand
        raise RootBeyondCutoff(f"no root with classical part {cls} within window")

    def psi_vector(self, wbar, i, k):
        """Bracket vector of weight k*d_i*delta for the coarse type wbar."""
        key = (wbar, i, k)
        hit = self._psi.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        if k * typ.di[i] > self.deg - 1:
            raise RootBeyondCutoff(f"psi weight {k * typ.di[i]} delta beyond window")
        cls_i = tuple(1 if j == i else 0 for j in typ.classical_nodes)
        img = cartan.classical_apply(wbar, cls_i)
        gamma = self._min_root_with_classical_part(img)
        other = tuple(k * typ.di[i] * m - g for m, g in zip(typ.delta, gamma))
        order = coarse_order(typ, wbar)
        e1 = self.root_vector(order, other)
        e2 = self.root_vector(order, gamma)
        qim2 = self.en.qi(i, -2)
        out = pos_sub(pos_mult(e1, e2), pos_scale(pos_mult(e2, e1), qim2))
        self._psi[key] = out
        return out

    def psi_monomial(self, wbar, i, lam):
        out = {(): ONE}
        for part in lam:
            out = pos_mult(out, self.psi_vector(wbar, i, part))
        return out

    def imag_block_psi(self, wbar, mp):
        out = {(): ONE}
        for i, lam in zip(self.typ.classical_nodes, mp):
            out = pos_mult(out, self.psi_monomial(wbar, i, lam))
        return out

    def h_coeffs(self, i, a):
        """One-row Schur vector S_i^{(a)} expanded in bracket monomials:
        {partition of a: coeff}, from the purely-imaginary projection of
        E_{d_i delta - r_i alpha_i}^{(a)} E_i^{(r_i a)}."""
        key = (i, a)
        hit = self._hcoeffs.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        ident = tuple(tuple(1 if x == y else 0 for y in range(typ.n))
                      for x in range(typ.n))
        order = coarse_order(typ, ident, favored=i)
        alpha_i = tuple(1 if j == i else 0 for j in typ.nodes)
        hi_root = tuple(typ.di[i] * m - typ.r[i] * al
                        for m, al in zip(typ.delta, alpha_i))
        x = pos_mult(self.root_vector_dp(order, hi_root, a),
                     self.en.divided_power_word(i, typ.r[i] * a))
        weight = word_weight(typ, next(iter(x)))
        coeffs = self.solver(weight, order, kind="psi").solve(x)
        out = {}
        for datum, c in coeffs.items():
            if not datum.is_purely_imaginary():
                continue
            for j, lam in zip(typ.classical_nodes, datum.imag):
                if j != i and lam:
                    raise AssertionError(
                        "one-row projection hit a foreign node: convention error")
            out[datum.imag[i - 1]] = c
        self._hcoeffs[key] = out
        return out

    def schur_vector(self, wbar, i, lam):
        """S_i^{wbar, lam} by Jacobi-Trudi in the calibrated one-row vectors."""
        lam = tuple(lam)
        key = (wbar, i, lam)
        hit = self._schur.get(key)
        if hit is not None:
            return hit
        out = {}
        for sign, entries in jacobi_trudi_terms(lam):
            term = {(): ONE}
            for a in entries:
                ha = {}
                for mu, c in self.h_coeffs(i, a).items():
                    ha = pos_add(ha, pos_scale(self.psi_monomial(wbar, i, mu), c))
                term = pos_mult(term, ha)
            out = pos_add(out, pos_scale(term, QRat.from_int(sign)))
        self._schur[key] = out
        return out

    def imag_block_schur(self, wbar, mp):
        out = {(): ONE}
        for i, lam in zip(self.typ.classical_nodes, mp):
            if lam:
                out = pos_mult(out, self.schur_vector(wbar, i, lam))
        return out

    # -- PBW monomials -----------------------------------------------------------

    def pbw_monomial(self, order, datum, kind="S"):
        """L(c, <): divided powers in increasing root order with the imaginary
        block at the delta slot (kind='psi' replaces Schur vectors by bracket
        monomials, giving the calibration basis)."""
        okey = order.key(self.deg)
        mkey = (okey, datum, kind)
        hit = self._monomials.get(mkey)
        if hit is not None:
            return hit
        typ = self.typ
        out = {(): ONE}
        for beta in order.sorted_window(self.deg):
            if beta == typ.delta:
                if any(datum.imag):
                    wbar = order.coarse_type()
                    block = (self.imag_block_schur(wbar, datum.imag)
                             if kind == "S" else self.imag_block_psi(wbar, datum.imag))
                    out = pos_mult(out, block)
                continue
            n = datum.count(beta)
            if n:
                out = pos_mult(out, self.root_vector_dp(order, beta, n))
        self._monomials[mkey] = out
        return out

    def solver(self, weight, order, kind="S"):
        key = (tuple(weight), order.key(self.deg), kind)
        hit = self._solvers.get(key)
        if hit is None:
            data = lusztig_data_of_weight(self.typ, weight, self.deg)
            cols = [self.pbw_monomial(order, c, kind) for c in data]
            hit = ExpansionSolver(self.en, tuple(weight), data, cols)
            self._solvers[key] = hit
        return hit


# -- positive-half dict helpers (word concatenation products) -----------------

def pos_mult(a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            c = c1 * c2
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def pos_add(a, b):
    out = dict(a)
    for w, c in b.items():
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def pos_scale(a, c):
    if not c:
        return {}
    return {w: v * c for w, v in a.items()}


def pos_sub(a, b):
    return pos_add(a, pos_scale(b, QRat.from_int(-1)))


_CONTEXTS = {}


def context_for(typ, deg):
    key = (typ.tag, deg)
    if key not in _CONTEXTS:
        _CONTEXTS[key] = PBWContext(typ, deg)
    return _CONTEXTS[key]

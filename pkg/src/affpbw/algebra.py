"""Exact normal-form engine for the quantized enveloping algebra.

Elements are finite sums  coeff * F_word * q^h * E_word  stored as a dict
{(fword, kvec, eword): QRat}, where kvec is an integer vector m representing
h = sum_i m_i * ((alpha_i,alpha_i)/2) * h_i.  E- and F-words are free words;
equality in the algebra is decided through the bilinear form on each half
(its radical is the defining ideal, so no word-level rewriting is needed).

Straightening moves E past F letter by letter:
    E_i F_j = F_j E_i + delta_ij (Ktilde_i - Ktilde_i^-1)/(q_i - q_i^-1)
and q^h E_j = q^{(alpha_j,h)} E_j q^h.
"""

from .scalars import ONE, QLaurent, QRat, ZERO, quantum_factorial

EMPTY = ()


def _kzero(typ):
    return (0,) * len(typ.nodes)


def _kadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _kneg(a):
    return tuple(-x for x in a)


def _unit_k(typ, i, sign=1):
    return tuple(sign if j == i else 0 for j in typ.nodes)


def word_weight(typ, word):
    wt = [0] * len(typ.nodes)
    for i in word:
        wt[i] += 1
    return tuple(wt)


class UqEngine:
    """Per-type computation context: memoized straightening, form values,
    braid generator images and root-vector caches all live here."""

    def __init__(self, typ):
        self.typ = typ
        self._push = {}        # (i, fword) -> [(coeff, fword', kvec, tail_is_Ei)]
        self._straight = {}    # (eword, fword) -> [(coeff, fword', kvec, eword')]
        self._form = {}        # (w1, w2) -> QRat
        self._eprime = {}      # (i, word) -> [(coeff, subword)]
        self._eprime_star = {}
        self._timg_E = {}      # (i, j) -> element
        self._timg_F = {}
        self._qs_pow = {}

    # -- scalars -------------------------------------------------------------

    def qs(self, k):
        if k not in self._qs_pow:
            self._qs_pow[k] = QRat.qs_power(k)
        return self._qs_pow[k]

    def qi(self, i, k=1):
        return self.qs(self.typ.qexp[i] * k)

    def pair_kvec(self, m, wt):
        """(h_m, wt) pairing exponent: q^{<wt, h_m>} = qs^{d * pair}."""
        typ = self.typ
        s = 0
        for i, mi in enumerate(m):
            if mi:
                for j, wj in enumerate(wt):
                    if wj:
                        s += mi * wj * typ.sym[i][j]
        return s

    def kvec_reflect(self, i, m):
        typ = self.typ
        p = sum(mk * typ.sym[k][i] for k, mk in enumerate(m))
        num = 2 * p
        den = typ.sym[i][i]
        assert num % den == 0
        out = list(m)
        out[i] -= num // den
        return tuple(out)

    # -- elements ------------------------------------------------------------

    def zero(self):
        return {}

    def one(self):
        return {(EMPTY, _kzero(self.typ), EMPTY): ONE}

    def E(self, i):
        return {(EMPTY, _kzero(self.typ), (i,)): ONE}

    def F(self, i):
        return {((i,), _kzero(self.typ), EMPTY): ONE}

    def K(self, m):
        return {(EMPTY, tuple(m), EMPTY): ONE}

    def from_positive(self, words):
        """{eword: coeff} -> full element."""
        kz = _kzero(self.typ)
        return {(EMPTY, kz, w): c for w, c in words.items() if c}

    def positive_words(self, elem):
        """Projection onto the (no F, no K) component as {eword: coeff};
        sound together with is_zero(elem - that component)."""
        kz = _kzero(self.typ)
        return {e: c for (f, m, e), c in elem.items() if not f and m == kz and c}

    def add(self, a, b):
        out = dict(a)
        for k, c in b.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def scale(self, a, c):
        if not c:
            return {}
        return {k: v * c for k, v in a.items()}

    def sub(self, a, b):
        return self.add(a, self.scale(b, QRat.from_int(-1)))

    # -- straightening and products -------------------------------------------

    def _push_Ei(self, i, fword):
        """E_i * F_word as sum of F' * K^m * (E_i or 1)."""
        key = (i, fword)
        hit = self._push.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        if not fword:
            out = [(ONE, EMPTY, _kzero(typ), True)]
        else:
            j, rest = fword[0], fword[1:]
            out = []
            for c, fb, mb, tail in self._push_Ei(i, rest):
                out.append((c, (j,) + fb, mb, tail))
            if j == i:
                wt_rest = word_weight(typ, rest)
                p = sum((typ.sym[i][k]) * wk for k, wk in enumerate(wt_rest))
                denom = self.qi(i) - self.qi(i, -1)
                plus = self.qs(-typ.d * p) / denom
                minus = -(self.qs(typ.d * p) / denom)
                out.append((plus, rest, _unit_k(typ, i), False))
                out.append((minus, rest, _unit_k(typ, i, -1), False))
            out = _merge4(out)
        self._push[key] = out
        return out

    def _straighten(self, eword, fword):
        """E_word * F_word normal-ordered: [(coeff, F', kvec, E')]."""
        if not eword or not fword:
            return [(ONE, fword, _kzero(self.typ), eword)]
        key = (eword, fword)
        hit = self._straight.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        i, rest = eword[0], eword[1:]
        out = []
        for c, fa, ma, ea in self._straighten(rest, fword):
            for c2, fb, mb, tail in self._push_Ei(i, fa):
                tail_word = (i,) if tail else EMPTY
                scal = c * c2
                if tail and any(ma):
                    scal = scal * self.qs(-typ.d * self.pair_kvec(ma, word_weight(typ, tail_word)))
                out.append((scal, fb, _kadd(mb, ma), tail_word + ea))
        out = _merge4(out)
        self._straight[key] = out
        return out

    def mult_term(self, t1, c1, t2, c2):
        typ = self.typ
        f1, m1, e1 = t1
        f2, m2, e2 = t2
        out = {}
        for c, fa, ma, ea in self._straighten(e1, f2):
            scal = c1 * c2 * c
            if any(m1) and fa:
                scal = scal * self.qs(-typ.d * self.pair_kvec(m1, word_weight(typ, fa)))
            if any(m2) and ea:
                scal = scal * self.qs(-typ.d * self.pair_kvec(m2, word_weight(typ, ea)))
            if not scal:
                continue
            key = (f1 + fa, _kadd(_kadd(m1, ma), m2), ea + e2)
            s = out.get(key)
            s = scal if s is None else s + scal
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return out

    def mult(self, a, b):
        out = {}
        for t1, c1 in a.items():
            for t2, c2 in b.items():
                for key, v in self.mult_term(t1, c1, t2, c2).items():
                    s = out.get(key)
                    s = v if s is None else s + v
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out

    def mult_many(self, factors):
        out = self.one()
        for f in factors:
            out = self.mult(out, f)
        return out

    def power(self, a, n):
        out = self.one()
        for _ in range(n):
            out = self.mult(out, a)
        return out

    def divided_power_word(self, i, n):
        """E_i^{(n)} as {eword: coeff}."""
        inv = QRat.from_laurent(quantum_factorial(n, self.typ.qexp[i])).inv()
        return {(i,) * n: inv}

    # -- involutions -----------------------------------------------------------

    def bar(self, elem):
        return {(f, _kneg(m), e): c.bar() for (f, m, e), c in elem.items()}

    def star(self, elem):
        typ = self.typ
        out = {}
        for (f, m, e), c in elem.items():
            # star(F q^m E) = E^rev q^{-m} F^rev; commuting E^rev left past
            # q^{-m} costs qs^{d * (wt e, h_m)}
            scal = c
            if e and any(m):
                scal = scal * self.qs(typ.d * self.pair_kvec(m, word_weight(typ, e)))
            piece = self.mult_term((EMPTY, _kneg(m), e[::-1]), scal,
                                   (f[::-1], _kzero(typ), EMPTY), ONE)
            out = self.add(out, piece)
        return out

    # -- braid group action ------------------------------------------------------

    def timg_E(self, i, j):
        key = (i, j)
        hit = self._timg_E.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        if i == j:
            out = {((i,), _unit_k(typ, i), EMPTY): -ONE}
        else:
            out = {}
            a = -typ.cartan[i][j]
            for r in range(a + 1):
                s = a - r
                coeff = (self.qi(i, -r) if r else ONE)
                if r % 2:
                    coeff = -coeff
                fac = QRat.from_laurent(
                    quantum_factorial(s, typ.qexp[i]) * quantum_factorial(r, typ.qexp[i])).inv()
                word = (i,) * s + (j,) + (i,) * r
                out[(EMPTY, _kzero(typ), word)] = coeff * fac
        self._timg_E[key] = out
        return out

    def timg_F(self, i, j):
        key = (i, j)
        hit = self._timg_F.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        if i == j:
            out = {(EMPTY, _unit_k(typ, i, -1), (i,)): -ONE}
        else:
            out = {}
            a = -typ.cartan[i][j]
            for r in range(a + 1):
                s = a - r
                coeff = (self.qi(i, r) if r else ONE)
                if r % 2:
                    coeff = -coeff
                fac = QRat.from_laurent(
                    quantum_factorial(s, typ.qexp[i]) * quantum_factorial(r, typ.qexp[i])).inv()
                word = (i,) * r + (j,) + (i,) * s
                out[(word, _kzero(typ), EMPTY)] = coeff * fac
        self._timg_F[key] = out
        return out

    def braid(self, i, elem):
        """T_i as an algebra automorphism, generator by generator."""
        out = {}
        for (f, m, e), c in elem.items():
            factors = [self.timg_F(i, j) for j in f]
            factors.append(self.K(self.kvec_reflect(i, m)))
            factors.extend(self.timg_E(i, j) for j in e)
            piece = self.scale(self.mult_many(factors), c)
            out = self.add(out, piece)
        return out

    def braid_inv(self, i, elem):
        """T_i^{-1} = * o T_i o *."""
        return self.star(self.braid(i, self.star(elem)))

    def braid_word(self, word, elem, inverse=False):
        """T_w for w = s_{word[0]} ... s_{word[-1]}: T_w = T_{word[0]} o ...
        (leftmost letter acts last on roots, first here; see eq for T_w)."""
        if inverse:
            for i in reversed(word):
                elem = self.braid_inv(i, elem)
        else:
            for i in word:
                elem = self.braid(i, elem)
        return elem

    # -- bilinear form on the positive half ---------------------------------------

    def eprime(self, i, word):
        """Left derivation: [(scalar, word minus one i-letter)] with twist
        qs^{-d*(prefix weight, alpha_i)}."""
        key = (i, word)
        hit = self._eprime.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        out = []
        pre = [0] * len(typ.nodes)
        for k, j in enumerate(word):
            if j == i:
                p = sum(typ.sym[a][i] * w for a, w in enumerate(pre) if w)
                out.append((self.qs(-typ.d * p), word[:k] + word[k + 1:]))
            pre[j] += 1
        out = _merge2(out)
        self._eprime[key] = out
        return out

    def eprime_star(self, i, word):
        """Right derivation: twist over the suffix weight."""
        key = (i, word)
        hit = self._eprime_star.get(key)
        if hit is not None:
            return hit
        typ = self.typ
        out = []
        suf = [0] * len(typ.nodes)
        for k in range(len(word) - 1, -1, -1):
            j = word[k]
            if j == i:
                p = sum(typ.sym[a][i] * w for a, w in enumerate(suf) if w)
                out.append((self.qs(-typ.d * p), word[:k] + word[k + 1:]))
            suf[j] += 1
        out = _merge2(out)
        self._eprime_star[key] = out
        return out

    def form_words(self, w1, w2):
        """Kashiwara-style form with (1,1) = 1, (E_i, E_j) = delta_ij and
        (E_i x, y) = (x, e_i'(y)); radical = defining ideal."""
        if len(w1) != len(w2):
            return ZERO
        if not w1:
            return ONE
        if word_weight(self.typ, w1) != word_weight(self.typ, w2):
            return ZERO
        if w1 > w2:
            w1, w2 = w2, w1
        key = (w1, w2)
        hit = self._form.get(key)
        if hit is not None:
            return hit
        i, rest = w1[0], w1[1:]
        acc = ZERO
        for scal, sub in self.eprime(i, w2):
            v = self.form_words(rest, sub)
            if v:
                acc = acc + scal * v
        self._form[key] = acc
        return acc

    def form(self, x, y):
        """Form on {eword: coeff} dicts."""
        acc = ZERO
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                v = self.form_words(w1, w2)
                if v:
                    acc = acc + c1 * c2 * v
        return acc

    def derivation(self, i, side, x):
        """Kashiwara's e_i' (side='left') or its *-twin on {eword: coeff}."""
        fn = self.eprime if side == "left" else self.eprime_star
        out = {}
        for w, c in x.items():
            for scal, sub in fn(i, w):
                s = out.get(sub)
                v = c * scal
                s = v if s is None else s + v
                if s:
                    out[sub] = s
                else:
                    out.pop(sub, None)
        return out

    # -- zero tests ----------------------------------------------------------------

    def words_of_weight(self, wt):
        from itertools import permutations
        letters = []
        for i, k in enumerate(wt):
            letters.extend([i] * k)
        return sorted(set(permutations(letters)))

    def positive_is_zero(self, words):
        """Zero test in U_q^+ for {eword: coeff} via the form."""
        by_wt = {}
        for w, c in words.items():
            if c:
                by_wt.setdefault(word_weight(self.typ, w), {})[w] = c
        for wt, part in by_wt.items():
            for u in self.words_of_weight(wt):
                acc = ZERO
                for w, c in part.items():
                    v = self.form_words(u, w)
                    if v:
                        acc = acc + c * v
                if acc:
                    return False
        return True

    def is_zero(self, elem):
        """Zero test in the full algebra via the two-sided form pairing."""
        by_k = {}
        for (f, m, e), c in elem.items():
            if c:
                by_k.setdefault(m, []).append((f, e, c))
        for terms in by_k.values():
            fwts = {word_weight(self.typ, f) for f, _, _ in terms}
            ewts = {word_weight(self.typ, e) for _, e, _ in terms}
            for fw in fwts:
                for ew in ewts:
                    sel = [(f, e, c) for f, e, c in terms
                           if word_weight(self.typ, f) == fw
                           and word_weight(self.typ, e) == ew]
                    if not sel:
                        continue
                    for uf in self.words_of_weight(fw):
                        for ue in self.words_of_weight(ew):
                            acc = ZERO
                            for f, e, c in sel:
                                v1 = self.form_words(uf, f)
                                if not v1:
                                    continue
                                v2 = self.form_words(ue, e)
                                if v2:
                                    acc = acc + c * v1 * v2
                            if acc:
                                return False
        return True

    def equals(self, a, b):
        return self.is_zero(self.sub(a, b))

    def assert_positive(self, elem, what=""):
        """Check elem lies in U_q^+ and return it as {eword: coeff}."""
        pos = self.positive_words(elem)
        rest = self.sub(elem, self.from_positive(pos))
        if not self.is_zero(rest):
            raise AssertionError(f"element not in the positive half: {what}")
        return pos

    def serre_element(self, i, j):
        """q-Serre sum: sum_{r+s=1-a_ij} (-1)^r E_i^{(r)} E_j E_i^{(s)}."""
        typ = self.typ
        out = {}
        n = 1 - typ.cartan[i][j]
        for r in range(n + 1):
            s = n - r
            fac = QRat.from_laurent(
                quantum_factorial(r, typ.qexp[i]) * quantum_factorial(s, typ.qexp[i])).inv()
            if r % 2:
                fac = -fac
            w = (i,) * r + (j,) + (i,) * s
            out[w] = out.get(w, ZERO) + fac
        return {w: c for w, c in out.items() if c}


def _merge4(items):
    acc = {}
    for c, f, m, e in items:
        key = (f, m, e)
        s = acc.get(key)
        s = c if s is None else s + c
        if s:
            acc[key] = s
        else:
            acc.pop(key, None)
    return [(c, f, m, e) for (f, m, e), c in acc.items()]


def _merge2(items):
    acc = {}
    for c, w in items:
        s = acc.get(w)
        s = c if s is None else s + c
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)
    return [(c, w) for w, c in acc.items()]


_ENGINES = {}


def engine_for(typ):
    if typ.tag not in _ENGINES:
        _ENGINES[typ.tag] = UqEngine(typ)
    return _ENGINES[typ.tag]

"""Affine Cartan data for A1~1, A2~1, A2~2, root enumeration and Weyl words.

Roots are integer coordinate tuples over the simple roots (alpha_0 first).
All pairing values (alpha_i, alpha_j) are integers for the supported types,
and the q_s exponent of any bracket is integral; this is checked at load.
"""

from fractions import Fraction

from .errors import RootNotInSystem, UnsupportedType
from .scalars import quantum_int

SUPPORTED = ("A1~1", "A2~1", "A2~2")


class AffineTypeData:
    """Immutable bundle of Cartan-level constants for one affine type."""

    def __init__(self, tag, cartan, marks, comarks, bn_word, bn_tau):
        self.tag = tag
        self.cartan = cartan                      # a[i][j] = <alpha_j, alpha_i^vee>
        self.n = len(cartan) - 1                  # I = {0..n}, Ibar = {1..n}
        self.nodes = tuple(range(self.n + 1))
        self.classical_nodes = tuple(range(1, self.n + 1))
        self.marks = marks                        # delta = sum marks[i] alpha_i
        self.comarks = comarks                    # c = sum comarks[i] h_i
        self.delta = tuple(marks)
        # (alpha_i, alpha_j) = comark_i / mark_i * a_ij
        sym = []
        for i in self.nodes:
            row = []
            for j in self.nodes:
                v = Fraction(comarks[i], marks[i]) * cartan[i][j]
                row.append(v)
            sym.append(tuple(row))
        if any(v.denominator != 1 for row in sym for v in row):
            raise AssertionError("non-integral symmetrized form")
        self.sym = tuple(tuple(int(v) for v in row) for row in sym)
        # d_i = max(1, (alpha_i,alpha_i)/2) over all of I; q_s = q^{1/d}
        self.di = tuple(max(1, self.sym[i][i] // 2) if self.sym[i][i] % 2 == 0 else 1
                        for i in self.nodes)
        dvals = [max(Fraction(1), Fraction(self.sym[i][i], 2)) for i in self.nodes]
        self.d = int(max(dvals))
        # q_i = q^{(alpha_i,alpha_i)/2} = q_s^{qexp[i]}
        self.qexp = tuple(self.d * self.sym[i][i] // 2 for i in self.nodes)
        if any(2 * self.d * self.sym[i][i] % 4 for i in self.nodes):
            raise AssertionError("q_i not a power of q_s")
        self.r = tuple(2 if (tag == "A2~2" and i == self.n) else 1 for i in self.nodes)
        self.bn_word = bn_word                    # period of the doubly-infinite word
        self.bn_tau = bn_tau                      # diagram automorphism, i_{k+N} = tau(i_k)
        self._validate()

    # -- basic linear algebra on the root lattice --------------------------

    def pairing(self, beta, gamma):
        """Bilinear form (beta, gamma), an integer on the root lattice."""
        return sum(b * g * self.sym[i][j]
                   for i, b in enumerate(beta) if b
                   for j, g in enumerate(gamma) if g)

    def coroot_pairing(self, i, beta):
        """<beta, alpha_i^vee> = sum_j beta_j a_{ij}."""
        return sum(self.cartan[i][j] * beta[j] for j in self.nodes)

    def reflect(self, i, beta):
        c = self.coroot_pairing(i, beta)
        out = list(beta)
        out[i] -= c
        return tuple(out)

    def act_word(self, word, beta):
        """Apply s_{word[0]} s_{word[1]} ... to beta (leftmost acts last)."""
        for i in reversed(word):
            beta = self.reflect(i, beta)
        return beta

    def height(self, beta):
        return sum(beta)

    def delta_degree(self, beta):
        # marks[0] == 1 in all supported types
        return beta[0]

    def classical_part(self, beta):
        """beta - deg*delta as a vector over classical nodes (may be 'half' a
        classical root in A2~2, where long real roots have part -2*alpha_n)."""
        m = self.delta_degree(beta)
        return tuple(beta[i] - m * self.marks[i] for i in self.classical_nodes)

    def is_positive(self, beta):
        return any(beta) and all(c >= 0 for c in beta)

    def is_real(self, beta):
        return self.pairing(beta, beta) > 0

    def root_qexp(self, beta):
        """q_s exponent of q_beta = q^{(beta,beta)/2}."""
        num = self.d * self.pairing(beta, beta)
        assert num % 2 == 0
        return num // 2

    def quantum_int(self, n, i):
        return quantum_int(n, self.qexp[i])

    # -- construction-time checks ------------------------------------------

    def _validate(self):
        for i in self.nodes:
            for j in self.nodes:
                if self.sym[i][j] != self.sym[j][i]:
                    raise AssertionError("form not symmetric")
        for i in self.nodes:
            if sum(self.cartan[i][j] * self.marks[j] for j in self.nodes) != 0:
                raise AssertionError("marks not in Cartan kernel")
            if sum(self.cartan[j][i] * self.comarks[j] for j in self.nodes) != 0:
                raise AssertionError("comarks not in transpose kernel")
        if self.marks[0] != 1:
            raise AssertionError("node 0 normalization requires a_0 = 1")
        # stored translation word: both directions reduced with distinct
        # positive partial roots
        span = 4 * len(self.bn_word)
        for word in (bn_letters(self, 1, span),
                     tuple(bn_letter(self, -j) for j in range(span))):
            seen = set()
            for k in range(1, len(word) + 1):
                beta = beta_from_word(self, word, k)
                if not self.is_positive(beta) or beta in seen:
                    raise AssertionError("Beck-Nakajima word not reduced")
                seen.add(beta)

    def __repr__(self):
        return f"AffineTypeData({self.tag})"


_TYPES = {}


def build_type(tag):
    """Cartan data for one of the supported affine tags."""
    if tag in _TYPES:
        return _TYPES[tag]
    if tag == "A1~1":
        typ = AffineTypeData(
            tag,
            cartan=((2, -2), (-2, 2)),
            marks=(1, 1),
            comarks=(1, 1),
            bn_word=(0,),
            bn_tau=(1, 0),
        )
    elif tag == "A2~1":
        typ = AffineTypeData(
            tag,
            cartan=((2, -1, -1), (-1, 2, -1), (-1, -1, 2)),
            marks=(1, 1, 1),
            comarks=(1, 1, 1),
            bn_word=(0, 1, 2, 1),
            bn_tau=(0, 1, 2),
        )
    elif tag == "A2~2":
        # BN labeling: node 0 long, node n=1 short; delta = alpha_0 + 2 alpha_1
        typ = AffineTypeData(
            tag,
            cartan=((2, -1), (-4, 2)),
            marks=(1, 2),
            comarks=(2, 1),
            bn_word=(0, 1),
            bn_tau=(0, 1),
        )
    else:
        raise UnsupportedType(f"unsupported type tag {tag!r}")
    _TYPES[tag] = typ
    return typ


def pairing(typ, beta, gamma):
    return typ.pairing(beta, gamma)


def reflect_root(typ, i, beta):
    return typ.reflect(i, beta)


def enumerate_roots(typ, max_delta_degree):
    """All of Delta_+^min inside the coordinatewise box [0, D*delta].

    Real roots are found as the Weyl orbit of the simple roots intersected
    with the window; delta is the unique imaginary member.
    """
    if max_delta_degree < 1:
        raise ValueError("max_delta_degree must be >= 1")
    box = tuple(max_delta_degree * m for m in typ.marks)
    margin = tuple((max_delta_degree + 2) * m for m in typ.marks)

    def inside(beta, bound):
        return all(abs(c) <= b for c, b in zip(beta, bound))

    seen = set()
    frontier = [tuple(1 if j == i else 0 for j in typ.nodes) for i in typ.nodes]
    seen.update(frontier)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in typ.nodes:
                g = typ.reflect(i, beta)
                if g not in seen and inside(g, margin):
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    out = [b for b in seen if typ.is_positive(b) and inside(b, box)]
    out.append(typ.delta)
    out.sort(key=lambda b: (typ.height(b), b))
    return out


def is_root(typ, beta):
    """Real-root membership test (any degree)."""
    if not any(beta):
        return False
    if typ.pairing(beta, beta) <= 0:
        return False
    d = max(abs(typ.delta_degree(beta)) + 2, 1)
    target = beta if typ.is_positive(beta) else tuple(-c for c in beta)
    return target in set(enumerate_roots(typ, d)) - {typ.delta}


def root_from_coords(typ, coords):
    beta = tuple(coords)
    if beta == typ.delta:
        return beta
    if not is_root(typ, beta):
        raise RootNotInSystem(f"{coords} is not in Delta_+^min for {typ.tag}")
    return beta


# -- Weyl words --------------------------------------------------------------

def word_is_reduced(typ, word):
    """Left-to-right criterion: prefix w keeps alpha_{next} positive."""
    for m in range(len(word)):
        beta = typ.act_word(word[:m], _simple(typ, word[m]))
        if not typ.is_positive(beta):
            return False
    return True


def _simple(typ, i):
    return tuple(1 if j == i else 0 for j in typ.nodes)


def inversion_roots(typ, word):
    """Roots made negative by w = s_{word[0]}...s_{word[-1]}, i.e. the set
    {s_{i_l}...s_{i_{m+1}} alpha_{i_m}} built from the reversed word."""
    out = []
    for m in range(len(word) - 1, -1, -1):
        out.append(typ.act_word(word[m + 1:][::-1], _simple(typ, word[m])))
    return out


def weyl_matrix(typ, word):
    """Action of the word on root coordinates, as a tuple of column images."""
    cols = []
    for i in typ.nodes:
        cols.append(typ.act_word(word, _simple(typ, i)))
    return tuple(cols)


def apply_matrix(mat, beta):
    out = [0] * len(mat)
    for j, c in enumerate(beta):
        if c:
            for k in range(len(mat)):
                out[k] += c * mat[j][k]
    return tuple(out)


def enumerate_weyl(typ, max_len):
    """All affine Weyl elements of length <= max_len as (matrix, word) pairs."""
    ident = weyl_matrix(typ, ())
    out = {ident: ()}
    frontier = [ident]
    words = {ident: ()}
    for _ in range(max_len):
        nxt = []
        for mat in frontier:
            w = words[mat]
            for i in typ.nodes:
                word = w + (i,)
                if not word_is_reduced(typ, word):
                    continue
                m2 = weyl_matrix(typ, word)
                if m2 not in out:
                    out[m2] = word
                    words[m2] = word
                    nxt.append(m2)
        frontier = nxt
    return out


# -- classical Weyl group ----------------------------------------------------

def classical_reflect(typ, i, cls_vec):
    """s_i on classical coordinate vectors (i in Ibar)."""
    c = sum(typ.cartan[i][j + 1] * v for j, v in enumerate(cls_vec))
    out = list(cls_vec)
    out[i - 1] -= c
    return tuple(out)


def classical_positive_roots(typ):
    simples = [tuple(1 if j + 1 == i else 0 for j in range(typ.n))
               for i in typ.classical_nodes]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for i in typ.classical_nodes:
                g = classical_reflect(typ, i, v)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return sorted(v for v in seen if all(c >= 0 for c in v) and any(v))


def classical_weyl_elements(typ):
    """All wbar as {matrix over classical coords: reduced word}; BFS level
    gives word length, and left multiplication by s_i reflects image columns."""
    ident = tuple(tuple(1 if j == k else 0 for k in range(typ.n)) for j in range(typ.n))
    out = {ident: ()}
    frontier = [(ident, ())]
    while frontier:
        nxt = []
        for mat, word in frontier:
            for i in typ.classical_nodes:
                cols = tuple(classical_reflect(typ, i, col) for col in mat)
                if cols not in out:
                    out[cols] = (i,) + word
                    nxt.append((cols, (i,) + word))
        frontier = nxt
    return out


def classical_apply(mat, v):
    out = [0] * len(mat)
    for j, c in enumerate(v):
        if c:
            for k in range(len(mat)):
                out[k] += c * mat[j][k]
    return tuple(out)


def classical_longest(typ):
    elems = classical_weyl_elements(typ)
    return max(elems.items(), key=lambda kv: len(kv[1]))[0]


# -- the Beck-Nakajima doubly-infinite word ----------------------------------

def bn_letter(typ, k):
    """Letter i_k of the doubly-infinite word, any k in Z."""
    word, tau = typ.bn_word, typ.bn_tau
    n = len(word)
    idx = (k - 1) % n
    shift = (k - 1 - idx) // n
    letter = word[idx]
    if shift >= 0:
        for _ in range(shift):
            letter = tau[letter]
    else:
        inv = [0] * len(tau)
        for a, b in enumerate(tau):
            inv[b] = a
        for _ in range(-shift):
            letter = inv[letter]
    return letter


def bn_letters(typ, start, count):
    return tuple(bn_letter(typ, start + j) for j in range(count))


def beta_from_word(typ, word, k):
    """beta_k for a forward letter tuple word = (i_1, i_2, ...)."""
    return typ.act_word(word[:k - 1], _simple(typ, word[k - 1]))

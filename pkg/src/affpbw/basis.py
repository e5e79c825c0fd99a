"""Expansions between bases, order-transition bijections, lexicographic
preorders on Lusztig data, and the canonical basis by bar-unitriangularization.
"""

from .errors import ResidueAmbiguity, TriangularityFailure, WeightMismatch
from .pbw import LusztigDatum, lusztig_data_of_weight, pos_add, pos_scale, pos_sub
from .scalars import ONE, QLaurent, QRat, ZERO


class BasisLab:
    def __init__(self, ctx):
        self.ctx = ctx
        self.typ = ctx.typ
        self.en = ctx.en
        self._transitions = {}
        self._canonical = {}

    # -- expansion -------------------------------------------------------------

    def expand_in_pbw(self, x, order):
        """x: {eword: coeff}, weight-homogeneous -> {LusztigDatum: coeff}."""
        if not x:
            return {}
        from .algebra import word_weight
        wt = word_weight(self.typ, next(iter(x)))
        return self.ctx.solver(wt, order).solve(x)

    def residues(self, coeffs):
        """Residues at infinity of an expansion (all must be regular)."""
        return {c: v.residue_at_infinity() for c, v in coeffs.items()}

    # -- transition bijections ---------------------------------------------------

    def transition_table(self, weight, ord1, ord2):
        """Bijection on Lusztig data of the weight with L(c, ord1) =
        L(c', ord2) mod q_s^{-1}; diagonal residue +1, rest in q_s^{-1}A."""
        key = (tuple(weight), ord1.key(self.ctx.deg), ord2.key(self.ctx.deg))
        hit = self._transitions.get(key)
        if hit is not None:
            return hit
        data = lusztig_data_of_weight(self.typ, weight, self.ctx.deg)
        table = {}
        for c in data:
            L = self.ctx.pbw_monomial(ord1, c)
            coeffs = self.expand_in_pbw(L, ord2)
            target = None
            for c2, v in coeffs.items():
                if not v.is_regular_at_infinity():
                    raise ResidueAmbiguity(
                        f"transition coefficient with a pole: {c} -> {c2}: {v}")
                r = v.residue_at_infinity()
                if r == 0:
                    continue
                if r != 1 or target is not None:
                    raise ResidueAmbiguity(
                        f"transition residue not a single +1 at {c}: {coeffs}")
                target = c2
            if target is None:
                raise ResidueAmbiguity(f"transition lost the class of {c}")
            table[c] = target
        if sorted(table.values()) != sorted(data):
            raise ResidueAmbiguity("transition map is not a bijection")
        self._transitions[key] = table
        return table

    def transition_map(self, c, ord1, ord2):
        return self.transition_table(c.weight(self.typ), ord1, ord2)[c]

    # -- lexicographic preorders ---------------------------------------------------

    def compare_lusztig_data(self, c, c2, order):
        """Flags (>=_l, >=_r, >) for data of equal weight."""
        typ = self.typ
        if c.weight(typ) != c2.weight(typ):
            raise WeightMismatch(f"{c} vs {c2}")
        window = order.sorted_window(self.ctx.deg)
        lower = [b for b in window if b != typ.delta and order.compare(b, typ.delta) < 0]
        upper = [b for b in window if b != typ.delta and order.compare(b, typ.delta) > 0]
        ge_l = strict_l = None
        for beta in lower:
            a, b = c.count(beta), c2.count(beta)
            if a != b:
                ge_l, strict_l = a > b, True
                break
        if ge_l is None:
            ge_l, strict_l = True, False
        ge_r = strict_r = None
        for beta in reversed(upper):
            a, b = c.count(beta), c2.count(beta)
            if a != b:
                ge_r, strict_r = a > b, True
                break
        if ge_r is None:
            ge_r, strict_r = True, False
        gt = ge_l and ge_r and (strict_l or strict_r)
        return ge_l, ge_r, gt

    # -- canonical basis -------------------------------------------------------------

    def canonical_basis_weight(self, weight, order):
        """[(datum, {datum: coeff over the order's PBW basis})], bar-invariant,
        coefficients 1 on the diagonal and in q_s^-1 Z[q_s^-1] above."""
        key = (tuple(weight), order.key(self.ctx.deg))
        hit = self._canonical.get(key)
        if hit is not None:
            return hit
        data = lusztig_data_of_weight(self.typ, weight, self.ctx.deg)
        bar_cols = {}
        for c in data:
            L = self.ctx.pbw_monomial(order, c)
            barL = {w: v.bar() for w, v in L.items()}
            col = self.expand_in_pbw(barL, order)
            if col.get(c) != ONE:
                raise TriangularityFailure(f"bar matrix diagonal not 1 at {c}")
            for c2, v in col.items():
                if c2 == c:
                    continue
                if not self.compare_lusztig_data(c2, c, order)[2]:
                    raise TriangularityFailure(
                        f"bar(L({c})) hits {c2} which is not > {c}")
            bar_cols[c] = col

        # topological order on each weight: process >-maximal data first
        def gt(a, b):
            return self.compare_lusztig_data(a, b, order)[2]

        remaining = list(data)
        topo = []
        while remaining:
            for c in remaining:
                if not any(gt(c2, c) for c2 in remaining if c2 is not c):
                    topo.append(c)
                    remaining.remove(c)
                    break
            else:
                raise TriangularityFailure("cycle in the > order")
        # topo currently lists maximal-first
        basis = {}
        for c in topo:
            r = dict(bar_cols[c])
            r.pop(c, None)
            # write bar(L(c)) - L(c) = sum g_{c'} b(c') by peeling >-minimal support
            g = {}
            while r:
                mins = [c2 for c2 in r if not any(
                    gt(c2, c3) for c3 in r if c3 is not c2)]
                c2 = mins[0]
                coef = r.pop(c2)
                if not coef:
                    continue
                g[c2] = coef
                for c3, v in basis[c2].items():
                    if c3 == c2:
                        continue
                    cur = r.get(c3, ZERO)
                    cur = cur - coef * v
                    if cur:
                        r[c3] = cur
                    else:
                        r.pop(c3, None)
            # solve pi - bar(pi) = g with pi in q_s^-1 Z[q_s^-1]
            vec = {c: ONE}
            for c2, gc in g.items():
                if not gc.is_laurent():
                    raise TriangularityFailure(f"bar correction not Laurent: {gc}")
                lg = gc.to_laurent()
                if lg + lg.bar():
                    raise TriangularityFailure(f"correction not anti-invariant: {gc}")
                pi = QLaurent(0, ())
                for k, a in lg.terms():
                    if k < 0:
                        pi = pi + QLaurent.monomial(k, a)
                pi = QRat.from_laurent(pi)
                if pi:
                    for c3, v in basis[c2].items():
                        cur = vec.get(c3, ZERO) + pi * v
                        if cur:
                            vec[c3] = cur
                        else:
                            vec.pop(c3, None)
            basis[c] = vec

        out = [(c, basis[c]) for c in data]
        for c, vec in out:
            if vec.get(c) != ONE:
                raise TriangularityFailure("canonical vector lost its leading 1")
            for c2, v in vec.items():
                if c2 != c and not v.in_qsinv_times_A():
                    raise TriangularityFailure(
                        f"off-diagonal not in q_s^-1 Z[q_s^-1]: {v}")
                if c2 != c and not v.is_int_poly_in_qsinv():
                    raise TriangularityFailure(
                        f"off-diagonal not in Z[q_s^-1]: {v}")
        self._canonical[key] = out
        return out

    def canonical_vector_words(self, vec, order):
        """Assemble a canonical vector {datum: coeff} into word coordinates."""
        out = {}
        for c, v in vec.items():
            out = pos_add(out, pos_scale(self.ctx.pbw_monomial(order, c), v))
        return out

    def bar_invariant(self, words):
        barw = {w: v.bar() for w, v in words.items()}
        return self.en.positive_is_zero(pos_sub(words, barw))

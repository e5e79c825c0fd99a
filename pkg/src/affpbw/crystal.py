"""Crystal combinatorics of B(-infinity) realized on Lusztig-datum labels.

A class is named by its Lusztig datum for the reference Beck-Nakajima order;
every operator is a transition to an order where alpha_i is extremal followed
by a shift of the alpha_i exponent (exact, via Kashiwara's theory: PBW vectors
with vanishing extremal exponent are killed by the matching derivation).
"""

from .errors import NotAccessible
from .orders import BNOrder, i_max_order, i_min_order
from .pbw import LusztigDatum, lusztig_data_of_weight, pos_add, pos_scale


class CrystalContext:
    def __init__(self, lab):
        self.lab = lab
        self.ctx = lab.ctx
        self.typ = lab.typ
        self.ref = BNOrder(self.typ, 0)
        self._imin = {i: i_min_order(self.typ, i) for i in self.typ.nodes}
        self._imax = {i: i_max_order(self.typ, i) for i in self.typ.nodes}

    def lowest(self):
        return LusztigDatum.zero(self.typ)

    def weight(self, b):
        return b.weight(self.typ)

    def classes_of_weight(self, weight):
        return lusztig_data_of_weight(self.typ, weight, self.ctx.deg)

    def _to(self, b, order):
        if not any(self.weight(b)):
            return b
        return self.lab.transition_map(b, self.ref, order)

    def _from(self, b, order):
        if not any(self.weight(b)):
            return b
        return self.lab.transition_map(b, order, self.ref)

    def _alpha(self, i):
        return tuple(1 if j == i else 0 for j in self.typ.nodes)

    # -- string data -------------------------------------------------------------

    def phi(self, i, b):
        c = self._to(b, self._imin[i])
        return c.count(self._alpha(i))

    def epsilon(self, i, b):
        cop = sum(self.typ.cartan[i][j] * w for j, w in enumerate(self.weight(b)))
        return self.phi(i, b) - cop

    def phi_star(self, i, b):
        c = self._to(b, self._imax[i])
        return c.count(self._alpha(i))

    def epsilon_star(self, i, b):
        cop = sum(self.typ.cartan[i][j] * w for j, w in enumerate(self.weight(b)))
        return self.phi_star(i, b) - cop

    # -- operators ----------------------------------------------------------------

    def ftilde(self, i, b):
        order = self._imin[i]
        c = self._to(b, order)
        n = c.count(self._alpha(i))
        if n == 0:
            return None
        return self._from(c.with_count(self._alpha(i), n - 1), order)

    def etilde(self, i, b):
        order = self._imin[i]
        c = self._to(b, order)
        n = c.count(self._alpha(i))
        return self._from(c.with_count(self._alpha(i), n + 1), order)

    def ftilde_star(self, i, b):
        order = self._imax[i]
        c = self._to(b, order)
        n = c.count(self._alpha(i))
        if n == 0:
            return None
        return self._from(c.with_count(self._alpha(i), n - 1), order)

    def etilde_star(self, i, b):
        order = self._imax[i]
        c = self._to(b, order)
        n = c.count(self._alpha(i))
        return self._from(c.with_count(self._alpha(i), n + 1), order)

    def apply(self, ops, b):
        """ops: iterable of ('e'|'f'|'e*'|'f*', i, count)."""
        fn = {"e": self.etilde, "f": self.ftilde,
              "e*": self.etilde_star, "f*": self.ftilde_star}
        for kind, i, count in ops:
            for _ in range(count):
                if b is None:
                    return None
                b = fn[kind](i, b)
        return b

    # -- Saito reflections ----------------------------------------------------------

    def saito(self, i, b):
        """sigma_i(b) = etilde_i^{eps*_i(b)} (ftilde*_i)^{phi*_i(b)} b."""
        ph = self.phi_star(i, b)
        ep = self.epsilon_star(i, b)
        out = self.apply([("f*", i, ph), ("e", i, ep)], b)
        if out is None:
            raise NotAccessible(f"saito reflection undefined at {b}")
        return out

    def saito_star(self, i, b):
        ph = self.phi(i, b)
        ep = self.epsilon(i, b)
        out = self.apply([("f", i, ph), ("e*", i, ep)], b)
        if out is None:
            raise NotAccessible(f"starred saito reflection undefined at {b}")
        return out

    def saito_inv(self, i, b):
        """Inverse of sigma_i: sigma_i^{-1}(b) = (etilde*_i)^{eps_i} ftilde_i^{phi_i} b
        (the starred reflection composed the other way)."""
        return self.saito_star(i, b)

    # -- algebra-level string decomposition -------------------------------------------

    def string_decompose(self, i, b):
        """(eps_i, phi_i, etilde_i b, ftilde_i b) plus the starred variant."""
        return (self.epsilon(i, b), self.phi(i, b),
                self.etilde(i, b), self.ftilde(i, b),
                self.epsilon_star(i, b), self.phi_star(i, b),
                self.etilde_star(i, b), self.ftilde_star(i, b))

    def kashiwara_raise_element(self, i, x, star=False):
        """Exact Etilde_i (resp. starred) on a positive element {eword: coeff}."""
        from .algebra import word_weight
        order = self._imax[i] if star else self._imin[i]
        coeffs = self.lab.expand_in_pbw(x, order)
        out = {}
        al = self._alpha(i)
        for c, v in coeffs.items():
            c2 = c.with_count(al, c.count(al) + 1)
            out = pos_add(out, pos_scale(self.ctx.pbw_monomial(order, c2), v))
        return out

    def kashiwara_lower_element(self, i, x, star=False):
        order = self._imax[i] if star else self._imin[i]
        coeffs = self.lab.expand_in_pbw(x, order)
        out = {}
        al = self._alpha(i)
        for c, v in coeffs.items():
            n = c.count(al)
            if n == 0:
                continue
            c2 = c.with_count(al, n - 1)
            out = pos_add(out, pos_scale(self.ctx.pbw_monomial(order, c2), v))
        return out

    # -- lifts -------------------------------------------------------------------------

    def lift(self, b):
        """Integral representative L(b, ref order) of the class."""
        return self.ctx.pbw_monomial(self.ref, b)

    def residue_class(self, x):
        """Residue of an element of the lattice in the crystal-basis labels:
        {datum: Fraction}, nonzero entries only."""
        coeffs = self.lab.expand_in_pbw(x, self.ref)
        out = {}
        for c, v in coeffs.items():
            r = v.residue_at_infinity()
            if r:
                out[c] = r
        return out

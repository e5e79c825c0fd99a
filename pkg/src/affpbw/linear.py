"""Exact expansion of positive-half elements over a supplied basis.

Columns are form-coordinate vectors (pairings against all words of the
weight); a square subsystem is chosen by cheap evaluation at a fixed rational
point and then factored exactly, and every solve is verified against all
remaining rows, so a dimension defect cannot pass silently.
"""

from fractions import Fraction

from .scalars import QRat, ZERO

_EVAL_POINT = Fraction(19, 7)


def _eval_qrat(x, theta):
    num = Fraction(0)
    p = Fraction(1)
    for c in x.num:
        num += c * p
        p *= theta
    den = Fraction(0)
    p = Fraction(1)
    for c in x.den:
        den += c * p
        p *= theta
    return num / den


class ExpansionSolver:
    def __init__(self, engine, weight, labels, columns):
        """labels: basis element names; columns: {eword: coeff} dicts."""
        self.engine = engine
        self.weight = weight
        self.labels = list(labels)
        self.words = engine.words_of_weight(weight)
        self.columns = columns
        s = len(labels)
        if len(self.words) < s:
            raise AssertionError("more basis elements than words at weight")
        a_rows = []
        for u in self.words:
            row = []
            for col in columns:
                acc = ZERO
                for w, c in col.items():
                    v = engine.form_words(u, w)
                    if v:
                        acc = acc + c * v
                row.append(acc)
            a_rows.append(row)
        self.A = a_rows
        rows = self._choose_rows()
        self.rows = rows
        self.Minv = _invert([[a_rows[r][j] for j in range(s)] for r in rows])

    def _choose_rows(self):
        s = len(self.labels)
        ev = [[_eval_qrat(x, _EVAL_POINT) for x in row] for row in self.A]
        m = len(ev)
        chosen = []
        col = 0
        rowset = list(range(m))
        work = [list(r) for r in ev]
        for col in range(s):
            piv = None
            for r in rowset:
                if work[r][col] != 0:
                    piv = r
                    break
            if piv is None:
                raise AssertionError("basis columns dependent at evaluation point")
            chosen.append(piv)
            rowset.remove(piv)
            pr = work[piv]
            for r in rowset:
                if work[r][col] != 0:
                    f = work[r][col] / pr[col]
                    work[r] = [a - f * b for a, b in zip(work[r], pr)]
        return sorted(chosen)

    def form_coords(self, x):
        """x: {eword: coeff} of this weight -> vector over self.words."""
        en = self.engine
        out = []
        for u in self.words:
            acc = ZERO
            for w, c in x.items():
                v = en.form_words(u, w)
                if v:
                    acc = acc + c * v
            out.append(acc)
        return out

    def solve(self, x, verify=True):
        """Coefficients a with sum a_j * basis_j == x; raises if inconsistent
        (which would mean the basis does not span this weight space)."""
        phi = self.form_coords(x)
        rhs = [phi[r] for r in self.rows]
        a = _matvec(self.Minv, rhs)
        if verify:
            for r in range(len(self.words)):
                acc = ZERO
                for j, aj in enumerate(a):
                    if aj:
                        v = self.A[r][j]
                        if v:
                            acc = acc + aj * v
                if acc != phi[r]:
                    raise AssertionError(
                        f"expansion inconsistent at weight {self.weight}: "
                        "basis does not span (rank defect)")
        return {lab: c for lab, c in zip(self.labels, a) if c}


def _invert(mat):
    n = len(mat)
    a = [list(row) + [QRat.from_int(1) if i == j else ZERO for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise AssertionError("exact matrix singular (evaluation point lied)")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col].inv()
        a[col] = [v * p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _matvec(mat, vec):
    out = []
    for row in mat:
        acc = ZERO
        for a, b in zip(row, vec):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out

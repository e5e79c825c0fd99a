"""Tiny exact phase-1 simplex over Fractions.

Used for cone-intersection tests and strict separating functionals in the
hyperplane sweep.  Problems here have at most a handful of free variables and
a few dozen constraints, so a dense tableau with Bland's rule is plenty.
"""

from fractions import Fraction


def feasible_point(n_vars, eqs=(), ges=()):
    """A point x in Q^n_vars with sum(c*x) == r for (c, r) in eqs and
    sum(c*x) >= r for (c, r) in ges, or None if infeasible."""
    rows = []
    rhs = []
    for c, r in eqs:
        rows.append((list(c), 0))
        rhs.append(Fraction(r))
    slacks = 0
    for c, r in ges:
        slacks += 1
        rows.append((list(c), slacks))
        rhs.append(Fraction(r))

    ncols = 2 * n_vars + slacks
    mat = []
    for (c, slack_id), r in zip(rows, rhs):
        row = [Fraction(0)] * ncols
        for j, cj in enumerate(c):
            row[j] = Fraction(cj)
            row[n_vars + j] = Fraction(-cj)
        if slack_id:
            row[2 * n_vars + slack_id - 1] = Fraction(-1)
        if r < 0:
            row = [-v for v in row]
            r = -r
        mat.append((row, r))

    m = len(mat)
    total = ncols + m  # plus artificials
    tab = []
    for i, (row, r) in enumerate(mat):
        full = row + [Fraction(0)] * m
        full[ncols + i] = Fraction(1)
        tab.append(full + [r])
    # objective: minimize sum of artificials; reduced costs start as -sum(rows)
    obj = [Fraction(0)] * (total + 1)
    for i in range(m):
        row = tab[i]
        for j in range(total + 1):
            obj[j] -= row[j]
    basis = [ncols + i for i in range(m)]

    while True:
        enter = -1
        for j in range(total):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][total] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return None  # unbounded phase-1 cannot happen, defensive
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [v - f * w for v, w in zip(obj, tab[leave])]
        basis[leave] = enter

    if -obj[total] != 0:
        return None
    x = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        if b < ncols:
            x[b] = tab[i][total]
        elif tab[i][total] != 0:
            return None  # artificial stuck at nonzero level
    return [x[j] - x[n_vars + j] for j in range(n_vars)]


def cones_intersect(gen1, gen2):
    """True iff cone(gen1) and cone(gen2) share a nonzero point (exact)."""
    if not gen1 or not gen2:
        return False
    n = len(gen1[0])
    k1, k2 = len(gen1), len(gen2)
    eqs = []
    for coord in range(n):
        c = [v[coord] for v in gen1] + [-v[coord] for v in gen2]
        eqs.append((c, 0))
    eqs.append(([1] * (k1 + k2), 1))  # normalization picks a nonzero point
    ges = [([1 if j == i else 0 for j in range(k1 + k2)], 0) for i in range(k1 + k2)]
    return feasible_point(k1 + k2, eqs, ges) is not None


def strict_separator(neg, pos):
    """Functional v with v(x) <= -1 on neg and v(x) >= 1 on pos, or None."""
    pts = list(neg) + list(pos)
    if not pts:
        return None
    n = len(pts[0])
    ges = []
    for x in neg:
        ges.append(([-c for c in x], 1))
    for x in pos:
        ges.append((list(x), 1))
    return feasible_point(n, (), ges)

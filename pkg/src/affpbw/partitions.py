"""Partition and multipartition combinatorics."""


def partitions(n, max_part=None):
    """Weakly decreasing tuples summing to n."""
    if n == 0:
        return [()]
    if max_part is None:
        max_part = n
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def dominates(lam, mu):
    """lam dominates mu (same size): partial sums of lam >= those of mu."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def remove_largest(lam):
    return tuple(sorted(lam[1:], reverse=True)) if lam else ()


def add_part(lam, a):
    if a == 0:
        return tuple(lam)
    return tuple(sorted(lam + (a,), reverse=True))


def multipartitions(typ, m):
    """All tuples (lam^{(1)},...,lam^{(n)}) with sum_i d_i |lam^{(i)}| = m."""
    nodes = typ.classical_nodes
    out = []

    def rec(idx, rem, acc):
        if idx == len(nodes):
            if rem == 0:
                out.append(tuple(acc))
            return
        d = typ.di[nodes[idx]]
        for size in range(0, rem // d + 1):
            for lam in partitions(size):
                rec(idx + 1, rem - d * size, acc + [lam])

    rec(0, m, [])
    return sorted(out)


def multipartition_weight(typ, mp):
    return sum(typ.di[i] * sum(lam) for i, lam in zip(typ.classical_nodes, mp))


def mp_dominance_ge(lam_mp, mu_mp):
    """Multipartition order of the dominance kind: same weight and each
    mu^{(i)} dominates lam^{(i)} (so lam >= mu is 'more spread out')."""
    return all(dominates(m, l) for l, m in zip(lam_mp, mu_mp))


def jacobi_trudi_terms(lam):
    """Expansion of s_lam as signed products of h's: [(sign, (a_1,...,a_k))],
    from det(h_{lam_i - i + j}); entries a=0 are h_0=1 and are dropped,
    negative entries kill the term."""
    from itertools import permutations
    ell = len(lam)
    if ell == 0:
        return [(1, ())]
    out = []
    for perm in permutations(range(ell)):
        sign = 1
        for a in range(ell):
            for b in range(a + 1, ell):
                if perm[a] > perm[b]:
                    sign = -sign
        entries = []
        ok = True
        for i in range(ell):
            a = lam[i] - (i + 1) + (perm[i] + 1)
            if a < 0:
                ok = False
                break
            if a > 0:
                entries.append(a)
        if ok:
            out.append((sign, tuple(sorted(entries, reverse=True))))
    return out

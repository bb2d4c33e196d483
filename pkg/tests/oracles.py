"""Independent brute-force oracles for the exact-arithmetic layer.

Nothing in here uses the package's reduction algorithms.  Invariant
factors come from determinantal divisors (gcds of k x k minors), and all
group-level checks work by enumerating elements of finite groups.  These
are the reference implementations the fast code is tested against.
"""

from __future__ import annotations

from itertools import combinations, product
from math import gcd, prod


# ---------------------------------------------------------------------------
# invariant factors via determinantal divisors
# ---------------------------------------------------------------------------

def _minor_det(rows, row_idx, col_idx):
    k = len(row_idx)
    if k == 0:
        return 1
    if k == 1:
        return rows[row_idx[0]][col_idx[0]]
    total = 0
    r0 = row_idx[0]
    for pos, c in enumerate(col_idx):
        sub = _minor_det(rows, row_idx[1:], col_idx[:pos] + col_idx[pos + 1:])
        term = rows[r0][c] * sub
        total += term if pos % 2 == 0 else -term
    return total


def invariant_factors_oracle(rows):
    """Diagonal of the Smith form via gcds of k x k minors.

    d_k = g_k / g_(k-1) where g_k is the gcd of all k x k minors (g_0 = 1);
    once some g_k vanishes the remaining entries are zero.  Only sensible
    for small matrices (exponential in size).
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    result = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                g = gcd(g, _minor_det(rows, ri, ci))
        if g == 0:
            result.extend([0] * (min(m, n) - k + 1))
            return result
        result.append(g // prev)
        prev = g
    return result


# ---------------------------------------------------------------------------
# brute force over finite groups
# ---------------------------------------------------------------------------
# A finite abelian group is a tuple of moduli (m_1, ..., m_k), elements are
# coordinate tuples mod the moduli.  Homs are matrices applied mod moduli.

def all_elements(moduli):
    return [tuple(c) for c in product(*[range(m) for m in moduli])]


def add(moduli, x, y):
    return tuple((a + b) % m for a, b, m in zip(x, y, moduli))


def apply_matrix(matrix, target_moduli, x):
    out = []
    for i, row in enumerate(matrix):
        out.append(sum(r * c for r, c in zip(row, x)) % target_moduli[i])
    return tuple(out)


def image_set(matrix, src_moduli, dst_moduli):
    return {apply_matrix(matrix, dst_moduli, x) for x in all_elements(src_moduli)}


def kernel_set(matrix, src_moduli, dst_moduli):
    zero = tuple(0 for _ in dst_moduli)
    return {x for x in all_elements(src_moduli)
            if apply_matrix(matrix, dst_moduli, x) == zero}


def exact_at_middle(f_matrix, g_matrix, f_src, middle, g_dst):
    return image_set(f_matrix, f_src, middle) == kernel_set(g_matrix, middle, g_dst)


def subset_order_counts(moduli, subset):
    """For each n dividing the subset size, the count of x with n*x = 0."""
    counts = {}
    size = len(subset)
    for n in range(1, size + 1):
        if size % n:
            continue
        zero = tuple(0 for _ in moduli)
        counts[n] = sum(
            1 for x in subset
            if tuple((n * c) % m for c, m in zip(x, moduli)) == zero)
    return counts


def group_type_matches(subset, moduli, free_rank, torsion):
    """Does a finite subgroup (as an element set) have the claimed type?

    A finite abelian group is determined by the counts of n-torsion
    elements for all n, which for Z/d1 + ... + Z/dk equal
    prod_i gcd(n, d_i).
    """
    if free_rank != 0:
        return False
    claimed_order = prod(torsion) if torsion else 1
    if len(subset) != claimed_order:
        return False
    counts = subset_order_counts(moduli, subset)
    for n, count in counts.items():
        predicted = prod(gcd(n, d) for d in torsion) if torsion else 1
        if count != predicted:
            return False
    return True


def quotient_type(moduli, subgroup):
    """Order-count fingerprint of (prod Z/m_i) / subgroup.

    Returns (size, counts) where counts[n] is the number of cosets killed
    by n, for each n dividing the size.
    """
    elements = all_elements(moduli)
    sub = sorted(subgroup)
    coset_of = {}
    for x in elements:
        coset_of[x] = min(add(moduli, x, s) for s in sub)
    zero_coset = coset_of[tuple(0 for _ in moduli)]
    reps = sorted(set(coset_of.values()))
    size = len(reps)
    counts = {}
    for n in range(1, size + 1):
        if size % n:
            continue
        c = 0
        for rep in reps:
            nx = tuple((n * v) % m for v, m in zip(rep, moduli))
            if coset_of[nx] == zero_coset:
                c += 1
        counts[n] = c
    return size, counts


def quotient_matches(moduli, subgroup, free_rank, torsion):
    if free_rank != 0:
        return False
    size, counts = quotient_type(moduli, subgroup)
    if size != (prod(torsion) if torsion else 1):
        return False
    for n, count in counts.items():
        predicted = prod(gcd(n, d) for d in torsion) if torsion else 1
        if count != predicted:
            return False
    return True


def all_group_moduli_up_to(max_order):
    """All invariant-factor chains (d1 | d2 | ...) with product <= max_order."""
    chains = []

    def extend(chain, start, budget):
        for d in range(max(2, start), budget + 1):
            if chain and d % chain[-1] != 0:
                continue
            new = chain + (d,)
            chains.append(new)
            extend(new, d, budget // d)

    extend((), 2, max_order)
    return [()] + chains

"""Brute-force oracles, deliberately independent of the package internals.

Everything here works on plain lists and the lattice order only; nothing is
imported from ``reslat`` so an error in the library cannot leak into the
expected values.
"""

from itertools import permutations, product


def order_from_join(join):
    n = len(join)
    return [[join[a][b] == b for b in range(n)] for a in range(n)]


def residuum_by_adjointness(join, otimes, y, z):
    """The w with (x <= w iff x*y <= z) for every x, found by trying every w; else None."""
    n = len(join)
    le = order_from_join(join)
    for w in range(n):
        if all(le[x][w] == le[otimes[x][y]][z] for x in range(n)):
            return w
    return None


def arrow_oracle(join, otimes):
    n = len(join)
    return [[residuum_by_adjointness(join, otimes, y, z) for z in range(n)] for y in range(n)]


def residuated_products(join, meet, bottom, top):
    """Every commutative associative residuable product with unit ``top``.

    Only commutativity is used to shrink the space (upper triangle of interior
    pairs); no monotonicity pruning.
    """
    n = len(join)
    interior = [x for x in range(n) if x not in (bottom, top)]
    slots = [(x, y) for i, x in enumerate(interior) for y in interior[i:]]
    out = []
    for values in product(range(n), repeat=len(slots)):
        t = [[None] * n for _ in range(n)]
        for x in range(n):
            t[x][top] = t[top][x] = x
            t[x][bottom] = t[bottom][x] = bottom
        for (x, y), v in zip(slots, values):
            t[x][y] = t[y][x] = v
        if any(t[t[x][y]][z] != t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n)):
            continue
        if any(v is None for row in arrow_oracle(join, t) for v in row):
            continue
        out.append(tuple(tuple(r) for r in t))
    return out


def isomorphic_tables(a, b):
    """a, b: lists of square tables of equal size; bijection preserving all of them."""
    n = len(a[0])
    for p in permutations(range(n)):
        if all(p[ta[x][y]] == tb[p[x]][p[y]] for ta, tb in zip(a, b)
               for x in range(n) for y in range(n)):
            return True
    return False


def count_up_to_iso(bundles):
    reps = []
    for bundle in bundles:
        if not any(isomorphic_tables(bundle, r) for r in reps):
            reps.append(bundle)
    return reps


def lattices_by_relations(n):
    """Bounded lattices of size n: brute force over every relation on the interior.

    Returns representatives up to isomorphism as (join, meet) lists with bottom 0, top n-1.
    """
    k = n - 2
    off = [(i, j) for i in range(k) for j in range(k) if i != j]
    found = []
    for bits in product((False, True), repeat=len(off)):
        le = [[i == j for j in range(n)] for i in range(n)]
        for x in range(n):
            le[0][x] = le[x][n - 1] = True
        for (i, j), b in zip(off, bits):
            if b:
                le[i + 1][j + 1] = True
        if any(le[a][b] and le[b][a] and a != b for a in range(n) for b in range(n)):
            continue
        if any(le[a][b] and le[b][c] and not le[a][c]
               for a in range(n) for b in range(n) for c in range(n)):
            continue
        join = [[None] * n for _ in range(n)]
        meet = [[None] * n for _ in range(n)]
        ok = True
        for a in range(n):
            for b in range(n):
                ub = [c for c in range(n) if le[a][c] and le[b][c]]
                lub = [c for c in ub if all(le[c][d] for d in ub)]
                lb = [c for c in range(n) if le[c][a] and le[c][b]]
                glb = [c for c in lb if all(le[d][c] for d in lb)]
                if len(lub) != 1 or len(glb) != 1:
                    ok = False
                    break
                join[a][b], meet[a][b] = lub[0], glb[0]
            if not ok:
                break
        if ok:
            found.append([join, meet])
    return count_up_to_iso(found)


def lattices_by_join_tables(n):
    """Bounded lattices via every commutative idempotent join table with 0 neutral, 1 absorbing."""
    interior = list(range(1, n - 1))
    pairs = [(x, y) for i, x in enumerate(interior) for y in interior[i + 1:]]
    found = []
    for values in product(range(n), repeat=len(pairs)):
        j = [[None] * n for _ in range(n)]
        for x in range(n):
            j[x][x] = x
            j[0][x] = j[x][0] = x
            j[n - 1][x] = j[x][n - 1] = n - 1
        for (x, y), v in zip(pairs, values):
            j[x][y] = j[y][x] = v
        if all(j[j[x][y]][z] == j[x][j[y][z]] for x in range(n) for y in range(n) for z in range(n)):
            found.append([j])
    return count_up_to_iso(found)


def subuniverses_by_scan(n, tables, bottom, top):
    out = []
    for bits in product((False, True), repeat=n):
        A = [x for x in range(n) if bits[x]]
        if bottom not in A or top not in A:
            continue
        if all(t[x][y] in A for t in tables for x in A for y in A):
            out.append(tuple(A))
    return sorted(out, key=lambda A: (len(A), A))

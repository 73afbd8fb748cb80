"""Exhaustive enumeration of small residuated lattices up to isomorphism.

Lattices come from partial orders on the interior elements (strict relations
only between ``i < j``, which every poset admits via a linear extension),
filtered for the lattice property and deduplicated by canonical key.
Products are filled by backtracking over the upper triangle of interior
pairs with incremental monotonicity pruning; associativity and residuability
are checked at the leaves.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product

from . import coupled as cp
from .core import (
    BoundedLattice, CheckReport, NoResiduum, ResiduatedLattice, Table, check_residuated,
    check_monotone, default_tokens, derive_arrow, is_dnl, lattice_from_order, make_table,
    residuated, verdict, verify_lemma_suite, check_prelinearity, check_divisibility,
)
from .subuniverse import find_tieable, is_subuniverse, neg_fixed

MAX_SIZE = 6
DEFAULT_SIZE = 5


def _relabel(table: Table, perm) -> list[int]:
    """Flattened table after renaming element ``i`` to ``perm[i]``."""
    n = len(table)
    out = [0] * (n * n)
    for i in range(n):
        pi = perm[i] * n
        row = table[i]
        for j in range(n):
            out[pi + perm[j]] = perm[row[j]]
    return out


def _perms(n: int, bottom: int, top: int):
    """Relabelings sending bottom to 0 and top to n-1 (order-definable, so always fixed)."""
    interior = [x for x in range(n) if x not in (bottom, top)]
    for targets in permutations(range(1, n - 1)):
        perm = [0] * n
        perm[bottom], perm[top] = 0, n - 1
        for x, t in zip(interior, targets):
            perm[x] = t
        yield perm


def _canonical(tables: list[Table], bottom: int, top: int) -> tuple[bytes, list[int]]:
    n = len(tables[0])
    best, best_perm = None, None
    for perm in _perms(n, bottom, top):
        key = bytes([n] + [v for t in tables for v in _relabel(t, perm)])
        if best is None or key < best:
            best, best_perm = key, perm
    return best, best_perm


def canonical_key(rl: ResiduatedLattice) -> bytes:
    """Lexicographically least (join, meet, otimes) bundle over relabelings."""
    return _canonical([rl.join, rl.meet, rl.otimes], rl.bottom, rl.top)[0]


def lattice_key(lat: BoundedLattice) -> bytes:
    return _canonical([lat.join, lat.meet], lat.bottom, lat.top)[0]


def _apply(table: Table, perm) -> Table:
    n = len(table)
    flat = _relabel(table, perm)
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def canonical_form(rl: ResiduatedLattice, name: str = "") -> ResiduatedLattice:
    _, perm = _canonical([rl.join, rl.meet, rl.otimes], rl.bottom, rl.top)
    n = rl.n
    lat = BoundedLattice(default_tokens(n), _apply(rl.join, perm), _apply(rl.meet, perm), 0, n - 1)
    return ResiduatedLattice(lat, _apply(rl.otimes, perm), _apply(rl.arrow, perm), name or rl.name)


def is_isomorphic(a: ResiduatedLattice, b: ResiduatedLattice) -> bool:
    """Direct search for a bijection preserving join, meet and otimes."""
    if a.n != b.n:
        return False
    n = a.n
    ia = [x for x in range(n) if x not in (a.bottom, a.top)]
    ib = [x for x in range(n) if x not in (b.bottom, b.top)]
    for image in permutations(ib):
        f = {a.bottom: b.bottom, a.top: b.top, **dict(zip(ia, image))}
        if all(f[ta[x][y]] == tb[f[x]][f[y]]
               for ta, tb in ((a.join, b.join), (a.meet, b.meet), (a.otimes, b.otimes))
               for x in range(n) for y in range(n)):
            return True
    return False


# ------------------------------------------------------------ lattices


def _posets(k: int):
    """Strict orders on ``range(k)`` with ``i < j`` whenever i is below j."""
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for bits in product((False, True), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if all((i, l) in rel for (i, j) in rel for (j2, l) in rel if j == j2):
            yield rel


def enumerate_bounded_lattices(n: int) -> list[BoundedLattice]:
    """All bounded lattices of size ``n`` up to isomorphism, in canonical order."""
    if not 2 <= n <= MAX_SIZE:
        raise ValueError(f"size {n} outside 2..{MAX_SIZE}")
    k = n - 2
    found: dict[bytes, BoundedLattice] = {}
    for rel in _posets(k):
        leq = [[False] * n for _ in range(n)]
        for x in range(n):
            leq[0][x] = leq[x][n - 1] = leq[x][x] = True
        for i, j in rel:
            leq[i + 1][j + 1] = True
        try:
            lat = lattice_from_order(default_tokens(n), leq)
        except ValueError:
            continue
        key, perm = _canonical([lat.join, lat.meet], 0, n - 1)
        if key not in found:
            found[key] = BoundedLattice(default_tokens(n), _apply(lat.join, perm),
                                        _apply(lat.meet, perm), 0, n - 1)
    return [found[k] for k in sorted(found)]


# ------------------------------------------------------------ products


def _associative(t, n) -> bool:
    return all(t[t[x][y]][z] == t[x][t[y][z]]
               for x in range(n) for y in range(n) for z in range(n))


def enumerate_residuated(lattice: BoundedLattice) -> list[Table]:
    """Every commutative, associative, residuable product with unit top on ``lattice``."""
    n, le, meet = lattice.n, lattice.leq, lattice.meet
    bot, top = lattice.bottom, lattice.top
    interior = [x for x in range(n) if x not in (bot, top)]
    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[x][top] = t[top][x] = x
        t[x][bot] = t[bot][x] = bot
    slots = [(x, y) for i, x in enumerate(interior) for y in interior[i:]]
    results: list[Table] = []

    def consistent(x, y, v) -> bool:
        # monotone in each argument against every filled entry
        for p in range(n):
            for q in range(n):
                w = t[p][q]
                if w < 0:
                    continue
                if le[p][x] and le[q][y] and not le[w][v]:
                    return False
                if le[x][p] and le[y][q] and not le[v][w]:
                    return False
        return True

    def fill(k: int):
        if k == len(slots):
            if not _associative(t, n):
                return
            table = make_table(t)
            try:
                derive_arrow(lattice, table)
            except NoResiduum:
                return
            results.append(table)
            return
        x, y = slots[k]
        for v in range(n):
            if le[v][meet[x][y]] and consistent(x, y, v):
                t[x][y] = t[y][x] = v
                fill(k + 1)
                t[x][y] = t[y][x] = -1

    fill(0)
    return sorted(results)


def _residuated_on(lattice: BoundedLattice) -> list[tuple[bytes, ResiduatedLattice]]:
    out = []
    for table in enumerate_residuated(lattice):
        rl = residuated(lattice, table)
        out.append((canonical_key(rl), canonical_form(rl)))
    return out


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


# ------------------------------------------------------------ corpus


@dataclass
class Corpus:
    algebras: list[ResiduatedLattice] = field(default_factory=list)
    max_size: int = 0
    lattice_counts: dict[int, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.algebras)

    def __iter__(self):
        return iter(self.algebras)


def build_corpus(max_size: int = DEFAULT_SIZE, jobs: int = 1, min_size: int = 2) -> Corpus:
    """All residuated lattices of sizes ``min_size..max_size`` up to isomorphism.

    Work units are lattices; results are merged and sorted by (size, key), so
    output does not depend on ``jobs``.
    """
    if not 2 <= min_size <= max_size <= MAX_SIZE:
        raise ValueError(f"sizes must satisfy 2 <= min <= max <= {MAX_SIZE}")
    corpus = Corpus(max_size=max_size)
    for n in range(min_size, max_size + 1):
        lattices = enumerate_bounded_lattices(n)
        corpus.lattice_counts[n] = len(lattices)
        merged: dict[bytes, ResiduatedLattice] = {}
        for chunk in _map(_residuated_on, lattices, jobs):
            for key, rl in chunk:
                merged.setdefault(key, rl)
        for i, key in enumerate(sorted(merged), start=1):
            rl = merged[key]
            corpus.algebras.append(ResiduatedLattice(rl.lattice, rl.otimes, rl.arrow,
                                                     f"rl{n}_{i:03d}"))
    return corpus


SUITES = (
    "residuated lattice axioms",
    "otimes monotone",
    "residuum derivation reproduces arrow",
    "lemma suite",
    "negation image equals ~~-fixed points",
    "full carrier tieable under DNL",
    "Y(L,A) is a tied semiring for tieable A",
    "A(Y(L,A)) is a DNL residuated lattice",
    "C(L) is a general coupled semiring",
    "L(C(L)) = L",
    "C(L(C)) = C",
    "Y(L,L) = C(L) under DNL",
)


def verify_algebra(rl: ResiduatedLattice) -> dict:
    """Per-algebra outcome: ``{"failed": [suite, ...], flags...}``."""
    failed = []

    def run(name, fn):
        try:
            if not fn():
                failed.append(name)
        except Exception:  # noqa: BLE001  any exception is a finding for this suite
            failed.append(name)

    dnl = is_dnl(rl)
    run(SUITES[0], lambda: check_residuated(rl).ok)
    run(SUITES[1], lambda: check_monotone(rl).ok)
    run(SUITES[2], lambda: derive_arrow(rl.lattice, rl.otimes) == rl.arrow)
    run(SUITES[3], lambda: verify_lemma_suite(rl).ok)
    run(SUITES[4], lambda: (neg_fixed(rl) == tuple(range(rl.n))) == dnl)
    tieable = find_tieable(rl)
    run(SUITES[5], lambda: not dnl or tuple(range(rl.n)) in tieable)

    def tied_ok():
        return all(cp.check_tied(cp.tie(rl, A)).ok for A in tieable)

    def untied_ok():
        for A in tieable:
            y = cp.tie(rl, A)
            if not cp.check_untied(cp.untie(y), y).ok:
                return False
        return True

    run(SUITES[6], tied_ok)
    run(SUITES[7], untied_ok)
    if dnl:
        run(SUITES[8], lambda: cp.check_general_coupled(cp.couple(rl)).ok)
        run(SUITES[9], lambda: cp.roundtrip_lattice(rl).ok)
        run(SUITES[10], lambda: cp.roundtrip_coupled(cp.couple(rl)).ok)
        run(SUITES[11], lambda: cp.same_coupled(cp.couple(rl),
                                                cp.tie(rl, range(rl.n)).with_kind(cp.GENERAL)).ok)
    return {
        "name": rl.name,
        "failed": failed,
        "dnl": dnl,
        "prelinear": check_prelinearity(rl).ok,
        "divisible": check_divisibility(rl).ok,
        "neg_image_subuniverse": is_subuniverse(rl, neg_fixed(rl)),
        "tieable": len(tieable),
    }


@dataclass
class CorpusReport:
    report: CheckReport
    tallies: dict[str, int]
    outcomes: list[dict]


def verify_corpus(corpus: Corpus, jobs: int = 1) -> CorpusReport:
    outcomes = _map(verify_algebra, list(corpus.algebras), jobs)
    rep = CheckReport()
    for suite in SUITES:
        bad = [(o["name"],) for o in outcomes if suite in o["failed"]]
        rep.add(verdict(suite, ("algebra",), bad))
    tallies = {
        "total": len(outcomes),
        "dnl": sum(o["dnl"] for o in outcomes),
        "prelinear": sum(o["prelinear"] for o in outcomes),
        "divisible": sum(o["divisible"] for o in outcomes),
        "mv": sum(o["dnl"] and o["prelinear"] and o["divisible"] for o in outcomes),
        "neg_image_not_subuniverse": sum(not o["neg_image_subuniverse"] for o in outcomes),
        "failures": sum(len(o["failed"]) for o in outcomes),
    }
    return CorpusReport(rep, tallies, outcomes)


def manifest(corpus: Corpus, files: list[str] | None = None) -> str:
    """Deterministic JSON manifest: canonical keys plus tallies."""
    entries = []
    for i, rl in enumerate(corpus.algebras):
        entry = {"name": rl.name, "size": rl.n, "key": canonical_key(rl).hex(), "dnl": is_dnl(rl)}
        if files is not None:
            entry["file"] = files[i]
        entries.append(entry)
    sizes = {}
    for rl in corpus.algebras:
        sizes[str(rl.n)] = sizes.get(str(rl.n), 0) + 1
    doc = {
        "max_size": corpus.max_size,
        "lattices_per_size": {str(k): v for k, v in sorted(corpus.lattice_counts.items())},
        "algebras_per_size": sizes,
        "total": len(corpus.algebras),
        "algebras": entries,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"

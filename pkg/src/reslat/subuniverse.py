"""Subuniverses of residuated lattices and the search for tieable ones."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .core import ResiduatedLattice

Subuniverse = tuple[int, ...]

DEFAULT_CAP = 8

_OPS = ("join", "meet", "otimes", "arrow")


class CapExceeded(ValueError):
    pass


def closure_violations(rl: ResiduatedLattice, A: Iterable[int]) -> list[tuple]:
    """``(op, x, y)`` triples leaving ``A``, plus missing constants as ``(const, c, c)``."""
    A = sorted(set(A))
    inside = set(A)
    bad = [("constant", c, c) for c in (rl.bottom, rl.top) if c not in inside]
    for op in _OPS:
        t = getattr(rl, op)
        bad.extend((op, x, y) for x in A for y in A if t[x][y] not in inside)
    return bad


def is_subuniverse(rl: ResiduatedLattice, A: Iterable[int]) -> bool:
    return not closure_violations(rl, A)


def closure(rl: ResiduatedLattice, seed: Iterable[int] = ()) -> Subuniverse:
    """Smallest subuniverse containing ``seed`` and the constants."""
    current = set(seed) | {rl.bottom, rl.top}
    tables = [getattr(rl, op) for op in _OPS]
    frontier = True
    while frontier:
        new = {t[x][y] for t in tables for x in current for y in current} - current
        frontier = bool(new)
        current |= new
    return tuple(sorted(current))


def _guard(rl: ResiduatedLattice, cap: int):
    if rl.n > cap:
        raise CapExceeded(f"carrier size {rl.n} exceeds cap {cap}")


def enumerate_subuniverses(rl: ResiduatedLattice, cap: int = DEFAULT_CAP) -> list[Subuniverse]:
    """All subuniverses, ordered by (size, lexicographic)."""
    _guard(rl, cap)
    consts = sorted({rl.bottom, rl.top})
    rest = [x for x in range(rl.n) if x not in consts]
    found = []
    for k in range(len(rest) + 1):
        for extra in combinations(rest, k):
            A = tuple(sorted((*consts, *extra)))
            if is_subuniverse(rl, A):
                found.append(A)
    return sorted(found, key=lambda A: (len(A), A))


def neg_image(rl: ResiduatedLattice, A: Iterable[int]) -> Subuniverse:
    return tuple(sorted({rl.neg[x] for x in A}))


def neg_fixed(rl: ResiduatedLattice) -> Subuniverse:
    """``{~x}``; asserts it coincides with the fixed points of double negation."""
    image = neg_image(rl, range(rl.n))
    fixed = tuple(x for x in range(rl.n) if rl.neg[rl.neg[x]] == x)
    if image != fixed:
        raise AssertionError(f"image of negation {image} differs from ~~-fixed points {fixed}")
    return image


def is_tieable(rl: ResiduatedLattice, A: Subuniverse) -> bool:
    ng, ot, op = rl.neg, rl.otimes, rl.oplus
    return (is_subuniverse(rl, A) and is_subuniverse(rl, neg_image(rl, A))
            and all(ng[ot[x][y]] == op[ng[x]][ng[y]] for x in A for y in A))


def find_tieable(rl: ResiduatedLattice, cap: int = DEFAULT_CAP) -> list[Subuniverse]:
    return [A for A in enumerate_subuniverses(rl, cap) if is_tieable(rl, A)]

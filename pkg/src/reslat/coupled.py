"""Commutative semirings, general coupled semirings and tied semirings.

A :class:`CoupledStructure` holds two semirings over one element list ``A``:
the first on all of ``A`` with operations (join, product, 0, 1), the second on
a subset ``B`` with (meet, co-product, 1, 0), tied together by a unary map
``alpha``.  ``kind == "general"`` is the case ``B == A`` with ``alpha``
bijective.

The four constructions:

* :func:`couple`   residuated lattice with DNL  -> general coupled semiring
* :func:`decouple` general coupled semiring     -> residuated lattice with DNL
* :func:`tie`      residuated lattice + subuniverse -> tied semiring
* :func:`untie`    tied semiring                -> residuated lattice on ``B``
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import (
    FAIL, PASS, BoundedLattice, Check, CheckReport, ResiduatedLattice, StructureError, Table,
    check_double_negation, check_residuated, compare_map, compare_table, is_dnl, lattice_laws,
    law, make_table, residuated, restrict, same_algebra, verdict,
)

GENERAL, TIED = "general", "tied"


class DnlRequired(ValueError):
    pass


class InvalidCoupled(ValueError):
    def __init__(self, message: str, report: CheckReport):
        super().__init__(message)
        self.report = report


class InvalidTied(InvalidCoupled):
    pass


class ClosureFails(ValueError):
    def __init__(self, op: str, witness: tuple[int, int]):
        super().__init__(f"B is not closed under {op}: {witness}")
        self.op = op
        self.witness = witness


class NotSubuniverse(ValueError):
    pass


class NegNotSubuniverse(ValueError):
    pass


class DeMorganFails(ValueError):
    def __init__(self, witness: tuple[int, int]):
        super().__init__(f"~(x*y) != ~x + ~y at {witness}")
        self.witness = witness


@dataclass(frozen=True)
class Semiring:
    carrier: tuple[int, ...]
    add: Table
    mul: Table
    zero: int
    one: int


def check_semiring(s: Semiring, label: str = "") -> CheckReport:
    """Closure, two commutative monoids, distributivity and annihilation on ``s.carrier``."""
    a, m, dom = s.add, s.mul, s.carrier
    inside = set(dom)
    p = f"{label} " if label else ""
    rep = CheckReport()
    bad = [(x, y) for x in dom for y in dom if a[x][y] not in inside or m[x][y] not in inside]
    rep.add(verdict(p + "closure", "xy", bad))
    rep.add(verdict(p + "constants in carrier", ("constant",),
                    [(c,) for c in (s.zero, s.one) if c not in inside]))
    rep.add(law(p + "add commutative", "xy", dom, lambda x, y: a[x][y] == a[y][x]))
    rep.add(law(p + "add associative", "xyz", dom,
                lambda x, y, z: a[a[x][y]][z] == a[x][a[y][z]]))
    rep.add(law(p + "add identity", "x", dom, lambda x: a[s.zero][x] == x == a[x][s.zero]))
    rep.add(law(p + "mul commutative", "xy", dom, lambda x, y: m[x][y] == m[y][x]))
    rep.add(law(p + "mul associative", "xyz", dom,
                lambda x, y, z: m[m[x][y]][z] == m[x][m[y][z]]))
    rep.add(law(p + "mul identity", "x", dom, lambda x: m[s.one][x] == x == m[x][s.one]))
    rep.add(law(p + "distributivity", "xyz", dom,
                lambda x, y, z: m[x][a[y][z]] == a[m[x][y]][m[x][z]]))
    rep.add(law(p + "annihilation", "x", dom, lambda x: m[x][s.zero] == s.zero))
    return rep


@dataclass(frozen=True)
class CoupledStructure:
    elements: tuple[str, ...]
    first: Semiring
    second: Semiring
    alpha: tuple[int, ...]
    kind: str = GENERAL
    name: str = ""

    def __post_init__(self):
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise StructureError("element tokens are not distinct")
        if self.kind not in (GENERAL, TIED):
            raise StructureError(f"unknown kind {self.kind!r}")
        if tuple(self.first.carrier) != tuple(range(n)):
            raise StructureError("first semiring must live on the whole carrier")
        for s in (self.first, self.second):
            make_table(s.add, n), make_table(s.mul, n)
            if any(not 0 <= e < n for e in (*s.carrier, s.zero, s.one)):
                raise StructureError("semiring carrier or constant out of range")
        if len(self.alpha) != n or any(not 0 <= v < n for v in self.alpha):
            raise StructureError("alpha must map every element to an element")

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def B(self) -> tuple[int, ...]:
        return self.second.carrier

    @cached_property
    def leq(self):
        j = self.first.add
        return tuple(tuple(j[x][y] == y for y in range(self.n)) for x in range(self.n))

    def with_kind(self, kind: str) -> "CoupledStructure":
        return CoupledStructure(self.elements, self.first, self.second, self.alpha, kind, self.name)


def _alpha_checks(c: CoupledStructure) -> CheckReport:
    """alpha as a surjective homomorphism from the first semiring onto the second."""
    f, s, al = c.first, c.second, c.alpha
    A, B = f.carrier, c.B
    inB = set(B)
    rep = CheckReport()
    rep.add(verdict("alpha maps into B", "x", [(x,) for x in A if al[x] not in inB]))
    rep.add(verdict("alpha onto B", "y", [(y,) for y in B if y not in set(al)]))
    rep.add(law("alpha(x v y)=alpha(x) ^ alpha(y)", "xy", A,
                lambda x, y: al[f.add[x][y]] == s.add[al[x]][al[y]]))
    rep.add(law("alpha(x.y)=alpha(x) * alpha(y)", "xy", A,
                lambda x, y: al[f.mul[x][y]] == s.mul[al[x]][al[y]]))
    rep.add(verdict("alpha preserves constants", ("constant",),
                    [(k,) for k, img in ((f.zero, s.zero), (f.one, s.one)) if al[k] != img]))
    return rep


def _restricted_checks(c: CoupledStructure) -> CheckReport:
    f, s, al, B = c.first, c.second, c.alpha, c.B
    rep = CheckReport()
    rep.add(law("alpha|B(x ^ y)=alpha(x) v alpha(y)", "xy", B,
                lambda x, y: al[s.add[x][y]] == f.add[al[x]][al[y]]))
    rep.add(law("alpha|B(x * y)=alpha(x) . alpha(y)", "xy", B,
                lambda x, y: al[s.mul[x][y]] == f.mul[al[x]][al[y]]))
    rep.add(verdict("alpha|B preserves constants", ("constant",),
                    [(k,) for k, img in ((s.zero, f.zero), (s.one, f.one)) if al[k] != img]))
    return rep


def _common_checks(c: CoupledStructure) -> tuple[CheckReport, CheckReport]:
    rep = CheckReport(elements=c.elements)
    rep.extend(check_semiring(c.first, "semiring1"))
    rep.extend(check_semiring(c.second, "semiring2"))
    rep.add(verdict("B subset of A", ("y",), [(y,) for y in c.B if y not in c.first.carrier]))
    rep.extend(lattice_laws(c.first.add, c.second.add, c.first.carrier))
    return rep, _alpha_checks(c)


def _order_check(c: CoupledStructure, domain: Sequence[int]) -> Check:
    al, m2, le, top = c.alpha, c.second.mul, c.leq, c.first.one
    return law("x<=y iff alpha(x)*y=1", "xy", domain,
               lambda x, y: le[x][y] == (m2[al[x]][y] == top))


def _involution_check(c: CoupledStructure, domain: Sequence[int]) -> Check:
    al = c.alpha
    return law("alpha(alpha(x))=x", "x", domain, lambda x: al[al[x]] == x)


def check_general_coupled(c: CoupledStructure) -> CheckReport:
    rep, hom = _common_checks(c)
    rep.add(verdict("B equals A", ("x",), [(x,) for x in c.first.carrier if x not in c.B]))
    rep.extend(hom)
    rep.add(verdict("alpha bijective", ("y",),
                    [(y,) for y in range(c.n) if y not in set(c.alpha)]))
    rep.add(_involution_check(c, c.first.carrier))
    rep.add(_order_check(c, c.first.carrier))
    return rep


def check_tied(c: CoupledStructure) -> CheckReport:
    rep, hom = _common_checks(c)
    rep.extend(hom)
    rep.extend(_restricted_checks(c))
    rep.add(_involution_check(c, c.B))
    rep.add(_order_check(c, c.B))
    return rep


def check_coupled(c: CoupledStructure) -> CheckReport:
    return check_general_coupled(c) if c.kind == GENERAL else check_tied(c)


# ------------------------------------------------------------ constructions


def couple(rl: ResiduatedLattice) -> CoupledStructure:
    """((L, v, *, 0, 1), (L, ^, +, 1, 0), ~) for a residuated lattice with DNL."""
    if not is_dnl(rl):
        w = check_double_negation(rl).checks[0].witnesses
        raise DnlRequired(f"double negation law fails at {rl.elements[w[0][0]]}")
    carrier = tuple(range(rl.n))
    first = Semiring(carrier, rl.join, rl.otimes, rl.bottom, rl.top)
    second = Semiring(carrier, rl.meet, rl.oplus, rl.top, rl.bottom)
    return CoupledStructure(rl.elements, first, second, rl.neg, GENERAL, rl.name)


def _arrow(c: CoupledStructure, domain: Sequence[int]) -> Table:
    al, m2 = c.alpha, c.second.mul
    return tuple(tuple(m2[al[x]][y] for y in domain) for x in domain)


def decouple(c: CoupledStructure) -> ResiduatedLattice:
    """Residuated lattice with ``x -> y := alpha(x) * y``."""
    rep = check_general_coupled(c)
    if not rep.ok:
        raise InvalidCoupled("not a general coupled semiring", rep)
    lat = BoundedLattice(c.elements, c.first.add, c.second.add, c.first.zero, c.first.one)
    return residuated(lat, c.first.mul, _arrow(c, range(c.n)), name=c.name)


def same_coupled(a: CoupledStructure, b: CoupledStructure) -> CheckReport:
    rep = CheckReport(elements=a.elements)
    if a.elements != b.elements or a.B != b.B:
        rep.add(Check("carriers equal", FAIL, ("left", "right"),
                      ((a.elements, b.elements),) if a.elements != b.elements else ((a.B, b.B),)))
        return rep
    rep.add(Check("carriers equal", PASS))
    for label in ("first", "second"):
        sa, sb = getattr(a, label), getattr(b, label)
        for op in ("add", "mul"):
            rep.add(compare_table(f"{label}.{op} equal", getattr(sa, op), getattr(sb, op)))
        bad = [(k, getattr(sa, k), getattr(sb, k))
               for k in ("zero", "one") if getattr(sa, k) != getattr(sb, k)]
        rep.add(verdict(f"{label} constants equal", ("constant", "given", "derived"), bad))
    rep.add(compare_map("alpha equal", a.alpha, b.alpha))
    return rep


def roundtrip_lattice(rl: ResiduatedLattice) -> CheckReport:
    """decouple(couple(rl)) == rl, entry by entry."""
    return same_algebra(rl, decouple(couple(rl)))


def roundtrip_coupled(c: CoupledStructure) -> CheckReport:
    """couple(decouple(c)) == c, entry by entry."""
    return same_coupled(c, couple(decouple(c)))


def tie_preconditions(rl: ResiduatedLattice, A: Iterable[int]) -> CheckReport:
    from .subuniverse import closure_violations

    A = tuple(sorted(set(A)))
    negA = tuple(sorted({rl.neg[x] for x in A}))
    ng, ot, op = rl.neg, rl.otimes, rl.oplus
    rep = CheckReport(elements=rl.elements)
    rep.add(verdict("A is a subuniverse", ("op", "x", "y"), closure_violations(rl, A)))
    rep.add(verdict("~A is a subuniverse", ("op", "x", "y"), closure_violations(rl, negA)))
    rep.add(law("~(x*y)=~x+~y on A", "xy", A, lambda x, y: ng[ot[x][y]] == op[ng[x]][ng[y]]))
    return rep


def tie(rl: ResiduatedLattice, A: Iterable[int]) -> CoupledStructure:
    """((A, v, *, 0, 1), (~A, ^, +, 1, 0), ~) re-indexed locally on ``A``."""
    A = tuple(sorted(set(A)))
    pre = tie_preconditions(rl, A)
    if pre["A is a subuniverse"].failed:
        raise NotSubuniverse(f"{[rl.elements[x] for x in A]} is not a subuniverse")
    if pre["~A is a subuniverse"].failed:
        raise NegNotSubuniverse(f"~{[rl.elements[x] for x in A]} is not a subuniverse")
    dm = pre["~(x*y)=~x+~y on A"]
    if dm.failed:
        raise DeMorganFails(dm.witnesses[0])
    local = {e: i for i, e in enumerate(A)}
    first = Semiring(tuple(range(len(A))), restrict(rl.join, A), restrict(rl.otimes, A),
                     local[rl.bottom], local[rl.top])
    B = tuple(sorted(local[rl.neg[x]] for x in A if rl.neg[x] in local))
    second = Semiring(tuple(sorted(set(B))), restrict(rl.meet, A), restrict(rl.oplus, A),
                      local[rl.top], local[rl.bottom])
    alpha = tuple(local[rl.neg[x]] for x in A)
    return CoupledStructure(tuple(rl.elements[x] for x in A), first, second, alpha, TIED, rl.name)


def untie(c: CoupledStructure) -> ResiduatedLattice:
    """Residuated lattice on ``B`` with ``x -> y := alpha(x) * y`` and ``~ = alpha``."""
    rep = check_tied(c)
    if not rep.ok:
        raise InvalidTied("not a tied semiring", rep)
    B = c.B
    inB = set(B)
    for op, table in (("join", c.first.add), ("product", c.first.mul), ("meet", c.second.add)):
        for x in B:
            for y in B:
                if table[x][y] not in inB:
                    raise ClosureFails(op, (x, y))
    local = {e: i for i, e in enumerate(B)}
    lat = BoundedLattice(tuple(c.elements[x] for x in B), restrict(c.first.add, B),
                         restrict(c.second.add, B), local[c.first.zero], local[c.first.one])
    arrow = tuple(tuple(local[v] for v in row) for row in _arrow(c, B))
    return residuated(lat, restrict(c.first.mul, B), arrow, name=c.name)


def check_untied(rl: ResiduatedLattice, c: CoupledStructure) -> CheckReport:
    """Residuated + DNL checks on a constructed lattice, plus ``~x == alpha(x)`` on B."""
    rep = check_residuated(rl)
    rep.extend(check_double_negation(rl))
    local = {e: i for i, e in enumerate(c.B)}
    alpha_b = tuple(local.get(c.alpha[x], -1) for x in c.B)
    rep.add(compare_map("neg equals alpha", rl.neg, alpha_b))
    return rep


# ------------------------------------------------------------ file conversions


def to_coupled(af) -> CoupledStructure:
    """Coupled structure from a parsed ``coupled`` file."""
    if af.kind != "coupled":
        raise StructureError(f"expected a coupled file, got {af.kind!r}")
    n = af.n
    carrier = tuple(range(n))
    B = af.subset if af.subset is not None else carrier
    kind = af.coupled_kind or (TIED if af.subset is not None else GENERAL)
    t = af.tables
    first = Semiring(carrier, t["add1"], t["mul1"], af.bottom, af.top)
    second = Semiring(B, t["add2"], t["mul2"], af.top, af.bottom)
    return CoupledStructure(af.elements, first, second, af.maps["alpha"], kind, af.name)


def from_coupled(c: CoupledStructure, name: str | None = None):
    from .formats import AlgebraFile

    tables = {"add1": c.first.add, "mul1": c.first.mul, "add2": c.second.add, "mul2": c.second.mul}
    subset = c.B if c.kind == TIED else None
    return AlgebraFile("coupled", name or c.name or "coupled", c.elements, c.first.zero,
                       c.first.one, tables, {"alpha": c.alpha}, subset, c.kind)


def identity_alpha(c: CoupledStructure) -> CoupledStructure:
    return CoupledStructure(c.elements, c.first, c.second, tuple(range(c.n)), c.kind, c.name)

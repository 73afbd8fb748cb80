"""Finite bounded lattices and residuated lattices stored as operation tables.

Elements are indices ``0..n-1``; display tokens live only on the lattice and
are used for rendering.  Every check returns a :class:`CheckReport` whose
failing entries carry the violating tuples in ascending index order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Sequence

Table = tuple[tuple[int, ...], ...]

PASS, FAIL, SKIP = "pass", "fail", "skip"


class StructureError(ValueError):
    """Malformed input: bad dimensions, unknown elements, out-of-range entries."""


class AxiomError(ValueError):
    """Raised by constructors whose axioms fail; carries the failing report."""

    def __init__(self, message: str, report: "CheckReport"):
        super().__init__(message)
        self.report = report


class NoResiduum(ValueError):
    def __init__(self, y: int, z: int):
        super().__init__(f"no residuum for y={y}, z={z}")
        self.y = y
        self.z = z


def make_table(rows: Iterable[Iterable[int]], n: int | None = None) -> Table:
    table = tuple(tuple(int(v) for v in row) for row in rows)
    size = len(table) if n is None else n
    if len(table) != size:
        raise StructureError(f"table has {len(table)} rows, expected {size}")
    for r, row in enumerate(table):
        if len(row) != size:
            raise StructureError(f"row {r} has {len(row)} entries, expected {size}")
        for v in row:
            if not 0 <= v < size:
                raise StructureError(f"entry {v} in row {r} is not an element index")
    return table


def tabulate(n: int, fn: Callable[[int, int], int]) -> Table:
    return tuple(tuple(fn(x, y) for y in range(n)) for x in range(n))


def restrict(table: Table, carrier: Sequence[int]) -> Table:
    """Sub-table on ``carrier``, re-indexed locally.  Entries must stay inside."""
    local = {e: i for i, e in enumerate(carrier)}
    try:
        return tuple(tuple(local[table[x][y]] for y in carrier) for x in carrier)
    except KeyError as exc:
        raise StructureError(f"carrier not closed: {exc.args[0]} escapes") from None


# --------------------------------------------------------------------- reports


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    roles: tuple[str, ...] = ()
    witnesses: tuple[tuple, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL


@dataclass
class CheckReport:
    checks: list[Check] = field(default_factory=list)
    elements: tuple[str, ...] | None = None

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.checks.extend(other.checks)
        if self.elements is None:
            self.elements = other.elements
        return self

    @property
    def ok(self) -> bool:
        return not any(c.failed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.failed]

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def counts(self) -> dict[str, int]:
        out = {"passed": 0, "failed": 0, "skipped": 0}
        key = {PASS: "passed", FAIL: "failed", SKIP: "skipped"}
        for c in self.checks:
            out[key[c.status]] += 1
        return out


def law(name: str, roles: Sequence[str], domain: Sequence[int],
        holds: Callable[..., bool]) -> Check:
    """Quantify ``holds`` over ``domain ** len(roles)`` in lexicographic order."""
    bad = tuple(t for t in product(sorted(domain), repeat=len(roles)) if not holds(*t))
    return Check(name, FAIL if bad else PASS, tuple(roles), bad)


def verdict(name: str, roles: Sequence[str], witnesses: Iterable[tuple]) -> Check:
    bad = tuple(sorted(witnesses))
    return Check(name, FAIL if bad else PASS, tuple(roles), bad)


def skipped(name: str) -> Check:
    return Check(name, SKIP)


def compare_table(name: str, given: Table, derived: Table) -> Check:
    """Entry-wise comparison; witnesses are ``(x, y, given, derived)``."""
    n = len(derived)
    bad = [(x, y, given[x][y], derived[x][y])
           for x in range(n) for y in range(n) if given[x][y] != derived[x][y]]
    return verdict(name, ("x", "y", "given", "derived"), bad)


def compare_map(name: str, given: Sequence[int], derived: Sequence[int]) -> Check:
    bad = [(x, given[x], derived[x]) for x in range(len(derived)) if given[x] != derived[x]]
    return verdict(name, ("x", "given", "derived"), bad)


# --------------------------------------------------------------------- lattices


def lattice_laws(join: Table, meet: Table, domain: Sequence[int]) -> CheckReport:
    """Lattice identities for (domain, join, meet); used for Def.-style coupled checks too."""
    j, m = join, meet
    rep = CheckReport()
    rep.add(law("join commutative", "xy", domain, lambda x, y: j[x][y] == j[y][x]))
    rep.add(law("join associative", "xyz", domain,
                lambda x, y, z: j[j[x][y]][z] == j[x][j[y][z]]))
    rep.add(law("join idempotent", "x", domain, lambda x: j[x][x] == x))
    rep.add(law("meet commutative", "xy", domain, lambda x, y: m[x][y] == m[y][x]))
    rep.add(law("meet associative", "xyz", domain,
                lambda x, y, z: m[m[x][y]][z] == m[x][m[y][z]]))
    rep.add(law("meet idempotent", "x", domain, lambda x: m[x][x] == x))
    rep.add(law("absorption join-meet", "xy", domain, lambda x, y: j[x][m[x][y]] == x))
    rep.add(law("absorption meet-join", "xy", domain, lambda x, y: m[x][j[x][y]] == x))
    rep.add(law("order consistency", "xy", domain,
                lambda x, y: (j[x][y] == y) == (m[x][y] == x)))
    return rep


def check_lattice(join: Table, meet: Table, bottom: int, top: int) -> CheckReport:
    n = len(join)
    rep = lattice_laws(join, meet, range(n))
    rep.add(law("bottom neutral for join", "x", range(n), lambda x: join[bottom][x] == x))
    rep.add(law("top neutral for meet", "x", range(n), lambda x: meet[top][x] == x))
    return rep


@dataclass(frozen=True)
class BoundedLattice:
    elements: tuple[str, ...]
    join: Table
    meet: Table
    bottom: int
    top: int

    def __post_init__(self):
        n = len(self.elements)
        if n < 1:
            raise StructureError("empty carrier")
        if len(set(self.elements)) != n:
            raise StructureError("element tokens are not distinct")
        for name in ("join", "meet"):
            object.__setattr__(self, name, make_table(getattr(self, name), n))
        for name in ("bottom", "top"):
            if not 0 <= getattr(self, name) < n:
                raise StructureError(f"{name} is not an element index")

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, token: str) -> int:
        try:
            return self.elements.index(token)
        except ValueError:
            raise StructureError(f"unknown element {token!r}") from None

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(self.join[a][b] == b for b in range(self.n)) for a in range(self.n))

    def check(self) -> CheckReport:
        rep = check_lattice(self.join, self.meet, self.bottom, self.top)
        rep.elements = self.elements
        return rep


def build_lattice(elements, join, meet, bottom, top) -> BoundedLattice:
    """Validated lattice; raises :class:`AxiomError` with the failing report."""
    lat = BoundedLattice(tuple(elements), make_table(join), make_table(meet), bottom, top)
    rep = lat.check()
    if not rep.ok:
        raise AxiomError("not a bounded lattice", rep)
    return lat


def lattice_from_order(elements: Sequence[str], leq) -> BoundedLattice:
    """Bounded lattice from a partial-order matrix; raises StructureError if not a lattice."""
    n = len(elements)

    def least(cands):
        for c in cands:
            if all(leq[c][d] for d in cands):
                return c
        return None

    def greatest(cands):
        for c in cands:
            if all(leq[d][c] for d in cands):
                return c
        return None

    join, meet = [[0] * n for _ in range(n)], [[0] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        j = least([c for c in range(n) if leq[a][c] and leq[b][c]])
        m = greatest([c for c in range(n) if leq[c][a] and leq[c][b]])
        if j is None or m is None:
            raise StructureError(f"elements {a}, {b} lack a join or meet")
        join[a][b], meet[a][b] = j, m
    bottom = least(list(range(n)))
    top = greatest(list(range(n)))
    return BoundedLattice(tuple(elements), make_table(join), make_table(meet), bottom, top)


def chain(n: int, tokens: Sequence[str] | None = None) -> BoundedLattice:
    tokens = tokens or default_tokens(n)
    return BoundedLattice(tuple(tokens), tabulate(n, max), tabulate(n, min), 0, n - 1)


def default_tokens(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("0",)
    return ("0", *"abcdefghijklmnopqrstuvwxyz"[: n - 2], "1")


# --------------------------------------------------------------------- residuated


def check_commutative_monoid(table: Table, unit: int,
                             domain: Sequence[int] | None = None, label: str = "") -> CheckReport:
    t = table
    dom = range(len(t)) if domain is None else domain
    p = f"{label} " if label else ""
    rep = CheckReport()
    rep.add(law(p + "commutative", "xy", dom, lambda x, y: t[x][y] == t[y][x]))
    rep.add(law(p + "associative", "xyz", dom, lambda x, y, z: t[t[x][y]][z] == t[x][t[y][z]]))
    rep.add(law(p + "unit", "x", dom, lambda x: t[unit][x] == x and t[x][unit] == x))
    return rep


def derive_arrow(lattice: BoundedLattice, otimes: Table) -> Table:
    """Residuum of ``otimes``: ``arrow[y][z]`` is the greatest x with ``x*y <= z``.

    The candidates must form the whole down-set of their maximum; a maximum
    alone is not enough when ``otimes`` is not monotone.
    """
    n, le = lattice.n, lattice.leq
    rows = []
    for y in range(n):
        row = []
        for z in range(n):
            cands = [x for x in range(n) if le[otimes[x][y]][z]]
            top = [c for c in cands if all(le[d][c] for d in cands)]
            if not top or sum(le[x][top[0]] for x in range(n)) != len(cands):
                raise NoResiduum(y, z)
            row.append(top[0])
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class ResiduatedLattice:
    lattice: BoundedLattice
    otimes: Table
    arrow: Table
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "otimes", make_table(self.otimes, self.n))
        object.__setattr__(self, "arrow", make_table(self.arrow, self.n))

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def elements(self) -> tuple[str, ...]:
        return self.lattice.elements

    @property
    def join(self) -> Table:
        return self.lattice.join

    @property
    def meet(self) -> Table:
        return self.lattice.meet

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def leq(self):
        return self.lattice.leq

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(self.arrow[x][self.bottom] for x in range(self.n))

    @cached_property
    def oplus(self) -> Table:
        ng, ot = self.neg, self.otimes
        return tabulate(self.n, lambda x, y: ng[ot[ng[x]][ng[y]]])

    def tables(self) -> dict[str, Table]:
        return {"join": self.join, "meet": self.meet, "otimes": self.otimes, "arrow": self.arrow}


def residuated(lattice: BoundedLattice, otimes, arrow=None, name: str = "") -> ResiduatedLattice:
    """Assemble a residuated lattice, deriving the residuum when ``arrow`` is omitted."""
    otimes = make_table(otimes, lattice.n)
    if arrow is None:
        arrow = derive_arrow(lattice, otimes)
    return ResiduatedLattice(lattice, otimes, make_table(arrow, lattice.n), name)


def derive_negation_ops(rl: ResiduatedLattice) -> tuple[tuple[int, ...], Table]:
    return rl.neg, rl.oplus


def check_adjointness(rl: ResiduatedLattice) -> CheckReport:
    le, ot, ar = rl.leq, rl.otimes, rl.arrow
    dom = range(rl.n)
    rep = CheckReport(elements=rl.elements)
    rep.add(law("adjointness x<=y->z implies x*y<=z", "xyz", dom,
                lambda x, y, z: not le[x][ar[y][z]] or le[ot[x][y]][z]))
    rep.add(law("adjointness x*y<=z implies x<=y->z", "xyz", dom,
                lambda x, y, z: not le[ot[x][y]][z] or le[x][ar[y][z]]))
    return rep


def check_monotone(rl: ResiduatedLattice) -> CheckReport:
    le, ot = rl.leq, rl.otimes
    rep = CheckReport(elements=rl.elements)
    rep.add(law("otimes monotone", "xyz", range(rl.n),
                lambda x, y, z: not le[x][y] or le[ot[x][z]][ot[y][z]]))
    return rep


def check_residuated(rl: ResiduatedLattice) -> CheckReport:
    """Bounded lattice, commutative monoid (otimes, top), adjointness."""
    rep = rl.lattice.check()
    rep.extend(check_commutative_monoid(rl.otimes, rl.top, label="otimes"))
    rep.extend(check_adjointness(rl))
    return rep


def check_double_negation(rl: ResiduatedLattice) -> CheckReport:
    ng = rl.neg
    return CheckReport([law("double negation", "x", range(rl.n), lambda x: ng[ng[x]] == x)],
                       rl.elements)


def check_prelinearity(rl: ResiduatedLattice) -> CheckReport:
    j, ar, top = rl.join, rl.arrow, rl.top
    return CheckReport([law("prelinearity", "xy", range(rl.n),
                            lambda x, y: j[ar[x][y]][ar[y][x]] == top)], rl.elements)


def check_divisibility(rl: ResiduatedLattice) -> CheckReport:
    ot, ar, m = rl.otimes, rl.arrow, rl.meet
    return CheckReport([law("divisibility", "xy", range(rl.n),
                            lambda x, y: ot[x][ar[x][y]] == m[x][y])], rl.elements)


def check_mv(rl: ResiduatedLattice) -> CheckReport:
    rep = check_double_negation(rl)
    rep.extend(check_prelinearity(rl)).extend(check_divisibility(rl))
    bad = [(c.name,) for c in rep.checks if c.failed]
    rep.add(verdict("mv-algebra", ("failed subcheck",), bad))
    return rep


def is_dnl(rl: ResiduatedLattice) -> bool:
    return check_double_negation(rl).ok


def verify_lemma_suite(rl: ResiduatedLattice) -> CheckReport:
    """Elementary identities of residuated lattices; the DNL-only ones are skipped otherwise."""
    n, le, j, m = rl.n, rl.leq, rl.join, rl.meet
    ot, ar, ng, op = rl.otimes, rl.arrow, rl.neg, rl.oplus
    bot, top = rl.bottom, rl.top
    dom = range(n)
    rep = CheckReport(elements=rl.elements)
    rep.add(law("identity a<=b iff a->b=1", "ab", dom, lambda a, b: le[a][b] == (ar[a][b] == top)))
    rep.add(law("identity a->1=1", "a", dom, lambda a: ar[a][top] == top))
    rep.add(law("identity a*0=0", "a", dom, lambda a: ot[a][bot] == bot))
    rep.add(law("identity a*(b v c)=(a*b) v (a*c)", "abc", dom,
                lambda a, b, c: ot[a][j[b][c]] == j[ot[a][b]][ot[a][c]]))
    rep.add(law("identity a->b=((a->b)->b)->b", "ab", dom,
                lambda a, b: ar[a][b] == ar[ar[ar[a][b]][b]][b]))
    rep.add(law("identity ~~~a=~a", "a", dom, lambda a: ng[ng[ng[a]]] == ng[a]))
    rep.add(law("identity ~0=1", (), dom, lambda: ng[bot] == top))
    rep.add(law("identity ~1=0", (), dom, lambda: ng[top] == bot))
    rep.add(law("identity ~(a v b)=~a ^ ~b", "ab", dom,
                lambda a, b: ng[j[a][b]] == m[ng[a]][ng[b]]))
    dnl_items = [
        ("identity a->b=~(a*~b)", "ab", lambda a, b: ar[a][b] == ng[ot[a][ng[b]]]),
        ("identity a*b=~(~a+~b)", "ab", lambda a, b: ot[a][b] == ng[op[ng[a]][ng[b]]]),
        ("identity ~(a ^ b)=~a v ~b", "ab", lambda a, b: ng[m[a][b]] == j[ng[a]][ng[b]]),
        ("identity a->b=~a+b", "ab", lambda a, b: ar[a][b] == op[ng[a]][b]),
    ]
    dnl = is_dnl(rl)
    for name, roles, holds in dnl_items:
        rep.add(law(name, roles, dom, holds) if dnl else skipped(name))
    return rep


def full_report(rl: ResiduatedLattice) -> CheckReport:
    """Every check applicable to a single residuated lattice."""
    rep = check_residuated(rl)
    rep.extend(check_monotone(rl))
    rep.extend(check_mv(rl))
    rep.extend(verify_lemma_suite(rl))
    return rep


def same_algebra(a: ResiduatedLattice, b: ResiduatedLattice) -> CheckReport:
    """Entry-wise equality of all operations and constants over identical element lists."""
    rep = CheckReport(elements=a.elements)
    if a.elements != b.elements:
        rep.add(Check("elements equal", FAIL, ("left", "right"), ((a.elements, b.elements),)))
        return rep
    rep.add(Check("elements equal", PASS))
    for name in ("join", "meet", "otimes", "arrow"):
        rep.add(compare_table(f"{name} equal", getattr(a, name), getattr(b, name)))
    for name in ("bottom", "top"):
        x, y = getattr(a, name), getattr(b, name)
        rep.add(verdict(f"{name} equal", ("given", "derived"), [] if x == y else [(x, y)]))
    return rep

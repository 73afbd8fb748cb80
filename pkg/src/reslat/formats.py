"""Line-oriented text format for algebras and coupled structures.

::

    algebra ex3
    elements 0 a 1
    bottom 0
    top 1
    table join
    0 a 1
    a a 1
    1 1 1
    ...
    end

Coupled structures start with ``coupled <name>``, carry tables ``add1 mul1
add2 mul2``, a ``map alpha`` row, and optionally ``subset B <tokens>`` and
``kind general|tied``.  ``bottom``/``top`` name the shared constants 0 and 1.
Parsing is structural only; axioms are checked elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import BoundedLattice, ResiduatedLattice, StructureError, Table, residuated

ALGEBRA_TABLES = ("join", "meet", "otimes", "arrow", "oplus")
ALGEBRA_REQUIRED = ("join", "meet", "otimes")
ALGEBRA_MAPS = ("neg",)
COUPLED_TABLES = ("add1", "mul1", "add2", "mul2")
COUPLED_MAPS = ("alpha",)


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class AlgebraFile:
    kind: str
    name: str
    elements: tuple[str, ...] = ()
    bottom: int | None = None
    top: int | None = None
    tables: dict[str, Table] = field(default_factory=dict)
    maps: dict[str, tuple[int, ...]] = field(default_factory=dict)
    subset: tuple[int, ...] | None = None
    coupled_kind: str | None = None

    @property
    def n(self) -> int:
        return len(self.elements)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def parse_algebra_file(text: str) -> AlgebraFile:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty file")
    no, head = lines[0]
    if head[0] not in ("algebra", "coupled") or len(head) != 2:
        raise ParseError(no, "expected 'algebra <name>' or 'coupled <name>'")
    af = AlgebraFile(kind=head[0], name=head[1])
    coupled = af.kind == "coupled"
    table_names = COUPLED_TABLES if coupled else ALGEBRA_TABLES
    map_names = COUPLED_MAPS if coupled else ALGEBRA_MAPS
    index: dict[str, int] = {}

    def token(no: int, tok: str) -> int:
        if tok not in index:
            raise ParseError(no, f"unknown token {tok!r}")
        return index[tok]

    def need_elements(no: int):
        if not index:
            raise ParseError(no, "'elements' must precede this line")

    def row(no: int, toks: list[str]) -> tuple[int, ...]:
        if len(toks) != af.n:
            raise ParseError(no, f"row has {len(toks)} entries, expected {af.n}")
        return tuple(token(no, t) for t in toks)

    i, ended = 1, False
    while i < len(lines):
        no, toks = lines[i]
        i += 1
        key, args = toks[0], toks[1:]
        if ended:
            raise ParseError(no, "content after 'end'")
        if key == "end" and not args:
            ended = True
        elif key == "elements":
            if index:
                raise ParseError(no, "duplicate 'elements'")
            if not args or len(set(args)) != len(args):
                raise ParseError(no, "element tokens must be non-empty and distinct")
            af.elements = tuple(args)
            index = {t: k for k, t in enumerate(args)}
        elif key in ("bottom", "top") and len(args) == 1:
            need_elements(no)
            setattr(af, key, token(no, args[0]))
        elif coupled and key == "subset" and args[:1] == ["B"]:
            need_elements(no)
            af.subset = tuple(sorted({token(no, t) for t in args[1:]}))
        elif coupled and key == "kind" and len(args) == 1 and args[0] in ("general", "tied"):
            af.coupled_kind = args[0]
        elif key in ("table", "map") and len(args) == 1:
            need_elements(no)
            name = args[0]
            allowed = table_names if key == "table" else map_names
            if name not in allowed:
                raise ParseError(no, f"unknown {key} {name!r}")
            if name in af.tables or name in af.maps:
                raise ParseError(no, f"duplicate {key} {name!r}")
            rows_needed = af.n if key == "table" else 1
            rows = []
            for _ in range(rows_needed):
                if i >= len(lines):
                    raise ParseError(no, f"{key} {name!r} truncated")
                rno, rtoks = lines[i]
                i += 1
                rows.append(row(rno, rtoks))
            if key == "table":
                af.tables[name] = tuple(rows)
            else:
                af.maps[name] = rows[0]
        else:
            raise ParseError(no, f"unrecognised line {' '.join(toks)!r}")
    last = lines[-1][0]
    if not ended:
        raise ParseError(last, "missing 'end'")
    if not af.elements:
        raise ParseError(last, "missing 'elements'")
    for key in ("bottom", "top"):
        if getattr(af, key) is None:
            raise ParseError(last, f"missing '{key}'")
    required = COUPLED_TABLES if coupled else ALGEBRA_REQUIRED
    for name in required:
        if name not in af.tables:
            raise ParseError(last, f"missing required table {name!r}")
    if coupled and "alpha" not in af.maps:
        raise ParseError(last, "missing required map 'alpha'")
    return af


def _render_row(elements, row, width) -> str:
    return " ".join(elements[v].ljust(width) for v in row).rstrip()


def render_algebra_file(af: AlgebraFile) -> str:
    els = af.elements
    width = max(len(t) for t in els)
    out = [f"{af.kind} {af.name}", "elements " + " ".join(els),
           f"bottom {els[af.bottom]}", f"top {els[af.top]}"]
    if af.subset is not None:
        out.append("subset B " + " ".join(els[k] for k in af.subset))
    if af.coupled_kind is not None:
        out.append(f"kind {af.coupled_kind}")
    order = COUPLED_TABLES if af.kind == "coupled" else ALGEBRA_TABLES
    for name in order:
        if name in af.tables:
            out.append(f"table {name}")
            out.extend(_render_row(els, r, width) for r in af.tables[name])
    for name, row in af.maps.items():
        out.append(f"map {name}")
        out.append(_render_row(els, row, width))
    out.append("end")
    return "\n".join(out) + "\n"


# ------------------------------------------------------------ conversions


def to_residuated(af: AlgebraFile) -> ResiduatedLattice:
    """Residuated lattice from a parsed file; derives the arrow when absent.

    Raises :class:`~reslat.core.NoResiduum` if the arrow is absent and cannot be derived.
    """
    if af.kind != "algebra":
        raise StructureError(f"expected an algebra file, got {af.kind!r}")
    lat = BoundedLattice(af.elements, af.tables["join"], af.tables["meet"], af.bottom, af.top)
    return residuated(lat, af.tables["otimes"], af.tables.get("arrow"), name=af.name)


def from_residuated(rl: ResiduatedLattice, name: str | None = None, *,
                    arrow: bool = True, derived: bool = False) -> AlgebraFile:
    tables = {"join": rl.join, "meet": rl.meet, "otimes": rl.otimes}
    maps = {}
    if arrow:
        tables["arrow"] = rl.arrow
    if derived:
        tables["oplus"] = rl.oplus
        maps["neg"] = rl.neg
    return AlgebraFile("algebra", name or rl.name or "algebra", rl.elements,
                       rl.bottom, rl.top, tables, maps)


def render_algebra(rl: ResiduatedLattice, name: str | None = None, **kw) -> str:
    return render_algebra_file(from_residuated(rl, name, **kw))

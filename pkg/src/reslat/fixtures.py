"""The three worked examples as algebra files.

``EX2`` keeps join, meet, otimes and arrow exactly as printed; negation and
oplus are never stored, they are derived.  The printed oplus tables are kept
separately so they can be compared against the derivation.
"""

from __future__ import annotations

from .core import ResiduatedLattice, make_table
from .formats import parse_algebra_file, to_residuated

# Six-element MV-algebra (the basic algebra L1 read as a residuated lattice L2).
EX1 = """\
algebra ex1
elements 0 a ~a b ~b 1
bottom 0
top 1
table join
0  a  ~a b  ~b 1
a  a  1  ~b ~b 1
~a 1  ~a ~a 1  1
b  ~b ~a b  ~b 1
~b ~b 1  ~b ~b 1
1  1  1  1  1  1
table meet
0 0 0  0 0  0
0 a 0  0 a  a
0 0 ~a b b  ~a
0 0 b  b b  b
0 a b  b ~b ~b
0 a ~a b ~b 1
table otimes
0 0 0  0 0  0
0 a 0  0 a  a
0 0 ~a b b  ~a
0 0 b  0 0  b
0 a b  0 a  ~b
0 a ~a b ~b 1
table arrow
1  1  1  1  1  1
~a 1  ~a ~a 1  1
a  a  1  ~b ~b 1
~b ~b 1  1  1  1
b  ~b ~a ~a 1  1
0  a  ~a b  ~b 1
end
"""

# Six-element lattice 0 < a < b, c < d < 1; DNL but neither prelinear nor divisible.
EX2 = """\
algebra ex2
elements 0 a b c d 1
bottom 0
top 1
table join
0 a b c d 1
a a b c d 1
b b b d d 1
c c d c d 1
d d d d d 1
1 1 1 1 1 1
table meet
0 0 0 0 0 0
0 a a a a a
0 a b a b b
0 a a c c c
0 a b c d d
0 a b c d 1
table otimes
0 0 0 0 0 0
0 0 0 0 0 a
0 0 b 0 b b
0 0 0 c c c
0 0 b c d d
0 a b c d 1
table arrow
1 1 1 1 1 1
d 1 1 1 1 1
c c 1 c 1 1
b b b 1 1 1
a a b c 1 1
0 a b c d 1
end
"""

# Three-element Goedel chain; fails the double negation law.
EX3 = """\
algebra ex3
elements 0 a 1
bottom 0
top 1
table join
0 a 1
a a 1
1 1 1
table meet
0 0 0
0 a a
0 a 1
table otimes
0 0 0
0 a a
0 a 1
table arrow
1 1 1
0 1 1
0 a 1
end
"""

FIXTURES = {"ex1": EX1, "ex2": EX2, "ex3": EX3}

# Index order 0 a b c d 1.  Entry (b, c) is printed as c.
EX2_PRINTED_OPLUS = make_table([
    [0, 1, 2, 3, 4, 5],
    [1, 1, 2, 3, 5, 5],
    [2, 2, 2, 3, 5, 5],
    [3, 3, 5, 3, 5, 5],
    [4, 5, 5, 5, 5, 5],
    [5, 5, 5, 5, 5, 5],
])
EX2_PRINTED_NEG = (5, 4, 3, 2, 1, 0)

# Index order 0 a ~a b ~b 1; the oplus of the basic algebra L1.
EX1_PRINTED_OPLUS = make_table([
    [0, 1, 2, 3, 4, 5],
    [1, 1, 5, 4, 4, 5],
    [2, 5, 2, 2, 5, 5],
    [3, 4, 2, 2, 5, 5],
    [4, 4, 5, 5, 5, 5],
    [5, 5, 5, 5, 5, 5],
])
EX1_PRINTED_NEG = (5, 2, 1, 4, 3, 0)

EX3_PRINTED_NEG = (2, 0, 0)
EX3_PRINTED_OPLUS = make_table([[0, 2, 2], [2, 2, 2], [2, 2, 2]])


def load(name: str) -> ResiduatedLattice:
    return to_residuated(parse_algebra_file(FIXTURES[name]))


def example1() -> ResiduatedLattice:
    return load("ex1")


def example2() -> ResiduatedLattice:
    return load("ex2")


def example3() -> ResiduatedLattice:
    return load("ex3")

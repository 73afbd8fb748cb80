import pytest
from hypothesis import given, strategies as st

from reslat import coupled as cp
from reslat.core import chain, check_double_negation, residuated, tabulate
from reslat.search import build_corpus
from reslat.subuniverse import (
    CapExceeded, closure, enumerate_subuniverses, find_tieable, is_tieable, neg_fixed,
)

import oracles

CORPUS = build_corpus(5)


def ids(rl, *tokens):
    return tuple(sorted(rl.elements.index(t) for t in tokens))


def scan(rl):
    return oracles.subuniverses_by_scan(rl.n, [rl.join, rl.meet, rl.otimes, rl.arrow],
                                        rl.bottom, rl.top)


def test_closure_examples(ex1, ex2):
    assert closure(ex1, [ex1.elements.index("a")]) == ids(ex1, "0", "a", "~a", "1")
    assert closure(ex1, []) == (0, 5)
    assert closure(ex2, [2]) == tuple(range(6))


def test_enumerate_two_chain():
    rl = residuated(chain(2), tabulate(2, min))
    assert enumerate_subuniverses(rl) == [(0, 1)]


def test_enumerate_example1_against_scan(ex1):
    subs = enumerate_subuniverses(ex1)
    assert subs == scan(ex1)
    assert ids(ex1, "0", "1") in subs
    assert ids(ex1, "0", "a", "~a", "1") in subs
    assert tuple(range(6)) in subs
    # {0, b, ~b, 1} is not closed: ~b * ~b = a
    assert ids(ex1, "0", "b", "~b", "1") not in subs
    nb = ex1.elements.index("~b")
    assert ex1.otimes[nb][nb] == ex1.elements.index("a")


def test_enumerate_example3(ex3):
    assert enumerate_subuniverses(ex3) == [(0, 2), (0, 1, 2)] == scan(ex3)


def test_cap_exceeded(ex2):
    with pytest.raises(CapExceeded):
        enumerate_subuniverses(ex2, cap=5)
    with pytest.raises(CapExceeded):
        find_tieable(ex2, cap=5)


def test_neg_fixed(ex1, ex2, ex3):
    assert neg_fixed(ex3) == (0, 2)
    assert neg_fixed(ex2) == tuple(range(6))
    assert neg_fixed(ex1) == tuple(range(6))


def test_find_tieable(ex1, ex3):
    assert ids(ex1, "0", "a", "~a", "1") in find_tieable(ex1)
    assert (0, 1, 2) in find_tieable(ex3)
    assert find_tieable(residuated(chain(2), tabulate(2, min))) == [(0, 1)]


@pytest.mark.parametrize("rl", CORPUS.algebras, ids=lambda r: r.name)
def test_subuniverse_properties_over_corpus(rl):
    subs = enumerate_subuniverses(rl)
    assert subs == scan(rl)
    assert subs[0] == tuple(sorted({rl.bottom, rl.top}))
    assert subs[-1] == tuple(range(rl.n))
    tieable = find_tieable(rl)
    for A in subs:
        try:
            y = cp.tie(rl, A)
        except (cp.NotSubuniverse, cp.NegNotSubuniverse, cp.DeMorganFails):
            assert A not in tieable
        else:
            assert A in tieable
            assert cp.check_tied(y).ok
    dnl = check_double_negation(rl).ok
    if dnl:
        assert tuple(range(rl.n)) in tieable
    assert (neg_fixed(rl) == tuple(range(rl.n))) == dnl


@given(st.sampled_from(CORPUS.algebras), st.data())
def test_closure_operator_laws(rl, data):
    elems = st.sets(st.integers(0, rl.n - 1))
    s, t = data.draw(elems), data.draw(elems)
    cs = closure(rl, s)
    assert set(s) <= set(cs)
    assert closure(rl, cs) == cs
    assert set(cs) <= set(closure(rl, s | t))
    assert cs in enumerate_subuniverses(rl)


def test_negation_image_not_always_a_subuniverse():
    # exploratory: the corpus up to size 5 contains algebras whose negation image is not closed
    found = [rl for rl in CORPUS if not is_tieable(rl, tuple(range(rl.n)))
             and not set(closure(rl, neg_fixed(rl))) == set(neg_fixed(rl))]
    assert found
    assert all(not check_double_negation(rl).ok for rl in found)

import pytest

from reslat import fixtures
from reslat.core import (
    AxiomError, BoundedLattice, NoResiduum, StructureError, build_lattice, chain,
    check_adjointness, check_commutative_monoid, check_divisibility, check_double_negation,
    check_monotone, check_mv, check_prelinearity, check_residuated, derive_arrow,
    derive_negation_ops, make_table, residuated, tabulate, verify_lemma_suite,
)

import oracles

O, A, B, C, D, I = range(6)  # ex2 element order 0 a b c d 1


def boolean2():
    return residuated(chain(2), tabulate(2, min))


def diamond():
    # 0 x y 1 with x, y incomparable
    join = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]]
    meet = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
    return build_lattice(("0", "x", "y", "1"), join, meet, 0, 3)


# ------------------------------------------------------------ lattices


def test_example2_lattice_is_valid(ex2):
    lat = build_lattice(ex2.elements, ex2.join, ex2.meet, 0, 5)
    assert lat.leq[A][D] and lat.leq[B][D] and not lat.leq[B][C] and not lat.leq[C][B]
    assert lat.join[B][C] == D and lat.meet[B][C] == A


def test_two_chain_is_valid():
    lat = build_lattice(("0", "1"), [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)
    assert lat.check().ok


def test_order_consistency_violation():
    join = [[0, 1, 2, 3], [1, 1, 2, 3], [2, 2, 2, 3], [3, 3, 3, 3]]
    meet = [[0, 0, 0, 0], [0, 1, 2, 1], [0, 2, 2, 2], [0, 1, 2, 3]]
    with pytest.raises(AxiomError) as info:
        build_lattice(("0", "a", "b", "1"), join, meet, 0, 3)
    check = info.value.report["order consistency"]
    assert check.failed
    assert check.witnesses[0] == (1, 2)


def test_dimension_mismatch_is_structural():
    with pytest.raises(StructureError):
        build_lattice(("0", "a", "1"), [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)
    with pytest.raises(StructureError):
        make_table([[0, 1], [1]])
    with pytest.raises(StructureError):
        BoundedLattice(("0", "0"), ((0, 1), (1, 1)), ((0, 0), (0, 1)), 0, 1)


# ------------------------------------------------------------ monoid / adjointness


def test_example2_otimes_is_commutative_monoid(ex2):
    assert check_commutative_monoid(ex2.otimes, I).ok


def test_join_is_monoid_with_bottom(ex2):
    assert check_commutative_monoid(ex2.join, O).ok


def test_wrong_unit_fails_with_first_witness(ex2):
    rep = check_commutative_monoid(ex2.otimes, D)
    unit = [c for c in rep.checks if c.name.endswith("unit")][0]
    assert unit.failed
    assert unit.witnesses[0] == (A,)


@pytest.mark.parametrize("name", ["ex1", "ex2", "ex3"])
def test_fixtures_are_residuated(name):
    assert check_residuated(fixtures.load(name)).ok


def test_adjointness_detects_altered_arrow(ex2):
    arrow = [list(r) for r in ex2.arrow]
    arrow[D][B] = C
    bad = residuated(ex2.lattice, ex2.otimes, arrow)
    rep = check_adjointness(bad)
    assert not rep.ok
    # oracle: independent scan with the altered table
    le = oracles.order_from_join(ex2.join)
    expected = [(x, y, z) for x in range(6) for y in range(6) for z in range(6)
                if le[x][arrow[y][z]] != le[ex2.otimes[x][y]][z]]
    found = sorted(w for c in rep.failures() for w in c.witnesses)
    assert found == expected
    assert found[0] == (B, D, B)


# ------------------------------------------------------------ derived operations


def test_derive_arrow_matches_printed_example2(ex2):
    derived = derive_arrow(ex2.lattice, ex2.otimes)
    printed = fixtures.load("ex2").arrow
    assert sum(derived[y][z] == printed[y][z] for y in range(6) for z in range(6)) == 36


def test_derive_arrow_matches_printed_example3(ex3):
    derived = derive_arrow(ex3.lattice, ex3.otimes)
    assert derived == ex3.arrow
    assert derived[1][0] == 0 and derived[2][1] == 1


@pytest.mark.parametrize("name", ["ex1", "ex2", "ex3"])
def test_derive_arrow_matches_adjointness_oracle(name):
    rl = fixtures.load(name)
    assert [list(r) for r in derive_arrow(rl.lattice, rl.otimes)] == \
        oracles.arrow_oracle(rl.join, rl.otimes)


def test_no_residuum_on_diamond():
    lat = diamond()
    otimes = [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
    # oracle: candidate set {z : z*x <= 0}
    le = oracles.order_from_join(lat.join)
    cands = [z for z in range(4) if le[otimes[z][1]][0]]
    assert cands == [0, 1, 2]
    assert not any(all(le[c][m] for c in cands) for m in cands)
    with pytest.raises(NoResiduum) as info:
        derive_arrow(lat, otimes)
    assert (info.value.y, info.value.z) == (1, 0)


def test_maximum_without_downset_is_not_a_residuum():
    # 3-chain with a*a = 1: candidates for (a, a) are {0, 1}, a maximum but not a down-set
    lat = chain(3)
    otimes = [[0, 0, 0], [0, 2, 1], [0, 1, 2]]
    assert check_commutative_monoid(otimes, 2).ok
    assert oracles.residuum_by_adjointness(lat.join, otimes, 1, 1) is None
    with pytest.raises(NoResiduum):
        derive_arrow(lat, otimes)


def test_example2_negation_and_oplus(ex2):
    neg, oplus = derive_negation_ops(ex2)
    assert neg == (I, D, C, B, A, O)
    assert neg == fixtures.EX2_PRINTED_NEG
    assert oplus[A][D] == I and oplus[B][D] == I and oplus[C][C] == C
    assert oplus[B][C] == I  # printed as c in the worked example
    assert all(oplus[x][y] == oplus[y][x] for x in range(6) for y in range(6))


def test_printed_neg_and_oplus_of_other_examples(ex1, ex3):
    assert ex1.neg == fixtures.EX1_PRINTED_NEG
    assert ex1.oplus == fixtures.EX1_PRINTED_OPLUS
    assert ex3.neg == fixtures.EX3_PRINTED_NEG
    assert ex3.oplus == fixtures.EX3_PRINTED_OPLUS


# ------------------------------------------------------------ DNL, prelinearity, divisibility


def test_double_negation(ex2, ex3):
    assert check_double_negation(ex2).ok
    rep = check_double_negation(ex3)
    assert rep.checks[0].witnesses == ((1,),)
    assert check_double_negation(boolean2()).ok


def _raw_prelinear_violations(rl):
    n, j, ar = rl.n, rl.join, rl.arrow
    return [(x, y) for x in range(n) for y in range(n) if j[ar[x][y]][ar[y][x]] != rl.top]


def test_prelinearity(ex2, ex3):
    c = check_prelinearity(ex2).checks[0]
    assert c.failed and c.witnesses[0] == (B, C)
    assert list(c.witnesses) == _raw_prelinear_violations(ex2)
    assert ex2.join[ex2.arrow[B][C]][ex2.arrow[C][B]] == D
    assert check_prelinearity(ex3).ok
    assert check_prelinearity(boolean2()).ok


def test_divisibility(ex2, ex3):
    c = check_divisibility(ex2).checks[0]
    assert c.failed and c.witnesses[0] == (B, A)
    assert ex2.arrow[B][A] == C and ex2.otimes[B][C] == O
    assert check_divisibility(ex3).ok
    assert check_divisibility(boolean2()).ok


def test_mv(ex1, ex2, ex3):
    assert not check_mv(ex2).ok
    assert check_mv(ex1).ok
    rep = check_mv(ex3)
    assert rep["mv-algebra"].witnesses == (("double negation",),)


# ------------------------------------------------------------ lemma suite


def test_lemma_suite_example2(ex2):
    rep = verify_lemma_suite(ex2)
    assert len(rep.checks) == 13
    assert all(c.passed for c in rep.checks)


def test_lemma_suite_example3_skips_dnl_items(ex3):
    rep = verify_lemma_suite(ex3)
    assert [c.status for c in rep.checks] == ["pass"] * 9 + ["skip"] * 4


def test_lemma_suite_example1(ex1):
    assert all(c.passed for c in verify_lemma_suite(ex1).checks)


def test_lemma_suite_flags_broken_algebra(ex2):
    otimes = [list(r) for r in ex2.otimes]
    otimes[B][D] = otimes[D][B] = D
    broken = residuated(ex2.lattice, otimes, ex2.arrow)
    assert not verify_lemma_suite(broken).ok


# ------------------------------------------------------------ corpus invariants


def test_corpus_invariants(corpus5):
    for rl in corpus5:
        assert check_residuated(rl).ok
        assert check_monotone(rl).ok
        assert derive_arrow(rl.lattice, rl.otimes) == rl.arrow
        assert verify_lemma_suite(rl).ok
        if check_double_negation(rl).ok:
            op = rl.oplus
            assert all(op[rl.bottom][y] == y for y in range(rl.n))
            assert all(op[x][y] == op[y][x] for x in range(rl.n) for y in range(rl.n))


def test_failing_checks_always_carry_witnesses(corpus5, ex2, ex3):
    from reslat.core import full_report

    for rl in [ex2, ex3, *corpus5]:
        for c in full_report(rl).checks:
            if c.failed:
                assert c.witnesses
                assert list(c.witnesses) == sorted(c.witnesses)

import itertools

import pytest

from quatgroups.commuting import (
    Mod8Class,
    align_commuting,
    brute_force_commuting,
    classify_mod8,
    congruence_witness,
    exists_commuting,
    rep_quadratic,
    table_pl,
)
from quatgroups.errors import BadPrimePair, NotOddPrime
from quatgroups.quat import Quat, commutes
from quatgroups.xsets import enumerate_Xq, n_invariant, odd_primes

PAIRS = list(itertools.combinations(odd_primes(50), 2))


def naive_commuting(p, l):
    """Oracle using quaternion multiplication directly."""
    return [
        (a, b)
        for a in enumerate_Xq(p)
        for b in enumerate_Xq(l)
        if Quat.from_int(a) * Quat.from_int(b) == Quat.from_int(b) * Quat.from_int(a)
    ]


@pytest.mark.parametrize("p,l", [(3, 5), (3, 11), (5, 13), (7, 23), (11, 19)])
def test_brute_force_against_naive(p, l):
    assert sorted(brute_force_commuting(p, l)) == sorted(naive_commuting(p, l))


@pytest.mark.parametrize("p,l", PAIRS)
def test_nset_test_matches_search(p, l):
    ok, w = exists_commuting(p, l)
    assert ok == bool(brute_force_commuting(p, l))
    if ok:
        assert w.verify(p, l)


@pytest.mark.parametrize("p,l", PAIRS)
def test_classification_consistent(p, l):
    cls = classify_mod8(p, l)
    found = bool(brute_force_commuting(p, l))
    if cls is Mod8Class.ALWAYS:
        assert found
    elif cls is Mod8Class.NEVER:
        assert not found


@pytest.mark.parametrize("p,l", PAIRS)
def test_congruence_witness(p, l):
    w = congruence_witness(p, l)
    if w is not None:
        assert w.verify(p, l)


def test_table_shape():
    t = table_pl()
    assert [[c.value for c in row] for row in t] == [
        ["+", "+", "+", "+-"],
        ["+", "+", "-", "-"],
        ["+", "-", "+", "-"],
        ["+-", "-", "-", "+-"],
    ]


def test_align():
    x, y = align_commuting((1, 0, 1, 1), (3, 0, 1, 1))
    assert commutes(Quat.from_int(x), Quat.from_int(y))
    assert n_invariant(x) == n_invariant(y)


def test_rep_quadratic():
    assert rep_quadratic(11, 2) == (3, 1)
    assert rep_quadratic(7, 1) is None


def test_bad_pairs():
    with pytest.raises(BadPrimePair):
        exists_commuting(5, 5)
    with pytest.raises(NotOddPrime):
        classify_mod8(4, 5)

import itertools
from fractions import Fraction

import pytest

from quatgroups.errors import BadPrimePair, FactorizationMissing, KernelNotGenerated
from quatgroups.fp import AbelianGroup, abelianization, coset_index, derived_ab_chain
from quatgroups.gamma import (
    ambient_gamma,
    build_gamma_presentation,
    build_Q_extension,
    check_minus_one_in_derived,
    minus_one_word,
    relator_evaluations,
)
from quatgroups.quat import Quat, eval_word, proj_normalize
from quatgroups.xsets import odd_primes

G35_RELATORS = [
    "a1*b1*a2*b2",
    "a1*b2*a2*b1^-1",
    "a1*b3*a2^-1*b1",
    "a1*b3^-1*a1*b2^-1",
    "a1*b1^-1*a2^-1*b3",
    "a2*b3*a2*b2^-1",
]


@pytest.fixture(scope="module")
def g35():
    return build_gamma_presentation(3, 5)


def test_gamma35_relators(g35):
    assert [g35.pres.format(r) for r in g35.pres.relators] == G35_RELATORS
    assert [str(v) for v in relator_evaluations(g35)] == ["-15", "-3", "-5", "3/5", "-1", "3"]


def test_relators_are_projectively_trivial(g35):
    vals = g35.values()
    for r in g35.pres.relators:
        assert eval_word(r, vals).is_real


@pytest.mark.parametrize("p,l", [(p, l) for p, l in itertools.permutations(odd_primes(17), 2)])
def test_relator_count(p, l):
    gp = build_gamma_presentation(p, l)
    assert len(gp.pres.relators) == (p + 1) * (l + 1) // 4
    assert all(len(r) == 4 for r in gp.pres.relators)
    # each (a-letter, b-letter) product is factored by exactly one relator
    pairs = []
    for alpha, beta, c, d in gp.pres.relators:
        pairs += [(alpha, beta), (c, d), (-c, -beta), (-alpha, -d)]
    assert len(pairs) == len(set(pairs)) == (p + 1) * (l + 1)


def test_gamma35_invariants(g35):
    assert derived_ab_chain(g35.pres, 2) == [AbelianGroup(0, (2, 4, 4)), AbelianGroup(0, (8, 8, 16))]
    assert coset_index(g35.pres, [g35.word("a1"), g35.word("b2")]) == 2


def test_invalid_inputs():
    with pytest.raises(BadPrimePair):
        build_gamma_presentation(5, 5)
    with pytest.raises(FactorizationMissing):
        build_gamma_presentation(3, 5, [(1, 0, 1, 1)], None)
    with pytest.raises(FactorizationMissing):
        build_gamma_presentation(3, 5, [(1, 0, 1, 1), (1, 0, -1, -1)], None)


def test_q35_extension():
    ext = build_Q_extension(build_gamma_presentation(3, 5))
    assert ext.kernel == (2, 4, 5)
    assert ext.relations == ((0, 2, 0),)
    assert len(ext.pres.relators) == 19
    assert abelianization(ext.pres) == AbelianGroup(2, (2, 2, 4))
    w = minus_one_word(ext)
    assert ext.pres.format(w) == "a1*b1^-1*a2^-1*b3"
    assert eval_word(w, ext.gamma.values()) == Quat(-1)


def test_scalar_words_evaluate_exactly():
    ext = build_Q_extension(build_gamma_presentation(3, 5))
    vals = ext.gamma.values()
    for v in (Fraction(-1), Fraction(3), Fraction(-5), Fraction(9, 25), Fraction(-225)):
        assert eval_word(ext.scalar_word(v), vals) == Quat(v)


def test_element_words():
    ext = build_Q_extension(build_gamma_presentation(3, 5))
    vals = ext.gamma.values()
    for x in [(1, 0, 1, 1), (-1, 0, -1, 1), (1, 0, -1, -1), (1, 0, 2, 0), (-1, 0, 0, 2), (1, -2, 0, 0)]:
        assert eval_word(ext.element_word(x), vals) == Quat.from_int(x)


def test_ambient_sign_flip():
    with pytest.raises(KernelNotGenerated):
        build_Q_extension(build_gamma_presentation(3, 7))
    gp = ambient_gamma(3, 7)
    ext = build_Q_extension(gp)
    assert eval_word(ext.scalar_word(-1), gp.values()) == Quat(-1)


@pytest.mark.parametrize("p,l", [(3, 5), (3, 7), (3, 11), (5, 7), (5, 11)])
def test_minus_one_outside_derived(p, l):
    assert check_minus_one_in_derived(p, l) is False


def test_transversal_is_projective_generating(g35):
    vals = g35.values()
    images = {proj_normalize(v) for v in vals}
    assert len(images) == 5

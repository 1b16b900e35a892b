import random

import pytest
from hypothesis import given, settings, strategies as st

from quatgroups.errors import EnumerationOverflow, IncompatibleTable, InfiniteAbelianization, ParseError
from quatgroups.fp import (
    AbelianGroup,
    CosetTable,
    Overflow,
    Presentation,
    abelianization,
    canonical_cyclic,
    commutator,
    coset_index,
    cyclic_reduce,
    derived_ab_chain,
    derived_subgroup_presentation,
    exponent_sums,
    format_word,
    format_word_powers,
    free_reduce,
    inverse,
    is_conjugate,
    parse_word,
    power,
    reidemeister_schreier,
    rewrite,
    schreier_data,
    todd_coxeter,
)

letters2 = st.sampled_from([1, -1, 2, -2])
words2 = st.lists(letters2, max_size=14).map(tuple)


# -- permutation group oracle -------------------------------------------------------

def pmul(a, b):  # apply a then b
    return tuple(b[i] for i in a)


def closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = pmul(g, h)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return seen


def pinv(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def derived_order(gens):
    elems = closure(gens)
    comms = {pmul(pmul(pmul(a, b), pinv(a)), pinv(b)) for a in elems for b in elems}
    return len(closure(list(comms)))


# (presentation text, permutation generators realizing the same group)
GROUPS = [
    ("< a, b | a^2, b^3, abab >", [(1, 0, 2), (1, 2, 0)]),
    ("< a, b | a^4, b^2, abab >", [(1, 2, 3, 0), (0, 3, 2, 1)]),
    ("< a, b | a^2, b^3, ababab >", [(1, 0, 3, 2), (0, 2, 3, 1)]),
    ("< a, b | a^2, b^3, abababab >", [(1, 0, 2, 3), (0, 2, 3, 1)]),
    ("< a, b | a^5, b^2, abab >", [(1, 2, 3, 4, 0), (0, 4, 3, 2, 1)]),
    ("< a | a^6 >", [(1, 2, 3, 4, 5, 0)]),
]
Q8 = "< a, b | a^4, a^2B^2, abaB >"


@pytest.mark.parametrize("text,perms", GROUPS)
def test_order_matches_permutation_oracle(text, perms):
    pres = Presentation.from_text(text)
    t = todd_coxeter(pres)
    order = len(closure(perms))
    assert isinstance(t, CosetTable) and t.index == order
    t.check(pres)


@pytest.mark.parametrize("text,perms", GROUPS)
def test_abelianization_matches_oracle(text, perms):
    pres = Presentation.from_text(text)
    ab = abelianization(pres)
    assert ab.order == len(closure(perms)) // derived_order(perms)


def test_quaternion_group():
    pres = Presentation.from_text(Q8)
    assert coset_index(pres) == 8
    assert abelianization(pres) == AbelianGroup(0, (2, 2))
    assert derived_ab_chain(pres, 2) == [AbelianGroup(0, (2, 2)), AbelianGroup(0, (2,))]


def test_subgroup_index():
    pres = Presentation.from_text("< a, b | a^2, b^3, abab >")
    assert coset_index(pres, [pres.word("a")]) == 3
    assert coset_index(pres, [pres.word("b")]) == 2
    assert coset_index(pres, [pres.word("a"), pres.word("b")]) == 1


def test_overflow_is_falsy():
    pres = Presentation.from_text("< a, b | >")
    t = todd_coxeter(pres, (), 50)
    assert isinstance(t, Overflow) and not t
    assert coset_index(pres, (), 50) is None


def test_table_json_round_trip():
    pres = Presentation.from_text(Q8)
    t = todd_coxeter(pres)
    assert CosetTable.from_json(t.to_json()) == t


def test_check_rejects_bad_table():
    pres = Presentation.from_text("< a | a^3 >")
    t = todd_coxeter(Presentation.from_text("< a | a^2 >"))
    with pytest.raises(IncompatibleTable):
        t.check(pres)


# -- words --------------------------------------------------------------------------

@given(words2)
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(r[i] != -r[i + 1] for i in range(len(r) - 1))


@given(words2)
def test_inverse_cancels(w):
    assert free_reduce(w + inverse(w)) == ()


@given(words2)
def test_cyclic_forms(w):
    c = cyclic_reduce(w)
    if len(c) > 1:
        rot = c[3 % len(c):] + c[: 3 % len(c)]
        assert is_conjugate(c, rot)
        assert canonical_cyclic(c) == canonical_cyclic(inverse(rot))


@given(words2)
def test_text_round_trip(w):
    w = free_reduce(w)
    assert parse_word(format_word(w, ("a", "b")), ("a", "b")) == w
    assert parse_word(format_word_powers(w, ("x", "y")), ("x", "y")) == w
    assert parse_word(format_word(w, ("a1", "b1")), ("a1", "b1")) == w


def test_parse_forms():
    assert parse_word("baabaBaaaaBa", ("a", "b")) == parse_word("b a^2 b a B a^4 B a", ("a", "b"))
    assert parse_word("a1*b3^-1*a2", ("a1", "a2", "b3")) == (1, -3, 2)
    assert power((1, 2), -2) == (-2, -1, -2, -1)
    assert commutator((1,), (2,)) == (1, 2, -1, -2)
    assert exponent_sums((1, 1, -2, 1), 2) == [3, -1]
    with pytest.raises(ParseError):
        parse_word("c", ("a", "b"))


def test_presentation_serialization():
    pres = Presentation.from_text("< a1, b2 | a1*b2*a1^-1*b2^-1, a1^3 >")
    assert Presentation.from_text(pres.to_text()) == pres
    assert Presentation.from_dict(pres.to_dict()) == pres
    doubled = pres.with_added_relators([inverse(pres.relators[0])])
    assert len(doubled.relators) == 3
    assert doubled.deduplicated() == pres


# -- Smith form and abelian groups ---------------------------------------------------

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-8, 8), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


def unimodular(n, rnd):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        if n < 2:
            break
        i, j = rnd.sample(range(n), 2)
        c = rnd.randint(-2, 2)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def matmul(a, b):
    return [[sum(x * y for x, y in zip(r, c)) for c in zip(*b)] for r in a]


@given(matrices)
def test_snf_chain(m):
    from quatgroups.fp import smith_normal_form

    d = smith_normal_form(m)
    assert len(d) == min(len(m), len(m[0]))
    nz = [x for x in d if x]
    assert d[: len(nz)] == nz and all(x > 0 for x in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    if len(m) == len(m[0]):
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(det(m))


@settings(max_examples=60)
@given(matrices, st.integers(0, 10**6))
def test_snf_unimodular_invariance(m, seed):
    from quatgroups.fp import smith_normal_form

    rnd = random.Random(seed)
    u, v = unimodular(len(m), rnd), unimodular(len(m[0]), rnd)
    assert smith_normal_form(matmul(matmul(u, m), v)) == smith_normal_form(m)


def test_abelian_group_validation():
    assert str(AbelianGroup(2, (2, 4))) == "Z^2 x Z2 x Z4"
    assert str(AbelianGroup(0)) == "1"
    assert AbelianGroup.from_divisors(3, [1, 2, 0]) == AbelianGroup(1, (2,))
    with pytest.raises(ValueError):
        AbelianGroup(0, (2, 3))


# -- Reidemeister-Schreier -----------------------------------------------------------

def test_rs_transversal_independence():
    pres = Presentation.from_text("< a, b | a^2, b^3, ababab >")
    t = todd_coxeter(pres, [pres.word("b")])
    g1 = reidemeister_schreier(pres, t, "bfs")
    g2 = reidemeister_schreier(pres, t, "dfs")
    assert abelianization(g1) == abelianization(g2)
    assert len(g1.generator_names) == len(g2.generator_names) == t.index * (pres.ngens - 1) + 1


def test_rs_rejects_overflow():
    pres = Presentation.from_text("< a, b | >")
    with pytest.raises(EnumerationOverflow):
        reidemeister_schreier(pres, todd_coxeter(pres, (), 20))


def test_rs_of_free_group_is_free():
    pres = Presentation.from_text("< a, b | >")
    t = todd_coxeter(pres.with_added_relators([pres.word("a^2"), pres.word("b^2"), pres.word("abAB")]))
    sub = reidemeister_schreier(pres, t)
    assert len(sub.relators) == 0
    assert abelianization(sub) == AbelianGroup(1 + t.index * (pres.ngens - 1))


def test_rewrite_evaluates_subgroup_words():
    pres = Presentation.from_text("< a, b | a^2, b^3, abab >")
    t = todd_coxeter(pres, [pres.word("b")])
    data = schreier_data(t)
    sub = reidemeister_schreier(pres, t)
    w = pres.word("bb")
    rw = rewrite(data, w)
    back = free_reduce(tuple(x for k in rw for x in (data.word_of(abs(k) - 1) if k > 0 else inverse(data.word_of(abs(k) - 1)))))
    assert back == free_reduce(w)
    assert sub.ngens == len(data.generators)


def test_derived_subgroup_needs_finite_abelianization():
    with pytest.raises(InfiniteAbelianization):
        derived_subgroup_presentation(Presentation.from_text("< a, b | abAB >"))


def test_derived_of_s3():
    pres = Presentation.from_text("< a, b | a^2, b^3, abab >")
    d = derived_subgroup_presentation(pres)
    assert abelianization(d) == AbelianGroup(0, (3,))

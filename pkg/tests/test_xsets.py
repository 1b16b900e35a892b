import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from quatgroups.errors import NotOddPrime
from quatgroups.xsets import (
    enumerate_Xq,
    is_prime,
    n_invariant,
    n_set,
    odd_primes,
    orbit_rep,
    orbit_reps,
    parity_ok,
    primitive_direction,
    t_membership,
)


def brute_Xq(q):
    """Independent enumeration: all integer 4-tuples of norm q in the parity class."""
    r = math.isqrt(q)
    rng = range(-r, r + 1)
    out = set()
    for c in itertools.product(rng, repeat=4):
        if sum(v * v for v in c) != q or c[0] % 2 == 0:
            continue
        if q % 4 == 1 and all(v % 2 == 0 for v in c[1:]):
            out.add(c)
        if q % 4 == 3 and c[1] % 2 == 0 and c[2] % 2 and c[3] % 2:
            out.add(c)
    return out


def brute_nset(q):
    vals = set()
    for c in brute_Xq(q):
        g = math.gcd(math.gcd(c[1], c[2]), c[3])
        vals.add(sum(v * v for v in c[1:]) // (g * g))
    return tuple(sorted(vals))


def test_small_sets():
    assert len(enumerate_Xq(3)) == 8
    assert set(enumerate_Xq(5)) == brute_Xq(5)
    assert (1, 0, 1, 1) in enumerate_Xq(3)


@pytest.mark.parametrize("q", odd_primes(60))
def test_enumeration_matches_brute_force(q):
    assert set(enumerate_Xq(q)) == brute_Xq(q)


@pytest.mark.parametrize("q", odd_primes(200))
def test_size(q):
    assert len(enumerate_Xq(q)) == 2 * (q + 1)


@pytest.mark.parametrize("q", odd_primes(80))
def test_nset_matches_brute_force(q):
    assert n_set(q).values == brute_nset(q)


@pytest.mark.parametrize("q", odd_primes(200))
def test_congruences(q):
    vals = n_set(q).values
    if q % 8 == 5:
        assert all(v % 2 == 1 for v in vals)
    elif q % 8 == 3:
        assert all(v % 8 == 2 for v in vals)
    elif q % 8 == 7:
        assert all(v % 8 == 6 for v in vals)


def test_not_odd_prime():
    for bad in (1, 2, 9, -3):
        with pytest.raises(NotOddPrime):
            enumerate_Xq(bad)


def test_invariants():
    assert n_invariant((1, 0, 2, 0)) == 1
    assert n_invariant((1, 2, 4, 4)) == 9
    assert n_invariant((5, 0, 0, 0)) == 0
    assert primitive_direction((1, 2, 4, 4)) == ((1, 2, 2), 2)
    assert parity_ok((1, 0, 1, 1)) and not parity_ok((1, 1, 0, 1))
    assert t_membership((1, 0, 1, 1), 3, 5)
    assert not t_membership((1, 1, 1, 1), 3, 5)


def test_orbit_representatives():
    assert orbit_reps(enumerate_Xq(3)) == [(1, 0, 1, 1), (1, 0, 1, -1)]
    assert orbit_reps(enumerate_Xq(5)) == [(1, 2, 0, 0), (1, 0, 2, 0), (1, 0, 0, 2)]
    for q in odd_primes(40):
        reps = orbit_reps(enumerate_Xq(q))
        assert len(reps) == (q + 1) // 2
        assert {orbit_rep(c) for c in enumerate_Xq(q)} == set(reps)


@settings(max_examples=50)
@given(st.integers(3, 5000))
def test_is_prime(n):
    assert is_prime(n) == all(n % d for d in range(2, math.isqrt(n) + 1))

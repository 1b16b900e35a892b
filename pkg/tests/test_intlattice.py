import itertools

from hypothesis import given, strategies as st

from quatgroups.intlattice import Lattice, hnf_with_transform

vec3 = st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
gens = st.lists(vec3, min_size=1, max_size=5)


def combos(g, bound=2):
    """Oracle: every small integer combination of the generators."""
    for cs in itertools.product(range(-bound, bound + 1), repeat=len(g)):
        yield tuple(sum(c * v[i] for c, v in zip(cs, g)) for i in range(3))


@given(gens)
def test_transform_identity(g):
    h, u, rank = hnf_with_transform(g, 3)
    for urow, hrow in zip(u, h):
        assert tuple(sum(c * v[i] for c, v in zip(urow, g)) for i in range(3)) == tuple(hrow)
    assert all(not any(r) for r in h[rank:])


@given(st.lists(vec3, min_size=1, max_size=3))
def test_membership_of_combinations(g):
    lat = Lattice(g, 3)
    for v in combos(g, 1):
        assert v in lat
        sol = lat.solve(v)
        assert sol is not None
        assert tuple(sum(c * w[i] for c, w in zip(sol, g)) for i in range(3)) == v


@given(gens)
def test_relations_vanish(g):
    lat = Lattice(g, 3)
    for rel in lat.relations():
        assert all(sum(c * v[i] for c, v in zip(rel, g)) == 0 for i in range(3))
    assert len(lat.relations()) == len(g) - lat.rank


def test_index_and_cosets():
    lat = Lattice([(2, 0, 0), (0, 4, 0), (0, 0, 4)], 3)
    assert lat.index() == 32
    reps = lat.coset_reps()
    assert len(reps) == 32 and reps[0] == (0, 0, 0)
    assert len({lat.reduce(r) for r in reps}) == 32
    assert (1, 0, 0) not in lat and (2, 4, -4) in lat
    assert Lattice([(1, 1, 0)], 3).index() is None
    assert lat.contains_lattice(Lattice([(2, 4, 8)], 3))
    assert Lattice([(2, 0, 0), (0, 4, 0), (0, 0, 4), (2, 4, 4)], 3) == lat

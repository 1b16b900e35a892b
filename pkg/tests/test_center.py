from fractions import Fraction

import pytest

from quatgroups.center import (
    CenterStatus,
    CentralSubgroup,
    RelatorMode,
    TorsionStatus,
    abelianization_by_norms,
    assemble_xy_presentation,
    ball_elements,
    ball_scan,
    compute_center,
    shortest_relator,
    shortest_relators,
    torsion_status,
)
from quatgroups.errors import CenterNotGenerated, CommutingInput
from quatgroups.fp import AbelianGroup, Presentation, abelianization, is_conjugate, inverse
from quatgroups.quat import Quat, as_central, eval_word

X, Y = (1, 0, 1, 1), (1, 0, 2, 0)
XY = [Quat.from_int(X), Quat.from_int(Y)]
AB = Presentation(("a", "b"), ())
R = [AB.word(w) for w in ("baabaBaaaaBa", "AbAbaabAAbAbbaabab", "babaabbaBabbaababb", "baabABBBAABabb", "aBaaBaBAABAAbAAbAbaaba")]


@pytest.fixture(scope="module")
def center35():
    return compute_center(X, Y, radius=10)


def test_central_subgroup_algebra():
    c = CentralSubgroup.from_values([81, 625], 3, 5)
    assert c.index() == 32
    assert 81 * 625 in c and Fraction(1, 81) in c and 9 not in c and -1 not in c
    assert [str(s) for s in c.basis()] == ["81", "625"]
    reps = c.coset_reps()
    assert len(reps) == 32 and reps[0].is_one()
    assert CentralSubgroup.from_values([81 * 625, 625], 3, 5) == c
    assert CentralSubgroup.from_values([81 * 81, 625], 3, 5) <= c
    assert torsion_status(c) is TorsionStatus.TORSION_FREE
    assert torsion_status(CentralSubgroup.from_values([-81, 81], 3, 5)) is TorsionStatus.HAS_TORSION
    assert torsion_status(CentralSubgroup.from_values([-81], 3, 5)) is TorsionStatus.TORSION_FREE
    assert CentralSubgroup.from_values([81], 3, 5).index() is None


def test_ball_scan_scalars():
    scan = ball_scan(X, Y, 6)
    assert {str(s) for s in scan.scalars_found} == {"81", "1/81"}
    assert scan.layer_sizes[:3] == (1, 4, 12)
    assert sum(scan.layer_sizes) == scan.elements_visited
    for s, w in scan.witnesses.items():
        assert eval_word(w, XY) == s.as_quat()
    assert not ball_scan(X, Y, 3).scalars_found


def test_ball_elements_are_distinct_projectively():
    elems = ball_elements(X, Y, 4, exact=False)
    assert len(elems) == ball_scan(X, Y, 4).elements_visited
    for w, v in elems[:50]:
        assert eval_word(w, XY) == v


def test_commuting_input_rejected():
    with pytest.raises(CommutingInput):
        ball_scan((1, 0, 1, 1), (3, 0, 1, 1), 3)


def test_shortest_relators():
    n, words = shortest_relators(X, Y, RelatorMode.EXACT, 15)
    r4 = tuple({1: 1, -1: -1, 2: 2, -2: -2}[a] for a in R[3])
    assert n == 14 and all(is_conjugate(w, r4) or is_conjugate(w, inverse(r4)) for w in words)
    for w in words:
        assert eval_word(w, XY) == Quat(1)
    n, w = shortest_relator(X, Y, RelatorMode.PROJECTIVE, 13)
    assert n == 12 and eval_word(w, XY).is_real
    assert shortest_relator(X, Y, "exact", 13) is None


def test_free_pair():
    x, y = (1, 2, 0, 0), (1, 0, 0, 2)
    assert not ball_scan(x, y, 5).scalars_found
    assert shortest_relator(x, y, RelatorMode.PROJECTIVE, 11) is None
    assert compute_center(x, y, radius=5).status is CenterStatus.INCONCLUSIVE


def test_center_determined(center35):
    res = center35
    assert res.status is CenterStatus.DETERMINED
    assert res.center == CentralSubgroup.from_values([81, 625], 3, 5)
    assert res.index == 64
    by = {s.value: w for s, w, _ in res.evidence}
    assert len(by) == 31
    assert sorted(v for v, w in by.items() if w == 32) == sorted(Fraction(v) for v in (-1, 9, -9, 25, -25, 225, -225))
    assert all(w in (16, 32) for w in by.values())
    assert res.to_dict()["center"]["generators"] == ["81", "625"]


def test_equal_norms_inconclusive():
    res = compute_center((1, 0, 1, 1), (1, 0, 1, -1), radius=4)
    assert res.status is CenterStatus.INCONCLUSIVE


def test_assemble_presentation():
    evals = [as_central(eval_word(r, XY), 3, 5) for r in R]
    assert [str(v) for v in evals] == ["81", "625", "50625", "1", "1"]
    pres = assemble_xy_presentation(R, [0, 1], evals)
    assert len(pres.relators) == 7
    assert abelianization(pres) == AbelianGroup(2)
    for r in pres.relators:
        assert eval_word(r, XY) == Quat(1)
    with pytest.raises(CenterNotGenerated):
        assemble_xy_presentation(R, [0], evals)


def test_abelianization_by_norms():
    assert abelianization_by_norms((1, 0), (0, 1)) == AbelianGroup(2)
    assert not abelianization_by_norms((1, 0), (2, 0))

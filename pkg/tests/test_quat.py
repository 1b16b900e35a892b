from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quatgroups.errors import ParseError, ZeroQuaternion
from quatgroups.quat import (
    CentralScalar,
    Quat,
    as_central,
    commutator,
    commutes,
    eval_word,
    eval_word_proj,
    format_quat,
    int_norm,
    normalize_int,
    parse_quat,
    proj_normalize,
    proj_normalize_int,
    qconj,
    qinv,
    qnorm,
    scalar_decompose,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
quats = st.builds(Quat, rationals, rationals, rationals, rationals)
nonzero = quats.filter(lambda q: not q.is_zero)


def test_unit_products():
    i, j, k = Quat(0, 1), Quat(0, 0, 1), Quat(0, 0, 0, 1)
    assert i * j == k and j * k == i and k * i == j
    assert i * i == j * j == k * k == i * j * k == Quat(-1)
    assert j * i == -k


def test_fraction_normalization():
    q = Quat(Fraction(1, 2), Fraction(1, 3))
    assert q.den == 6 and q.coeffs == (3, 2, 0, 0)
    assert Quat(2, 4, 6, 8, den=4) == Quat(1, 2, 3, 4, den=2)


def test_norm_and_inverse():
    x = Quat(1, 0, 1, 1)
    assert qnorm(x) == 3
    assert x * qinv(x) == Quat(1)
    assert qinv(x) == qconj(x) / 3
    with pytest.raises(ZeroQuaternion):
        qinv(Quat())


def test_powers():
    y = Quat(1, 0, 2, 0)
    assert y**8 == y * y * y * y * y * y * y * y
    assert y**-2 * y**2 == Quat(1)
    assert y**0 == Quat(1)


@pytest.mark.parametrize("text", ["1+j+k", "-3/5+6/5k", "2i-j", "7", "-i", "1/2+1/3i-1/4j+5k"])
def test_parse_format_round_trip(text):
    assert format_quat(parse_quat(text)) == text


@pytest.mark.parametrize("bad", ["", "1++j", "j k", "1+2x"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_quat(bad)


@given(quats, quats)
def test_norm_multiplicative(a, b):
    assert qnorm(a * b) == qnorm(a) * qnorm(b)


@given(quats, quats, quats)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(nonzero, nonzero)
def test_commutator_has_norm_one(a, b):
    assert qnorm(commutator(a, b)) == 1


@given(quats)
def test_format_round_trip(a):
    assert parse_quat(format_quat(a)) == a


@given(nonzero)
def test_commutes_with_own_polynomials(a):
    assert commutes(a, a * a + a * 3 + 1)


def test_central_scalar_vectors():
    s = scalar_decompose(Fraction(-9, 25), 3, 5)
    assert (s.sign, s.exp_p, s.exp_l) == (-1, 2, -2)
    assert s.vector == (1, 2, -2)
    assert CentralScalar.from_vector(s.vector, 3, 5) == s
    assert (s * s.inverse()).is_one()
    assert (s**3).value == Fraction(-9, 25) ** 3
    assert as_central(Quat(-15), 3, 5).value == -15


def test_scalar_outside_group():
    with pytest.raises(ValueError):
        scalar_decompose(7, 3, 5)


def test_projective_normalization():
    prim, g = normalize_int((-2, 4, 0, 6))
    assert abs(g) == 2 and prim[0] > 0
    assert tuple(g * v for v in prim) == (-2, 4, 0, 6)
    assert proj_normalize_int((1, 1, 0, 0)) == proj_normalize_int((-3, -3, 0, 0))
    assert proj_normalize(Quat(Fraction(1, 2), Fraction(1, 2))) == proj_normalize_int((1, 1, 0, 0))


def test_eval_word():
    x, y = Quat(1, 0, 1, 1), Quat(1, 0, 2, 0)
    assert eval_word((1, -2, 1), [x, y]) == x * qinv(y) * x
    assert eval_word((), [x, y]) == Quat(1)
    assert eval_word((1, -1), {0: x}) == Quat(1)
    assert eval_word_proj((1, 1), [x, y]) == proj_normalize(x * x)
    assert int_norm((1, 2, 3, 4)) == 30

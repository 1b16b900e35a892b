"""Exact Hamilton quaternions over the rationals.

A :class:`Quat` stores four integer coefficients (of 1, i, j, k) over a
single positive denominator, always in lowest terms.  Integral quaternions
are simply the ones with ``den == 1``.

Elements of the projective group (quaternions modulo nonzero rational
scalars) are modelled by :class:`ProjQuat`, which holds the primitive,
sign-normalized integral representative of a class.  Two quaternions have
the same image in PGL_2(Q_p) x PGL_2(Q_l) exactly when they are rationally
proportional, so this is a faithful model of the lattice groups.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import NotCentral, NotUnitGroupElement, ParseError, UnboundGenerator, ZeroQuaternion

Rational = Union[int, Fraction]


def _gcd4(a: int, b: int, c: int, d: int) -> int:
    return math.gcd(math.gcd(a, b), math.gcd(c, d))


class Quat:
    """Immutable rational quaternion ``(x0 + x1 i + x2 j + x3 k) / den``."""

    __slots__ = ("coeffs", "den", "_hash")

    def __init__(self, x0: Rational = 0, x1: Rational = 0, x2: Rational = 0, x3: Rational = 0, den: int = 1):
        vals = (x0, x1, x2, x3)
        if all(isinstance(v, int) for v in vals):
            nums = vals
        else:
            fr = [Fraction(v) for v in vals]
            lcm = 1
            for f in fr:
                lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
            nums = tuple(int(f * lcm) for f in fr)
            den = den * lcm
        if den == 0:
            raise ZeroDivisionError("quaternion with zero denominator")
        if den < 0:
            nums = tuple(-n for n in nums)
            den = -den
        g = math.gcd(_gcd4(*nums), den)
        if g > 1:
            nums = tuple(n // g for n in nums)
            den //= g
        self.coeffs: tuple[int, int, int, int] = tuple(nums)  # type: ignore[assignment]
        self.den: int = den
        self._hash = None

    @classmethod
    def _raw(cls, nums: tuple[int, int, int, int], den: int) -> "Quat":
        # caller guarantees den > 0
        q = cls.__new__(cls)
        g = math.gcd(_gcd4(*nums), den)
        if g > 1:
            nums = (nums[0] // g, nums[1] // g, nums[2] // g, nums[3] // g)
            den //= g
        q.coeffs = nums
        q.den = den
        q._hash = None
        return q

    @classmethod
    def from_int(cls, coeffs: Iterable[int]) -> "Quat":
        c = tuple(coeffs)
        if len(c) != 4:
            raise ValueError("need four coefficients")
        return cls._raw(c, 1)

    @classmethod
    def scalar(cls, value: Rational) -> "Quat":
        return cls(value)

    @classmethod
    def parse(cls, text: str) -> "Quat":
        return parse_quat(text)

    # -- accessors ----------------------------------------------------------

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(c, self.den) for c in self.coeffs)  # type: ignore[return-value]

    @property
    def real(self) -> Fraction:
        return Fraction(self.coeffs[0], self.den)

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    @property
    def is_real(self) -> bool:
        c = self.coeffs
        return c[1] == 0 and c[2] == 0 and c[3] == 0

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: Union["Quat", Rational]) -> "Quat":
        if not isinstance(other, Quat):
            other = Quat(other)
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = other.coeffs
        return Quat._raw(
            (
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            ),
            self.den * other.den,
        )

    def __rmul__(self, other: Rational) -> "Quat":
        return Quat(other) * self

    def __add__(self, other: Union["Quat", Rational]) -> "Quat":
        if not isinstance(other, Quat):
            other = Quat(other)
        d = self.den * other.den
        return Quat._raw(
            tuple(a * other.den + b * self.den for a, b in zip(self.coeffs, other.coeffs)),  # type: ignore[arg-type]
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> "Quat":
        c = self.coeffs
        return Quat._raw((-c[0], -c[1], -c[2], -c[3]), self.den)

    def __sub__(self, other: Union["Quat", Rational]) -> "Quat":
        if not isinstance(other, Quat):
            other = Quat(other)
        return self + (-other)

    def __truediv__(self, other: Rational) -> "Quat":
        f = Fraction(other)
        if f == 0:
            raise ZeroDivisionError("division by zero")
        return self * Quat(1 / f)

    def __pow__(self, n: int) -> "Quat":
        if n < 0:
            return qinv(self) ** (-n)
        result = Quat(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Quat(other)
        if not isinstance(other, Quat):
            return NotImplemented
        return self.coeffs == other.coeffs and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.coeffs, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"Quat({format_quat(self)!r})"

    def __str__(self) -> str:
        return format_quat(self)


def qmul(a: Quat, b: Quat) -> Quat:
    return a * b


def qconj(a: Quat) -> Quat:
    c = a.coeffs
    return Quat._raw((c[0], -c[1], -c[2], -c[3]), a.den)


def qnorm(a: Quat) -> Fraction:
    """Return ``|a|^2`` exactly."""
    c = a.coeffs
    return Fraction(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3], a.den * a.den)


def int_norm(coeffs: Sequence[int]) -> int:
    return coeffs[0] * coeffs[0] + coeffs[1] * coeffs[1] + coeffs[2] * coeffs[2] + coeffs[3] * coeffs[3]


def qinv(a: Quat) -> Quat:
    if a.is_zero:
        raise ZeroQuaternion("zero quaternion has no inverse")
    c = a.coeffs
    n = int_norm(c)
    # (c/d)^-1 = d * conj(c) / |c|^2
    d = a.den
    nums = (c[0] * d, -c[1] * d, -c[2] * d, -c[3] * d)
    return Quat._raw(nums, n)


def commutes(a: Quat, b: Quat) -> bool:
    return a * b == b * a


def commutator(a: Quat, b: Quat) -> Quat:
    """``a b a^-1 b^-1``."""
    return a * b * qinv(a) * qinv(b)


# -- central scalars ---------------------------------------------------------


@dataclass(frozen=True)
class CentralScalar:
    """The rational number ``sign * p**exp_p * l**exp_l``."""

    sign: int
    exp_p: int
    exp_l: int
    p: int
    l: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def one(cls, p: int, l: int) -> "CentralScalar":
        return cls(1, 0, 0, p, l)

    @property
    def value(self) -> Fraction:
        return self.sign * Fraction(self.p) ** self.exp_p * Fraction(self.l) ** self.exp_l

    @property
    def vector(self) -> tuple[int, int, int]:
        """Coordinates in Z/2 x Z x Z (sign bit, exponent of p, exponent of l)."""
        return (0 if self.sign == 1 else 1, self.exp_p, self.exp_l)

    @classmethod
    def from_vector(cls, v: Sequence[int], p: int, l: int) -> "CentralScalar":
        return cls(-1 if v[0] % 2 else 1, v[1], v[2], p, l)

    def _check(self, other: "CentralScalar") -> None:
        if (self.p, self.l) != (other.p, other.l):
            raise ValueError("central scalars over different primes")

    def __mul__(self, other: "CentralScalar") -> "CentralScalar":
        self._check(other)
        return CentralScalar(self.sign * other.sign, self.exp_p + other.exp_p, self.exp_l + other.exp_l, self.p, self.l)

    def inverse(self) -> "CentralScalar":
        return CentralScalar(self.sign, -self.exp_p, -self.exp_l, self.p, self.l)

    def __truediv__(self, other: "CentralScalar") -> "CentralScalar":
        return self * other.inverse()

    def __pow__(self, n: int) -> "CentralScalar":
        return CentralScalar(self.sign ** (n % 2), self.exp_p * n, self.exp_l * n, self.p, self.l)

    def is_one(self) -> bool:
        return self.sign == 1 and self.exp_p == 0 and self.exp_l == 0

    def as_quat(self) -> Quat:
        return Quat(self.value)

    def __str__(self) -> str:
        return str(self.value)


def _split_prime_powers(n: int, p: int, l: int) -> tuple[int, int, int]:
    a = b = 0
    while n % p == 0:
        n //= p
        a += 1
    while n % l == 0:
        n //= l
        b += 1
    return n, a, b


def scalar_decompose(value: Rational, p: int, l: int) -> CentralScalar:
    """Write a nonzero rational as ``+-p^a l^b``."""
    f = Fraction(value)
    if f == 0:
        raise NotUnitGroupElement("0 is not in <-1, p, l>")
    sign = 1 if f > 0 else -1
    rn, an, bn = _split_prime_powers(abs(f.numerator), p, l)
    rd, ad, bd = _split_prime_powers(f.denominator, p, l)
    if rn != 1 or rd != 1:
        raise NotUnitGroupElement(f"{f} is not of the form +-{p}^a {l}^b")
    return CentralScalar(sign, an - ad, bn - bd, p, l)


def as_central(a: Quat, p: int, l: int) -> CentralScalar:
    if not a.is_real:
        raise NotCentral(f"{a} has nonzero imaginary part")
    return scalar_decompose(a.real, p, l)


# -- projective classes ------------------------------------------------------


@dataclass(frozen=True)
class ProjQuat:
    """Primitive integral quaternion whose first nonzero coefficient is positive."""

    rep: tuple[int, int, int, int]

    @classmethod
    def identity(cls) -> "ProjQuat":
        return cls((1, 0, 0, 0))

    def as_quat(self) -> Quat:
        return Quat._raw(self.rep, 1)

    def __mul__(self, other: "ProjQuat") -> "ProjQuat":
        return proj_mul(self, other)

    def inverse(self) -> "ProjQuat":
        c = self.rep
        return proj_normalize_int((c[0], -c[1], -c[2], -c[3]))

    def __str__(self) -> str:
        return format_quat(self.as_quat())


def normalize_int(c: Sequence[int]) -> tuple[tuple[int, int, int, int], int]:
    """Split a nonzero integer 4-tuple as ``lam * prim`` with prim sign-normalized.

    Returns ``(prim, lam)`` with ``lam`` a nonzero integer.
    """
    g = _gcd4(*c)
    if g == 0:
        raise ZeroQuaternion("zero quaternion has no projective class")
    for v in c:
        if v:
            if v < 0:
                g = -g
            break
    return (c[0] // g, c[1] // g, c[2] // g, c[3] // g), g


def proj_normalize_int(c: Sequence[int]) -> ProjQuat:
    return ProjQuat(normalize_int(c)[0])


def proj_normalize(a: Quat) -> ProjQuat:
    return proj_normalize_int(a.coeffs)


def proj_mul(a: ProjQuat, b: ProjQuat) -> ProjQuat:
    return proj_normalize(a.as_quat() * b.as_quat())


# -- words -------------------------------------------------------------------


def eval_word(word: Sequence[int], values: Union[Sequence[Quat], Mapping[int, Quat]]) -> Quat:
    """Evaluate a word exactly.

    Letters are signed 1-based generator indices: ``g+1`` stands for generator
    ``g`` and ``-(g+1)`` for its inverse.  ``values`` maps generator index to a
    nonzero quaternion.
    """
    inverses: dict[int, Quat] = {}
    result = Quat(1)
    for letter in word:
        g = abs(letter) - 1
        try:
            v = values[g]
        except (IndexError, KeyError):
            raise UnboundGenerator(f"generator {g} has no value") from None
        if v is None:
            raise UnboundGenerator(f"generator {g} has no value")
        if letter < 0:
            if g not in inverses:
                inverses[g] = qinv(v)
            v = inverses[g]
        elif v.is_zero:
            raise ZeroQuaternion(f"generator {g} is zero")
        result = result * v
    return result


def eval_word_proj(word: Sequence[int], values: Union[Sequence[Quat], Mapping[int, Quat]]) -> ProjQuat:
    return proj_normalize(eval_word(word, values))


# -- text format --------------------------------------------------------------

_TERM = re.compile(r"([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*([ijk])?")


def parse_quat(text: str) -> Quat:
    """Parse ``"a+bi+cj+dk"`` with integer or fractional coefficients."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty quaternion")
    coeffs = [Fraction(0)] * 4
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"cannot parse quaternion {text!r} at position {pos}")
        if pos > 0 and m.group(1) is None:
            raise ParseError(f"missing sign in {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        idx = " ijk".index(m.group(3)) if m.group(3) else 0
        coeffs[idx] += sign * mag
        pos = m.end()
    return Quat(*coeffs)


def format_quat(a: Quat) -> str:
    parts = []
    for coeff, unit in zip(a.components(), ("", "i", "j", "k")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if unit and mag == 1:
            body = unit
        else:
            body = f"{mag}{unit}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def canonical_key(coeffs: Sequence[int]) -> tuple:
    """Ordering used for deterministic choices: fewest negative coefficients,
    then lexicographic."""
    return (sum(1 for c in coeffs if c < 0), tuple(coeffs))

"""Generator sets X_q, the set T_{p,l}, and the commutativity invariant n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import NotOddPrime
from .quat import Quat, int_norm


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def odd_primes(upto: int, start: int = 3) -> list[int]:
    """Odd primes ``start <= q < upto``."""
    return [q for q in range(max(3, start), upto) if is_prime(q)]


def check_odd_prime(q: int) -> None:
    if not isinstance(q, int) or q < 3 or not is_prime(q):
        raise NotOddPrime(f"{q!r} is not an odd prime")


def parity_ok(c: Sequence[int]) -> bool:
    """The coefficient parity pattern attached to the norm mod 4."""
    n = int_norm(c)
    if n % 4 == 1:
        return c[0] % 2 == 1 and c[1] % 2 == 0 and c[2] % 2 == 0 and c[3] % 2 == 0
    if n % 4 == 3:
        return c[1] % 2 == 0 and c[0] % 2 == 1 and c[2] % 2 == 1 and c[3] % 2 == 1
    return False


@dataclass(frozen=True)
class XqSet:
    q: int
    elements: tuple[tuple[int, int, int, int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        c = x.coeffs if isinstance(x, Quat) else tuple(x)
        return c in self._lookup

    @property
    def _lookup(self) -> frozenset:
        return _lookup_for(self.elements)

    def quats(self) -> list[Quat]:
        return [Quat.from_int(c) for c in self.elements]


@lru_cache(maxsize=None)
def _lookup_for(elements: tuple) -> frozenset:
    return frozenset(elements)


def _squares_upto(n: int) -> dict[int, int]:
    return {k * k: k for k in range(math.isqrt(n) + 1)}


@lru_cache(maxsize=256)
def _enumerate(q: int) -> tuple[tuple[int, int, int, int], ...]:
    r = math.isqrt(q)
    # admissible parity of (x0, x1, x2, x3)
    if q % 4 == 1:
        par = (1, 0, 0, 0)
    else:
        par = (1, 0, 1, 1)
    out = []

    def signed(v: int) -> tuple[int, ...]:
        return (v,) if v == 0 else (v, -v)

    for a0 in range(par[0], r + 1, 2):
        rem0 = q - a0 * a0
        for a1 in range(par[1], math.isqrt(rem0) + 1, 2):
            rem1 = rem0 - a1 * a1
            for a2 in range(par[2], math.isqrt(rem1) + 1, 2):
                rem2 = rem1 - a2 * a2
                a3 = math.isqrt(rem2)
                if a3 * a3 != rem2 or a3 % 2 != par[3]:
                    continue
                for s0 in signed(a0):
                    for s1 in signed(a1):
                        for s2 in signed(a2):
                            for s3 in signed(a3):
                                out.append((s0, s1, s2, s3))
    out.sort()
    return tuple(out)


def enumerate_Xq(q: int) -> XqSet:
    """All integral quaternions of norm q with the parity pattern for q mod 4."""
    check_odd_prime(q)
    return XqSet(q, _enumerate(q))


def t_membership(x, p: int, l: int) -> bool:
    """Whether an integral quaternion lies in T_{p,l}."""
    c = x.coeffs if isinstance(x, Quat) else tuple(x)
    if isinstance(x, Quat) and not x.is_integral:
        return False
    n = int_norm(c)
    if n == 0:
        return False
    while n % p == 0:
        n //= p
    while n % l == 0:
        n //= l
    return n == 1 and parity_ok(c)


def primitive_direction(x) -> tuple[tuple[int, int, int], int]:
    """Split the imaginary part as ``z * (c1, c2, c3)`` with gcd(c) = 1, z > 0.

    Rational inputs are scaled to integers first.  Raises ValueError for
    real quaternions.
    """
    c = x.coeffs if isinstance(x, Quat) else tuple(x)
    g = math.gcd(math.gcd(c[1], c[2]), c[3])
    if g == 0:
        raise ValueError("real quaternion has no imaginary direction")
    return (c[1] // g, c[2] // g, c[3] // g), g


def n_invariant(x) -> int:
    """Squared length of the primitive vector along the imaginary part (0 if real)."""
    c = x.coeffs if isinstance(x, Quat) else tuple(x)
    g = math.gcd(math.gcd(c[1], c[2]), c[3])
    if g == 0:
        return 0
    return (c[1] * c[1] + c[2] * c[2] + c[3] * c[3]) // (g * g)


@dataclass(frozen=True)
class NSet:
    q: int
    values: tuple[int, ...]

    @property
    def min(self) -> int:
        return self.values[0]

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, m) -> bool:
        return m in self.values


@lru_cache(maxsize=4096)
def _nset_values(q: int) -> tuple[int, ...]:
    # Enumerate only x0 > 0 and nonnegative imaginary parts; n is blind to signs.
    par = (1, 0, 0, 0) if q % 4 == 1 else (1, 0, 1, 1)
    vals = set()
    r = math.isqrt(q)
    for a0 in range(1, r + 1, 2):
        rem0 = q - a0 * a0
        for a1 in range(par[1], math.isqrt(rem0) + 1, 2):
            rem1 = rem0 - a1 * a1
            for a2 in range(par[2], math.isqrt(rem1) + 1, 2):
                rem2 = rem1 - a2 * a2
                a3 = math.isqrt(rem2)
                if a3 * a3 == rem2 and a3 % 2 == par[3]:
                    vals.add(n_invariant((a0, a1, a2, a3)))
    return tuple(sorted(vals))


def n_set(q: int) -> NSet:
    check_odd_prime(q)
    return NSet(q, _nset_values(q))


def orbit_rep(c: Sequence[int]) -> tuple[int, int, int, int]:
    """Canonical member of {x, -x, conj x, -conj x}: positive real part and the
    larger imaginary tuple."""
    c = tuple(c)
    if c[0] < 0:
        c = tuple(-v for v in c)
    conj = (c[0], -c[1], -c[2], -c[3])
    return max(c, conj)  # type: ignore[return-value]


def orbit_reps(xq: XqSet) -> list[tuple[int, int, int, int]]:
    """One representative per orbit, listed in decreasing lexicographic order.

    For q = 3 and q = 5 this gives (1+j+k, 1+j-k) and (1+2i, 1+2j, 1+2k).
    """
    reps = {orbit_rep(c) for c in xq.elements}
    return sorted(reps, reverse=True)

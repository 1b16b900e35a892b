"""Existence of commuting pairs x in X_p, y in X_l.

The decision itself is the n-set intersection test; the congruence
constructions give explicit witnesses for the classes where a
representation ``q = r^2 + m s^2`` is forced.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadPrimePair, NMismatch, NotInT
from .quat import Quat, canonical_key, commutes, int_norm
from .xsets import check_odd_prime, enumerate_Xq, n_invariant, n_set, parity_ok, primitive_direction

IntQuat = tuple[int, int, int, int]


@dataclass(frozen=True)
class CommuteWitness:
    x: IntQuat
    y: IntQuat
    shared_n: int

    def verify(self, p: int, l: int) -> bool:
        return (
            self.x in enumerate_Xq(p)
            and self.y in enumerate_Xq(l)
            and commutes(Quat.from_int(self.x), Quat.from_int(self.y))
            and n_invariant(self.x) == n_invariant(self.y) == self.shared_n
        )


class Mod8Class(enum.Enum):
    ALWAYS = "+"
    NEVER = "-"
    DEPENDS = "+-"


def _check_pair(p: int, l: int) -> None:
    check_odd_prime(p)
    check_odd_prime(l)
    if p == l:
        raise BadPrimePair(f"primes must be distinct, got {p} twice")


def align_commuting(x: Sequence[int], y: Sequence[int], p: Optional[int] = None, l: Optional[int] = None) -> tuple[IntQuat, IntQuat]:
    """Return a commuting pair with the norms of x and y.

    The imaginary direction of one factor is replaced by that of the other:
    x is rebuilt when |x|^2 = 1 mod 4 or when both norms are 3 mod 4,
    otherwise y is rebuilt.
    """
    x, y = tuple(x), tuple(y)
    for v in (x, y):
        if not parity_ok(v):
            raise NotInT(f"{v} violates the parity pattern")
    if p is not None and l is not None:
        from .xsets import t_membership

        for v in (x, y):
            if not t_membership(v, p, l):
                raise NotInT(f"{v} is not in T_{p},{l}")
    nx, ny = n_invariant(x), n_invariant(y)
    if nx != ny:
        raise NMismatch(f"n(x) = {nx} but n(y) = {ny}")
    if nx == 0:
        return x, y  # type: ignore[return-value]
    cx, zx = primitive_direction(x)
    cy, zy = primitive_direction(y)
    if int_norm(y) % 4 == 1 and int_norm(x) % 4 != 1:
        y_hat = (y[0], zy * cx[0], zy * cx[1], zy * cx[2])
        return x, y_hat  # type: ignore[return-value]
    x_hat = (x[0], zx * cy[0], zx * cy[1], zx * cy[2])
    return x_hat, y  # type: ignore[return-value]


def _first_with_n(q: int, m: int) -> IntQuat:
    cands = [c for c in enumerate_Xq(q) if n_invariant(c) == m]
    return min(cands, key=canonical_key)


def exists_commuting(p: int, l: int) -> tuple[bool, Optional[CommuteWitness]]:
    _check_pair(p, l)
    shared = sorted(set(n_set(p)) & set(n_set(l)))
    if not shared:
        return False, None
    m = shared[0]
    x, y = align_commuting(_first_with_n(p, m), _first_with_n(l, m))
    return True, CommuteWitness(x, y, m)


def brute_force_commuting(p: int, l: int) -> list[tuple[IntQuat, IntQuat]]:
    """Every commuting pair in X_p x X_l, by exhaustive search."""
    out = []
    for a in enumerate_Xq(p):
        a0, a1, a2, a3 = a
        for b in enumerate_Xq(l):
            b0, b1, b2, b3 = b
            # xy - yx is twice the cross product of the imaginary parts
            if a2 * b3 == a3 * b2 and a3 * b1 == a1 * b3 and a1 * b2 == a2 * b1:
                out.append((a, b))
    return out


def rep_quadratic(p: int, m: int) -> Optional[tuple[int, int]]:
    """``p = r^2 + m s^2`` with s >= 1 and r >= 0 minimal; None if impossible."""
    best = None
    s = 1
    while m * s * s <= p:
        rest = p - m * s * s
        r = math.isqrt(rest)
        if r * r == rest and (best is None or r < best[0]):
            best = (r, s)
        s += 1
    return best


_M88_SEVEN = frozenset({15, 23, 31, 47, 71})
_M88_ONE = frozenset({1, 9, 25, 49, 81})


def _along(q: int, m: int, direction: tuple[int, int, int]) -> Optional[IntQuat]:
    rep = rep_quadratic(q, m)
    if rep is None:
        return None
    r, s = rep
    x = (r, s * direction[0], s * direction[1], s * direction[2])
    return x if parity_ok(x) else None


def _m1(q: int) -> Optional[IntQuat]:
    rep = rep_quadratic(q, 1)
    if rep is None:
        return None
    r, s = rep
    odd, even = (r, s) if r % 2 else (s, r)
    return (odd, even, 0, 0)


def congruence_witness(p: int, l: int) -> Optional[CommuteWitness]:
    """Witness built from the congruence class of (p, l), or None."""
    _check_pair(p, l)
    x = y = None
    m = 0
    if p % 4 == 1 and l % 4 == 1:
        m, x, y = 1, _m1(p), _m1(l)
    elif p % 8 in (1, 3) and l % 8 in (1, 3):
        m, x, y = 2, _along(p, 2, (0, 1, 1)), _along(l, 2, (0, 1, 1))
    elif (p % 24, l % 24) in ((7, 7), (1, 7), (7, 1)):
        m, x, y = 6, _along(p, 6, (2, 1, 1)), _along(l, 6, (2, 1, 1))
    elif (
        (p % 88 in _M88_SEVEN and l % 88 in _M88_SEVEN)
        or (p % 88 in _M88_ONE and l % 88 in _M88_SEVEN)
        or (p % 88 in _M88_SEVEN and l % 88 in _M88_ONE)
    ):
        m, x, y = 22, _along(p, 22, (2, 3, 3)), _along(l, 22, (2, 3, 3))
    if x is None or y is None:
        return None
    return CommuteWitness(x, y, m)


def classify_mod8(p: int, l: int) -> Mod8Class:
    _check_pair(p, l)
    a, b = p % 8, l % 8
    if (a % 4 == 1 and b % 4 == 1) or (a in (1, 3) and b in (1, 3)):
        return Mod8Class.ALWAYS
    if a != 1 and b != 1 and a != b:
        return Mod8Class.NEVER
    return Mod8Class.DEPENDS


def table_pl() -> list[list[Mod8Class]]:
    """The 4x4 table indexed by residues (1, 3, 5, 7) mod 8 of p (rows) and l."""
    # representatives: the smallest primes in each residue class
    reps = {1: [17, 41], 3: [3, 11], 5: [5, 13], 7: [7, 23]}
    rows = []
    for a in (1, 3, 5, 7):
        row = []
        for b in (1, 3, 5, 7):
            row.append(classify_mod8(reps[a][0], reps[b][1]))
        rows.append(row)
    return rows

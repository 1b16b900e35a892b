"""Smith normal form, abelianization and derived-series quotients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ..errors import EnumerationOverflow, InfiniteAbelianization
from .presentation import Presentation
from .schreier import reidemeister_schreier
from .todd_coxeter import DEFAULT_COSET_LIMIT, Overflow, todd_coxeter
from .words import commutator, exponent_sums


def _fix_chain(diag: list[int]) -> list[int]:
    d = [abs(x) for x in diag]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i], d[j]
            g = math.gcd(a, b)
            d[i], d[j] = g, (a // g * b if g else 0)
    return d


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors of an integer matrix, ``min(rows, cols)`` of them.

    The result is a divisor chain d1 | d2 | ...; zeros (free directions)
    come last.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    diag: list[int] = []
    t = 0
    size = min(m, n)
    while t < size:
        # smallest nonzero entry of the remaining block becomes the pivot
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = a[i][t]
                if v:
                    q = v // piv
                    ri, rt = a[i], a[t]
                    for j in range(t, n):
                        if rt[j]:
                            ri[j] -= q * rt[j]
                    if ri[t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, n):
                v = rt[j]
                if v:
                    q = v // piv
                    for row in a:
                        if row[t]:
                            row[j] -= q * row[t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                break
            best = None
            for i in range(t + 1, m):
                if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), i, None)
            for j in range(t + 1, n):
                if rt[j] and (best is None or abs(rt[j]) < best[0]):
                    best = (abs(rt[j]), None, j)
            _, i, j = best
            if i is not None:
                a[t], a[i] = a[i], a[t]
            else:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(a[t][t])
        t += 1
    diag.extend([0] * (size - len(diag)))
    return _fix_chain(diag)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank x Z_d1 x ... x Z_dk with d1 | d2 | ... and each di >= 2."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisor chain of entries >= 2")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_divisors(cls, ngens: int, divisors: Sequence[int]) -> "AbelianGroup":
        nonzero = [d for d in divisors if d]
        return cls(ngens - len(nonzero), tuple(d for d in nonzero if d > 1))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self):
        """The order, or None when infinite."""
        return math.prod(self.torsion) if self.is_finite else None

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z{d}" for d in self.torsion]
        return " x ".join(parts) or "1"


def relation_matrix(pres: Presentation) -> list[list[int]]:
    return [exponent_sums(r, pres.ngens) for r in pres.relators]


def abelianization(pres: Presentation) -> AbelianGroup:
    mat = relation_matrix(pres)
    if not mat:
        return AbelianGroup(pres.ngens)
    return AbelianGroup.from_divisors(pres.ngens, smith_normal_form(mat))


def commutator_relators(pres: Presentation) -> list[tuple[int, ...]]:
    return [commutator((g + 1,), (h + 1,)) for g, h in combinations(range(pres.ngens), 2)]


def derived_subgroup_presentation(pres: Presentation, coset_limit: int = DEFAULT_COSET_LIMIT, transversal: str = "bfs") -> Presentation:
    """Presentation of G' via the regular table of G^ab and Reidemeister-Schreier."""
    ab = abelianization(pres)
    if not ab.is_finite:
        raise InfiniteAbelianization(f"abelianization {ab} is infinite")
    table = todd_coxeter(pres.with_added_relators(commutator_relators(pres)), (), coset_limit)
    if isinstance(table, Overflow):
        raise EnumerationOverflow(table, "enumeration of G/G'")
    return reidemeister_schreier(pres, table, transversal)


def derived_ab_chain(pres: Presentation, depth: int = 2, coset_limit: int = DEFAULT_COSET_LIMIT) -> list[AbelianGroup]:
    """``[G^ab, (G')^ab, ...]`` with ``depth`` entries."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    out = [abelianization(pres)]
    cur = pres
    while len(out) < depth:
        if not out[-1].is_finite:
            raise InfiniteAbelianization(f"level {len(out)} abelianization {out[-1]} is infinite")
        cur = derived_subgroup_presentation(cur, coset_limit)
        out.append(abelianization(cur))
    return out

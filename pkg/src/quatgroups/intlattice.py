"""Integer lattices given by generating vectors.

Row-style Hermite normal form with the unimodular transform, which gives
membership, index, coset representatives, integer solves and the relation
lattice of a generating list.
"""

from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence

Vector = tuple[int, ...]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf_with_transform(rows: Sequence[Sequence[int]], dim: int) -> tuple[list[list[int]], list[list[int]], int]:
    """Return ``(H, U, rank)`` with ``U @ rows == H``, U unimodular.

    The first ``rank`` rows of H are the Hermite basis (positive pivots,
    entries above each pivot reduced into [0, pivot)); the remaining rows
    of H are zero and the matching rows of U span the relations.
    """
    h = [list(map(int, r)) for r in rows]
    for r in h:
        if len(r) != dim:
            raise ValueError("vector of wrong dimension")
    m = len(h)
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    rank = 0
    pivots = []
    for col in range(dim):
        if rank == m:
            break
        for i in range(rank + 1, m):
            if h[i][col] == 0:
                continue
            a, b = h[rank][col], h[i][col]
            g, s, t = _xgcd(a, b)
            # [[s, t], [-b/g, a/g]] has determinant 1
            ag, bg = a // g, b // g
            ra, rb = h[rank], h[i]
            h[rank] = [s * x + t * y for x, y in zip(ra, rb)]
            h[i] = [-bg * x + ag * y for x, y in zip(ra, rb)]
            ua, ub = u[rank], u[i]
            u[rank] = [s * x + t * y for x, y in zip(ua, ub)]
            u[i] = [-bg * x + ag * y for x, y in zip(ua, ub)]
        if h[rank][col] == 0:
            continue
        if h[rank][col] < 0:
            h[rank] = [-x for x in h[rank]]
            u[rank] = [-x for x in u[rank]]
        pivots.append(col)
        piv = h[rank][col]
        for i in range(rank):
            q = h[i][col] // piv
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[rank])]
                u[i] = [x - q * y for x, y in zip(u[i], u[rank])]
        rank += 1
    return h, u, rank


class Lattice:
    """The subgroup of Z^dim generated by a list of vectors."""

    def __init__(self, generators: Sequence[Sequence[int]], dim: int):
        self.dim = dim
        self.generators = [tuple(map(int, g)) for g in generators]
        h, u, rank = hnf_with_transform(self.generators, dim) if self.generators else ([], [], 0)
        self.rank = rank
        self.basis: list[Vector] = [tuple(r) for r in h[:rank]]
        self._transform = u
        self.pivots = [next(j for j, x in enumerate(r) if x) for r in self.basis]

    def __repr__(self) -> str:
        return f"Lattice(basis={self.basis})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.basis)))

    def _reduce(self, v: Sequence[int]) -> tuple[list[int], list[int]]:
        """Coefficients along the basis and the remainder of v."""
        r = list(map(int, v))
        coeffs = []
        for b, j in zip(self.basis, self.pivots):
            q = r[j] // b[j]
            coeffs.append(q)
            if q:
                r = [x - q * y for x, y in zip(r, b)]
        return coeffs, r

    def __contains__(self, v) -> bool:
        _, r = self._reduce(v)
        return not any(r)

    def reduce(self, v: Sequence[int]) -> Vector:
        """Canonical representative of v modulo the lattice (full rank only)."""
        return tuple(self._reduce(v)[1])

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    def index(self) -> Optional[int]:
        """[Z^dim : L], or None when infinite."""
        if not self.is_full_rank:
            return None
        return math.prod(b[j] for b, j in zip(self.basis, self.pivots))

    def coset_reps(self) -> list[Vector]:
        """Vectors with 0 <= v_i < d_i, one per coset; lexicographic order."""
        if not self.is_full_rank:
            raise ValueError("infinitely many cosets")
        diag = [b[j] for b, j in zip(self.basis, self.pivots)]
        return [tuple(v) for v in itertools.product(*(range(d) for d in diag))]

    def solve(self, v: Sequence[int]) -> Optional[list[int]]:
        """Integer coefficients c with sum c_i * generators[i] == v, or None."""
        coeffs, r = self._reduce(v)
        if any(r):
            return None
        m = len(self.generators)
        out = [0] * m
        for c, urow in zip(coeffs, self._transform[: self.rank]):
            for i in range(m):
                out[i] += c * urow[i]
        return out

    def relations(self) -> list[Vector]:
        """Hermite basis of the integer relations among the generators."""
        kernel = [tuple(r) for r in self._transform[self.rank :]]
        if not kernel:
            return []
        return Lattice(kernel, len(self.generators)).basis

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(b in self for b in other.basis)

"""HLT coset enumeration.

Relators are traced from every live coset in order; undefined entries are
filled by new definitions, and coincidences are collapsed with a union-find
structure and a queue, following the standard HLT procedure in the
Handbook of Computational Group Theory (Holt, Eick, O'Brien), section 5.1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..errors import IncompatibleTable
from .presentation import Presentation
from .words import Word

DEFAULT_COSET_LIMIT = 1_000_000


def _col(a: int) -> int:
    return 2 * (a - 1) if a > 0 else 2 * (-a - 1) + 1


@dataclass(frozen=True)
class Overflow:
    """Enumeration gave up: more than ``limit`` cosets were defined."""

    limit: int
    defined: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class CosetTable:
    """Complete coset table.  Coset 0 is the subgroup itself.

    ``rows[c][2*g]`` is the image of coset c under generator g and
    ``rows[c][2*g+1]`` its image under g^-1.
    """

    ngens: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_cosets(self) -> int:
        return len(self.rows)

    @property
    def index(self) -> int:
        return len(self.rows)

    @property
    def action(self) -> list[list[int]]:
        """Per generator, the image of each coset."""
        return [[row[2 * g] for row in self.rows] for g in range(self.ngens)]

    def image(self, coset: int, letter: int) -> int:
        return self.rows[coset][_col(letter)]

    def trace(self, coset: int, word: Sequence[int]) -> int:
        rows = self.rows
        for a in word:
            coset = rows[coset][_col(a)]
        return coset

    def check(self, pres: Presentation, subgroup_gens: Sequence[Word] = ()) -> None:
        """Raise IncompatibleTable unless the table is a valid complete table."""
        if pres.ngens != self.ngens:
            raise IncompatibleTable("generator count differs from presentation")
        n = self.n_cosets
        for c, row in enumerate(self.rows):
            for g in range(self.ngens):
                d = row[2 * g]
                if not (0 <= d < n) or self.rows[d][2 * g + 1] != c:
                    raise IncompatibleTable(f"generator {g} is not a bijection at coset {c}")
        for r in pres.relators:
            for c in range(n):
                if self.trace(c, r) != c:
                    raise IncompatibleTable(f"relator {pres.format(r)} does not close at coset {c}")
        for w in subgroup_gens:
            if self.trace(0, w) != 0:
                raise IncompatibleTable("subgroup generator does not fix coset 0")

    def to_json(self) -> str:
        return json.dumps({"n_cosets": self.n_cosets, "action": self.action})

    @classmethod
    def from_json(cls, text: str) -> "CosetTable":
        d = json.loads(text)
        action = d["action"]
        n = d["n_cosets"]
        k = len(action)
        rows = [[-1] * (2 * k) for _ in range(n)]
        for g, perm in enumerate(action):
            for c, img in enumerate(perm):
                rows[c][2 * g] = img
                rows[img][2 * g + 1] = c
        return cls(k, tuple(tuple(r) for r in rows))


def todd_coxeter(
    pres: Presentation,
    subgroup_gens: Sequence[Sequence[int]] = (),
    coset_limit: int = DEFAULT_COSET_LIMIT,
) -> Union[CosetTable, Overflow]:
    """Enumerate the cosets of the subgroup generated by ``subgroup_gens``."""
    if coset_limit < 1:
        raise ValueError("coset_limit must be positive")
    ncols = 2 * pres.ngens
    table: list[list[int]] = [[-1] * ncols]
    parent: list[int] = [0]
    rels = [[_col(a) for a in r] for r in pres.relators]
    subs = [[_col(a) for a in w] for w in subgroup_gens if w]

    class _Overflow(Exception):
        pass

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c: int, x: int) -> int:
        n = len(table)
        if n >= coset_limit:
            raise _Overflow
        table.append([-1] * ncols)
        parent.append(n)
        table[c][x] = n
        table[n][x ^ 1] = c
        return n

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []

        def merge(u: int, v: int) -> None:
            u, v = find(u), find(v)
            if u == v:
                return
            if u > v:
                u, v = v, u
            parent[v] = u
            queue.append(v)

        merge(a, b)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    continue
                xi = x ^ 1
                if table[d][xi] == g:
                    table[d][xi] = -1
                f1 = find(g)
                d1 = find(d)
                if table[f1][x] >= 0:
                    merge(d1, table[f1][x])
                elif table[d1][xi] >= 0:
                    merge(f1, table[d1][xi])
                else:
                    table[f1][x] = d1
                    table[d1][xi] = f1

    def scan_and_fill(c: int, w: list[int]) -> None:
        f = c
        b = c
        i = 0
        j = len(w) - 1
        while True:
            while i <= j:
                nxt = table[f][w[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                nxt = table[b][w[j] ^ 1]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    try:
        for w in subs:
            scan_and_fill(0, w)
            if parent[0] != 0:
                break
        c = 0
        while c < len(table):
            if parent[c] == c:
                for r in rels:
                    scan_and_fill(c, r)
                    if parent[c] != c:
                        break
                if parent[c] == c:
                    row = table[c]
                    for x in range(ncols):
                        if row[x] < 0:
                            define(c, x)
            c += 1
    except _Overflow:
        return Overflow(coset_limit, len(table))

    return _standardize(pres.ngens, table, parent)


def _standardize(ngens: int, table: list[list[int]], parent: list[int]) -> CosetTable:
    """Renumber live cosets in breadth-first order from coset 0."""
    order = [0]
    label = {0: 0}
    i = 0
    ncols = 2 * ngens
    while i < len(order):
        c = order[i]
        i += 1
        for x in range(ncols):
            d = table[c][x]
            while parent[d] != d:
                d = parent[d]
            if d not in label:
                label[d] = len(order)
                order.append(d)
    rows = []
    for c in order:
        row = []
        for x in range(ncols):
            d = table[c][x]
            while parent[d] != d:
                d = parent[d]
            row.append(label[d])
        rows.append(tuple(row))
    return CosetTable(ngens, tuple(rows))


def coset_index(pres: Presentation, subgroup_gens: Sequence[Sequence[int]] = (), coset_limit: int = DEFAULT_COSET_LIMIT) -> Optional[int]:
    """The index, or None when the enumeration overflowed."""
    t = todd_coxeter(pres, subgroup_gens, coset_limit)
    return t.index if isinstance(t, CosetTable) else None

"""Reidemeister-Schreier presentations of finite-index subgroups."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EnumerationOverflow, IncompatibleTable
from .presentation import Presentation
from .todd_coxeter import CosetTable, Overflow, _col
from .words import Word, free_reduce, inverse


@dataclass(frozen=True)
class SchreierData:
    """Transversal and Schreier generators for a coset table.

    ``tree[d]`` is the (coset, column) edge through which coset d was first
    reached; ``generators`` lists the non-tree edges (coset, generator).
    """

    table: CosetTable
    tree: dict
    generators: tuple[tuple[int, int], ...]
    transversal_words: tuple[Word, ...]

    def word_of(self, k: int) -> Word:
        """Schreier generator k as a word in the parent group's generators."""
        c, g = self.generators[k]
        d = self.table.rows[c][2 * g]
        return free_reduce(self.transversal_words[c] + (g + 1,) + inverse(self.transversal_words[d]))


def schreier_data(table: CosetTable, transversal: str = "bfs") -> SchreierData:
    if transversal not in ("bfs", "dfs"):
        raise ValueError("transversal must be 'bfs' or 'dfs'")
    rows = table.rows
    ncols = 2 * table.ngens
    tree: dict[int, tuple[int, int]] = {}
    words: dict[int, Word] = {0: ()}
    if transversal == "bfs":
        frontier = [0]
        i = 0
        while i < len(frontier):
            c = frontier[i]
            i += 1
            for x in range(ncols):
                d = rows[c][x]
                if d not in words:
                    tree[d] = (c, x)
                    words[d] = words[c] + ((x // 2 + 1) if x % 2 == 0 else -(x // 2 + 1),)
                    frontier.append(d)
    else:
        stack = [0]
        while stack:
            c = stack[-1]
            for x in range(ncols):
                d = rows[c][x]
                if d not in words:
                    tree[d] = (c, x)
                    words[d] = words[c] + ((x // 2 + 1) if x % 2 == 0 else -(x // 2 + 1),)
                    stack.append(d)
                    break
            else:
                stack.pop()
    if len(words) != table.n_cosets:
        raise IncompatibleTable("coset table is not connected")
    tree_edges = set()
    for d, (c, x) in tree.items():
        # record as the positive-direction edge (coset, generator)
        if x % 2 == 0:
            tree_edges.add((c, x // 2))
        else:
            tree_edges.add((d, x // 2))
    gens = tuple(
        (c, g) for c in range(table.n_cosets) for g in range(table.ngens) if (c, g) not in tree_edges
    )
    tw = tuple(words[c] for c in range(table.n_cosets))
    return SchreierData(table, tree, gens, tw)


def reidemeister_schreier(pres: Presentation, table: CosetTable, transversal: str = "bfs") -> Presentation:
    """Presentation of the subgroup described by ``table``.

    Generators are the Schreier generators, named ``<gen>_c<coset>``;
    relators are the rewrites of every relator of ``pres`` at every coset.
    """
    if isinstance(table, Overflow):
        raise EnumerationOverflow(table)
    table.check(pres)
    data = schreier_data(table, transversal)
    index = {edge: k for k, edge in enumerate(data.generators)}
    rows = table.rows
    names = tuple(f"{pres.generator_names[g]}_c{c}" for c, g in data.generators)
    rels = []
    for r in pres.relators:
        for start in range(table.n_cosets):
            c = start
            out: list[int] = []
            for a in r:
                if a > 0:
                    g = a - 1
                    k = index.get((c, g))
                    if k is not None:
                        out.append(k + 1)
                    c = rows[c][2 * g]
                else:
                    g = -a - 1
                    d = rows[c][2 * g + 1]
                    k = index.get((d, g))
                    if k is not None:
                        out.append(-(k + 1))
                    c = d
            if c != start:
                raise IncompatibleTable("relator does not close in the table")
            rels.append(tuple(out))
    return Presentation(names, tuple(rels))


def rewrite(data: SchreierData, word, start: int = 0) -> Word:
    """Rewrite a word that stabilizes coset ``start`` in Schreier generators."""
    index = {edge: k for k, edge in enumerate(data.generators)}
    rows = data.table.rows
    c = start
    out: list[int] = []
    for a in word:
        if a > 0:
            k = index.get((c, a - 1))
            if k is not None:
                out.append(k + 1)
            c = rows[c][_col(a)]
        else:
            d = rows[c][_col(a)]
            k = index.get((d, -a - 1))
            if k is not None:
                out.append(-(k + 1))
            c = d
    if c != start:
        raise IncompatibleTable("word does not stabilize the coset")
    return free_reduce(out)

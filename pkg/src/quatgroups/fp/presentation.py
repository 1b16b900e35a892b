"""Finite presentations and their text / JSON forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import ParseError
from .words import Word, canonical_cyclic, cyclic_reduce, format_word, parse_word


@dataclass(frozen=True)
class Presentation:
    """Generators plus freely and cyclically reduced relators.

    Trivial relators are dropped; duplicates are kept only once (up to
    cyclic rotation and inversion) when ``dedupe`` is requested.
    """

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        k = len(names)
        rels = []
        for r in self.relators:
            for a in r:
                if a == 0 or abs(a) > k:
                    raise ValueError(f"relator letter {a} out of range for {k} generators")
            w = cyclic_reduce(r)
            if w:
                rels.append(w)
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generator_names)

    def format(self, word: Sequence[int]) -> str:
        return format_word(word, self.generator_names)

    def with_added_relators(self, extra: Iterable[Sequence[int]]) -> "Presentation":
        return Presentation(self.generator_names, self.relators + tuple(tuple(w) for w in extra))

    def deduplicated(self) -> "Presentation":
        seen = set()
        out = []
        for r in self.relators:
            c = canonical_cyclic(r)
            if c not in seen:
                seen.add(c)
                out.append(r)
        return Presentation(self.generator_names, tuple(out))

    def relator_set(self) -> frozenset:
        """Relators up to cyclic rotation and inversion."""
        return frozenset(canonical_cyclic(r) for r in self.relators)

    # -- serialization ------------------------------------------------------

    def to_text(self) -> str:
        gens = ", ".join(self.generator_names)
        rels = ", ".join(self.format(r) for r in self.relators)
        return f"< {gens} | {rels} >"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        s = text.strip()
        if not (s.startswith("<") and s.endswith(">")):
            raise ParseError("presentation must look like '< a, b | r1, r2 >'")
        body = s[1:-1]
        if "|" in body:
            gens_part, rels_part = body.split("|", 1)
        else:
            gens_part, rels_part = body, ""
        names = tuple(n.strip() for n in gens_part.split(",") if n.strip())
        rels = tuple(parse_word(r, names) for r in rels_part.split(",") if r.strip())
        return cls(names, rels)

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generator_names),
            "relators": [self.format(r) for r in self.relators],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Presentation":
        names = tuple(d["generators"])
        return cls(names, tuple(parse_word(r, names) for r in d["relators"]))

    def __str__(self) -> str:
        return self.to_text()


def free_group(names: Sequence[str]) -> Presentation:
    return Presentation(tuple(names), ())

"""Words in a free group.

A word is a tuple of nonzero ints: ``g+1`` is generator ``g`` and ``-(g+1)``
its inverse.  Powers are always expanded.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from ..errors import ParseError

Word = tuple[int, ...]


def letter(gen: int, exp: int = 1) -> int:
    return (gen + 1) if exp > 0 else -(gen + 1)


def letters(word: Word) -> list[tuple[int, int]]:
    """The word as (generator index, exponent) pairs."""
    return [(abs(a) - 1, 1 if a > 0 else -1) for a in word]


def from_pairs(pairs: Iterable[tuple[int, int]]) -> Word:
    out: list[int] = []
    for g, e in pairs:
        out.extend([letter(g, e)] * abs(e))
    return tuple(out)


def free_reduce(word: Sequence[int]) -> Word:
    stack: list[int] = []
    for a in word:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1]


def inverse(word: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(word))


def power(word: Sequence[int], n: int) -> Word:
    if n < 0:
        return free_reduce(inverse(word) * (-n))
    return free_reduce(tuple(word) * n)


def concat(*words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """``u v u^-1 v^-1``, freely reduced."""
    return concat(u, v, inverse(u), inverse(v))


def exponent_sums(word: Sequence[int], ngens: int) -> list[int]:
    sums = [0] * ngens
    for a in word:
        sums[abs(a) - 1] += 1 if a > 0 else -1
    return sums


def _letter_key(a: int) -> tuple[int, int]:
    return (abs(a), 0 if a > 0 else 1)


def rotations(word: Sequence[int]) -> list[Word]:
    w = tuple(word)
    return [w[i:] + w[:i] for i in range(len(w))] or [()]


def canonical_cyclic(word: Sequence[int], allow_inverse: bool = True) -> Word:
    """Least cyclic rotation (optionally also of the inverse) after cyclic reduction."""
    w = cyclic_reduce(word)
    cands = rotations(w)
    if allow_inverse:
        cands += rotations(inverse(w))
    return min(cands, key=lambda c: [_letter_key(a) for a in c])


def is_conjugate(u: Sequence[int], v: Sequence[int]) -> bool:
    """Conjugacy in the free group: cyclic reductions are rotations of each other."""
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    return canonical_cyclic(cu, allow_inverse=False) == canonical_cyclic(cv, allow_inverse=False)


# -- text --------------------------------------------------------------------

_COMPACT = re.compile(r"([A-Za-z])(?:\^(-?\d+))?")
_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def _single_letter_names(names: Sequence[str]) -> bool:
    return all(len(n) == 1 and n.islower() for n in names)


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse a word over the given generator names.

    When every name is a single lowercase letter the compact form is used:
    ``"baabaBaaaaBa"`` with uppercase letters for inverses and optional
    ``^n`` powers.  Otherwise tokens are separated by ``*`` or whitespace,
    each a name with an optional ``^n`` (for example ``"a1*b3^-1*a2"``).
    """
    s = text.strip()
    if s in ("", "1", "e", "()"):
        return ()
    index = {n: i for i, n in enumerate(names)}
    pairs: list[tuple[int, int]] = []
    if _single_letter_names(names):
        body = re.sub(r"[\s*]", "", s)
        pos = 0
        while pos < len(body):
            m = _COMPACT.match(body, pos)
            if not m:
                raise ParseError(f"cannot parse word {text!r} at {pos}")
            ch, exp = m.group(1), int(m.group(2) or 1)
            if ch in index:
                g = index[ch]
            elif ch.lower() in index:
                g, exp = index[ch.lower()], -exp
            else:
                raise ParseError(f"unknown generator {ch!r}")
            pairs.append((g, exp))
            pos = m.end()
    else:
        for tok in re.split(r"[\s*]+", s):
            if not tok:
                continue
            m = _TOKEN.match(tok)
            if not m:
                raise ParseError(f"cannot parse token {tok!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            if name in index:
                g = index[name]
            elif name[0].isupper() and (name[0].lower() + name[1:]) in index:
                g, exp = index[name[0].lower() + name[1:]], -exp
            else:
                raise ParseError(f"unknown generator {name!r}")
            pairs.append((g, exp))
    return free_reduce(from_pairs(pairs))


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    if not word:
        return "1"
    if _single_letter_names(names):
        return "".join(names[abs(a) - 1] if a > 0 else names[abs(a) - 1].upper() for a in word)
    parts = []
    for a in word:
        n = names[abs(a) - 1]
        parts.append(n if a > 0 else f"{n}^-1")
    return "*".join(parts)


def format_word_powers(word: Sequence[int], names: Sequence[str]) -> str:
    """Human-oriented form with collected powers, e.g. ``y x^2 y X Y^3``."""
    if not word:
        return "1"
    single = _single_letter_names(names)
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        a, k = word[i], j - i
        n = names[abs(a) - 1]
        if single:
            sym = n if a > 0 else n.upper()
            out.append(sym if k == 1 else f"{sym}^{k}")
        else:
            e = k if a > 0 else -k
            out.append(n if e == 1 else f"{n}^{e}")
        i = j
    return " ".join(out)

"""Presentations of the lattice groups Gamma_{p,l} and of Q_{p,l}.

Gamma_{p,l} is modeled projectively: a generator is an orbit representative
of X_p or X_l and its inverse letter is the conjugate quaternion.  Every
relator has the shape ``alpha beta alpha~ beta~`` coming from the two ways of
factoring an integral quaternion of norm p*l.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .commuting import _check_pair
from .errors import CountMismatch, FactorizationMissing, KernelNotGenerated
from .fp.abelian import abelianization
from .fp.presentation import Presentation
from .fp.words import Word, canonical_cyclic, commutator, concat, power
from .intlattice import Lattice
from .quat import CentralScalar, ProjQuat, Quat, as_central, eval_word, proj_normalize_int, scalar_decompose
from .xsets import enumerate_Xq, orbit_reps

IntQuat = tuple[int, int, int, int]
SIGN_VECTOR = (2, 0, 0)


def _conj(c: Sequence[int]) -> IntQuat:
    return (c[0], -c[1], -c[2], -c[3])


@dataclass(frozen=True)
class GammaPresentation:
    pres: Presentation
    gen_quats: tuple[IntQuat, ...]
    p: int
    l: int

    @property
    def n_p(self) -> int:
        return (self.p + 1) // 2

    def values(self) -> list[Quat]:
        return [Quat.from_int(c) for c in self.gen_quats]

    def word(self, text: str) -> Word:
        return self.pres.word(text)

    def to_dict(self) -> dict:
        d = self.pres.to_dict()
        d.update(p=self.p, l=self.l, gen_quats={n: list(c) for n, c in zip(self.pres.generator_names, self.gen_quats)})
        return d


def _check_reps(reps: Sequence[Sequence[int]], q: int) -> list[IntQuat]:
    xq = enumerate_Xq(q)
    out = [tuple(int(v) for v in r) for r in reps]
    if len(out) != (q + 1) // 2:
        raise FactorizationMissing(f"need {(q + 1) // 2} representatives for X_{q}, got {len(out)}")
    seen = set()
    for r in out:
        if r not in xq:
            raise FactorizationMissing(f"{r} is not in X_{q}")
        orbit = {r, _conj(r), tuple(-v for v in r), tuple(-v for v in _conj(r))}
        if seen & orbit:
            raise FactorizationMissing(f"{r} repeats an orbit of X_{q}")
        seen |= orbit
    return out  # type: ignore[return-value]


def _letter_table(reps: Sequence[IntQuat], offset: int) -> tuple[list[int], dict[ProjQuat, int], dict[int, IntQuat]]:
    """Letters a1, a2, ..., a2^-1, a1^-1 with their quaternions."""
    n = len(reps)
    order = [offset + i + 1 for i in range(n)] + [-(offset + i + 1) for i in reversed(range(n))]
    value = {}
    lookup = {}
    for a in order:
        c = reps[abs(a) - offset - 1]
        q = c if a > 0 else _conj(c)
        value[a] = q
        lookup[proj_normalize_int(q)] = a
    return order, lookup, value


def _imul(a: Sequence[int], b: Sequence[int]) -> IntQuat:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def build_gamma_presentation(
    p: int,
    l: int,
    reps_p: Optional[Sequence[Sequence[int]]] = None,
    reps_l: Optional[Sequence[Sequence[int]]] = None,
) -> GammaPresentation:
    """Presentation of Gamma_{p,l} on orbit representatives of X_p then X_l.

    Letters are scanned in the order a1, a2, ..., a2^-1, a1^-1 (and the same
    for the b's); each relator is spelled as it is first met.
    """
    _check_pair(p, l)
    rp = _check_reps(reps_p if reps_p is not None else orbit_reps(enumerate_Xq(p)), p)
    rl = _check_reps(reps_l if reps_l is not None else orbit_reps(enumerate_Xq(l)), l)
    np_, nl = len(rp), len(rl)
    names = tuple(f"a{i + 1}" for i in range(np_)) + tuple(f"b{j + 1}" for j in range(nl))
    a_order, a_lookup, a_val = _letter_table(rp, 0)
    b_order, b_lookup, b_val = _letter_table(rl, np_)

    seen = set()
    rels: list[Word] = []
    for alpha in a_order:
        for beta in b_order:
            m = _imul(a_val[alpha], b_val[beta])
            found = None
            for beta2 in b_order:
                # alpha beta = beta2 alpha2  =>  alpha2 ~ conj(beta2) * m
                alpha2 = a_lookup.get(proj_normalize_int(_imul(_conj(b_val[beta2]), m)))
                if alpha2 is not None:
                    if found is not None:
                        raise FactorizationMissing(f"two factorizations for letters {alpha}, {beta}")
                    found = (beta2, alpha2)
            if found is None:
                raise FactorizationMissing(f"no factorization for letters {alpha}, {beta}")
            beta2, alpha2 = found
            r = (alpha, beta, -alpha2, -beta2)
            key = canonical_cyclic(r)
            if key not in seen:
                seen.add(key)
                rels.append(r)
    expected = (p + 1) * (l + 1) // 4
    if len(rels) != expected:
        raise CountMismatch(f"found {len(rels)} relators, expected {expected}")
    return GammaPresentation(Presentation(names, tuple(rels)), tuple(rp + rl), p, l)


def relator_evaluations(gp: GammaPresentation) -> list[CentralScalar]:
    vals = gp.values()
    return [as_central(eval_word(r, vals), gp.p, gp.l) for r in gp.pres.relators]


def _kernel_order_key(item):
    i, v = item
    return (abs(v.exp_p) + abs(v.exp_l), 0 if v.sign > 0 else 1, i)


@dataclass(frozen=True)
class QExtension:
    """Presentation of Q_{p,l} as a central extension of Gamma_{p,l}.

    ``kernel`` lists the indices (into the Gamma relators) of the relators
    whose values generate <-1, p, l>, in increasing order.
    """

    gamma: GammaPresentation
    pres: Presentation
    evaluations: tuple[CentralScalar, ...]
    kernel: tuple[int, ...]
    relations: tuple[tuple[int, ...], ...]

    def _lattice(self) -> Lattice:
        return Lattice([self.evaluations[i].vector for i in self.kernel] + [SIGN_VECTOR], 3)

    def exponents(self, scalar: CentralScalar) -> list[int]:
        """Exponents of the kernel relator words, reduced modulo their relations."""
        sol = self._lattice().solve(scalar.vector)
        if sol is None:
            raise KernelNotGenerated(f"{scalar} is not in the span of the relator values")
        e = sol[: len(self.kernel)]
        for rel in self.relations:
            j = next(k for k, x in enumerate(rel) if x)
            q = e[j] // rel[j]
            if q:
                e = [a - q * b for a, b in zip(e, rel)]
        return e

    def scalar_word(self, scalar) -> Word:
        """A word in the generators whose value is the given central scalar."""
        if not isinstance(scalar, CentralScalar):
            scalar = scalar_decompose(scalar, self.gamma.p, self.gamma.l)
        e = self.exponents(scalar)
        rels = self.gamma.pres.relators
        return concat(*(power(rels[i], c) for i, c in zip(self.kernel, e)))

    def element_word(self, x: Sequence[int]) -> Word:
        """Word for an element of X_p or X_l in the ambient generators."""
        x = tuple(int(v) for v in x)
        gp = self.gamma
        for g, c in enumerate(gp.gen_quats):
            q = gp.p if g < gp.n_p else gp.l
            for sgn in (1, -1):
                if x == tuple(sgn * v for v in c):
                    return concat(self.scalar_word(sgn), (g + 1,))
                if x == tuple(sgn * v for v in _conj(c)):
                    return concat(self.scalar_word(sgn * q), (-(g + 1),))
        raise ValueError(f"{x} is not plus or minus a generator or its conjugate")

    def to_dict(self) -> dict:
        d = self.pres.to_dict()
        d["gen_quats"] = {n: list(c) for n, c in zip(self.pres.generator_names, self.gamma.gen_quats)}
        d["kernel_relators"] = [self.gamma.pres.format(self.gamma.pres.relators[i]) for i in self.kernel]
        return d


def build_Q_extension(gp: GammaPresentation) -> QExtension:
    evals = relator_evaluations(gp)
    full = Lattice([v.vector for v in evals] + [SIGN_VECTOR], 3)
    if full.index() != 1:
        raise KernelNotGenerated(f"relator values {[str(v) for v in evals]} do not generate <-1, {gp.p}, {gp.l}>")

    chosen: list[int] = []
    cur = Lattice([SIGN_VECTOR], 3)
    for i, v in sorted(enumerate(evals), key=_kernel_order_key):
        if v.vector not in cur:
            chosen.append(i)
            cur = Lattice([evals[j].vector for j in chosen] + [SIGN_VECTOR], 3)
    chosen.sort()
    k = len(chosen)
    lat = Lattice([evals[i].vector for i in chosen] + [SIGN_VECTOR], 3)
    kernel_rel = [r[:k] for r in lat.relations()]
    relations = tuple(tuple(r) for r in Lattice(kernel_rel, k).basis) if kernel_rel else ()

    ext = QExtension(gp, gp.pres, tuple(evals), tuple(chosen), relations)
    rels = gp.pres.relators
    out: list[Word] = []
    for g in range(gp.pres.ngens):
        for i in chosen:
            out.append(commutator((g + 1,), rels[i]))
    for rel in relations:
        out.append(concat(*(power(rels[i], c) for i, c in zip(chosen, rel))))
    for i, v in enumerate(evals):
        if i in chosen:
            continue
        e = dict(zip(chosen, (-c for c in ext.exponents(v))))
        e[i] = 1
        out.append(concat(*(power(rels[j], e[j]) for j in sorted(e))))
    pres = Presentation(gp.pres.generator_names, tuple(out))
    return QExtension(gp, pres, tuple(evals), tuple(chosen), relations)


def build_Q_presentation(gp: GammaPresentation) -> Presentation:
    return build_Q_extension(gp).pres


def minus_one_word(ext: QExtension) -> Word:
    return ext.scalar_word(-1)


def ambient_gamma(p: int, l: int) -> GammaPresentation:
    """A Gamma presentation whose generators generate all of Q_{p,l}.

    The default orbit representatives are tried first.  If their relator
    values miss part of <-1, p, l> (for (3, 7) they miss -1), representative
    signs are flipped, trying sign vectors in ``itertools.product`` order.
    Negating a representative keeps it in its orbit, so the result is
    still a valid transversal.
    """
    rp = orbit_reps(enumerate_Xq(p))
    rl = orbit_reps(enumerate_Xq(l))
    reps = rp + rl
    for signs in itertools.product((1, -1), repeat=len(reps)):
        rr = [tuple(s * v for v in c) for s, c in zip(signs, reps)]
        gp = build_gamma_presentation(p, l, rr[: len(rp)], rr[len(rp) :])
        vecs = [v.vector for v in relator_evaluations(gp)]
        if Lattice(vecs + [SIGN_VECTOR], 3).index() == 1:
            return gp
    raise KernelNotGenerated(f"no signed transversal generates <-1, {p}, {l}>")


def check_minus_one_in_derived(p: int, l: int) -> bool:
    """False when adjoining -1 changes the abelianization of Q_{p,l}.

    A changed abelianization proves -1 is not in the derived subgroup; an
    unchanged one is reported as True but proves nothing by itself.
    """
    ext = build_Q_extension(ambient_gamma(p, l))
    quotient = ext.pres.with_added_relators([minus_one_word(ext)])
    return abelianization(ext.pres) == abelianization(quotient)


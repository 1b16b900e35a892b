"""Centers of two-generator subgroups <x, y> of Q_{p,l}.

The lower bound for the center comes from cycles in the Cayley graph of the
projective image: two words landing on the same projective class differ by
a central scalar.  The upper bound is <-1, p, l>; every coset of the lower
bound is excluded by a coset enumeration in the presentation of Q_{p,l}.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CenterNotGenerated, CommutingInput, NotInT
from .fp.abelian import AbelianGroup, abelianization, derived_ab_chain
from .fp.presentation import Presentation
from .fp.todd_coxeter import DEFAULT_COSET_LIMIT, Overflow, todd_coxeter
from .fp.words import Word, commutator, concat, inverse, power
from .gamma import SIGN_VECTOR, ambient_gamma, build_Q_extension
from .intlattice import Lattice
from .quat import CentralScalar, Quat, commutes, int_norm, normalize_int, scalar_decompose
from .xsets import check_odd_prime, is_prime, odd_primes, parity_ok

IntQuat = tuple[int, int, int, int]
DEFAULT_RADIUS = 10


# -- central subgroups --------------------------------------------------------


class CentralSubgroup:
    """Subgroup of <-1, p, l> generated by central scalars.

    Elements are points of Z/2 x Z x Z, so the subgroup is stored as a
    lattice in Z^3 containing (2, 0, 0).
    """

    def __init__(self, generators: Sequence[CentralScalar], p: int, l: int):
        self.p, self.l = p, l
        self.generators = tuple(generators)
        for g in self.generators:
            if (g.p, g.l) != (p, l):
                raise ValueError("generator over different primes")
        self.lattice = Lattice([g.vector for g in self.generators] + [SIGN_VECTOR], 3)

    @classmethod
    def from_values(cls, values, p: int, l: int) -> "CentralSubgroup":
        return cls([scalar_decompose(v, p, l) for v in values], p, l)

    def __contains__(self, s) -> bool:
        if not isinstance(s, CentralScalar):
            s = scalar_decompose(s, self.p, self.l)
        return s.vector in self.lattice

    def __eq__(self, other) -> bool:
        return isinstance(other, CentralSubgroup) and (self.p, self.l) == (other.p, other.l) and self.lattice == other.lattice

    def __le__(self, other: "CentralSubgroup") -> bool:
        return other.lattice.contains_lattice(self.lattice)

    def index(self) -> Optional[int]:
        """Index in <-1, p, l>; None when infinite."""
        return self.lattice.index()

    def coset_reps(self) -> list[CentralScalar]:
        """Coset representatives, the trivial coset first."""
        return [CentralScalar.from_vector(v, self.p, self.l) for v in self.lattice.coset_reps()]

    def basis(self) -> list[CentralScalar]:
        """Reduced generators read off the Hermite basis (trivial rows dropped)."""
        out = []
        for b in self.lattice.basis:
            s = CentralScalar.from_vector(b, self.p, self.l)
            if not s.is_one():
                out.append(s)
        return out

    def to_dict(self) -> dict:
        return {"generators": [str(s) for s in self.basis()], "index": self.index()}

    def __repr__(self) -> str:
        return f"CentralSubgroup({[str(s) for s in self.basis()]})"


class TorsionStatus(enum.Enum):
    TORSION_FREE = "torsion-free"
    HAS_TORSION = "has torsion"


def torsion_status(c: CentralSubgroup) -> TorsionStatus:
    return TorsionStatus.HAS_TORSION if -1 in c else TorsionStatus.TORSION_FREE


class _NotApplicable:
    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "NotApplicable"


NotApplicable = _NotApplicable()


def abelianization_by_norms(norm_x: tuple[int, int], norm_y: tuple[int, int]):
    """Z x Z when the exponent matrix of the two norms is nonsingular."""
    (r1, s1), (r2, s2) = norm_x, norm_y
    if r1 * s2 - r2 * s1 == 0:
        return NotApplicable
    return AbelianGroup(2)


# -- Cayley balls ---------------------------------------------------------------


def _imul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


class _Ball:
    """Breadth-first ball in the Cayley graph of <x, y> on letters x, y, X, Y.

    Each node is a value ``lam * prim`` with prim primitive and sign-normalized.
    In projective mode nodes are identified by prim alone, in exact mode by
    (prim, lam).
    """

    LETTERS = (1, 2, -1, -2)

    def __init__(self, x: Sequence[int], y: Sequence[int], exact: bool):
        self.exact = exact
        gens = {}
        for g, c in ((1, tuple(x)), (2, tuple(y))):
            n = int_norm(c)
            gens[g] = (c, Fraction(1))
            gens[-g] = ((c[0], -c[1], -c[2], -c[3]), Fraction(1, n))
        self.gens = gens
        self.prim = [(1, 0, 0, 0)]
        self.lam = [Fraction(1)]
        self.parent = [-1]
        self.letter = [0]
        self.dist = [0]
        self.index = {self._key((1, 0, 0, 0), Fraction(1)): 0}

    def _key(self, prim, lam):
        return (prim, lam) if self.exact else prim

    def step(self, u: int, a: int):
        c, scale = self.gens[a]
        prim, g = normalize_int(_imul(self.prim[u], c))
        return prim, self.lam[u] * g * scale

    def add(self, u: int, a: int, prim, lam) -> int:
        v = len(self.prim)
        self.prim.append(prim)
        self.lam.append(lam)
        self.parent.append(u)
        self.letter.append(a)
        self.dist.append(self.dist[u] + 1)
        self.index[self._key(prim, lam)] = v
        return v

    def word(self, v: int) -> Word:
        out = []
        while v > 0:
            out.append(self.letter[v])
            v = self.parent[v]
        return tuple(reversed(out))

    def value(self, v: int) -> Quat:
        return Quat.from_int(self.prim[v]) * self.lam[v]

    def explore(self, radius: int):
        """Grow to ``radius`` and yield closing edges ``(u, letter, v, ratio)``.

        ``ratio`` is the scalar value of ``word(u) letter word(v)^-1``.  Edges
        out of the outermost layer are scanned without adding nodes.
        """
        u = 0
        while u < len(self.prim):
            d = self.dist[u]
            back = -self.letter[u]
            for a in self.LETTERS:
                if a == back:
                    continue
                prim, lam = self.step(u, a)
                v = self.index.get(self._key(prim, lam))
                if v is None:
                    if d < radius:
                        self.add(u, a, prim, lam)
                else:
                    yield u, a, v, lam / self.lam[v]
            u += 1


def _check_pair_input(x: Sequence[int], y: Sequence[int]) -> None:
    qx, qy = Quat.from_int(x), Quat.from_int(y)
    if qx.is_zero or qy.is_zero:
        raise NotInT("generators must be nonzero")
    if commutes(qx, qy):
        raise CommutingInput(f"{tuple(x)} and {tuple(y)} commute")


@dataclass(frozen=True)
class BallScan:
    radius: int
    elements_visited: int
    scalars_found: tuple[CentralScalar, ...]
    layer_sizes: tuple[int, ...] = ()
    witnesses: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "elements_visited": self.elements_visited,
            "scalars_found": [str(s) for s in self.scalars_found],
            "layer_sizes": list(self.layer_sizes),
        }


def _primes_for(x: Sequence[int], y: Sequence[int]) -> tuple[int, int]:
    """The primes p, l with |x|^2 = p and |y|^2 = l; an auxiliary l when equal."""
    p, l = int_norm(x), int_norm(y)
    for q in (p, l):
        if not is_prime(q) or q == 2:
            raise NotInT(f"norm {q} is not an odd prime")
    if p == l:
        l = next(q for q in odd_primes(p + 100) if q != p)
    return p, l


def ball_scan(x: Sequence[int], y: Sequence[int], radius: int, p: Optional[int] = None, l: Optional[int] = None) -> BallScan:
    """Central scalars from cycles of length at most ``2*radius + 1``."""
    if radius < 1:
        raise ValueError("radius must be positive")
    x, y = tuple(x), tuple(y)
    _check_pair_input(x, y)
    if p is None or l is None:
        p, l = _primes_for(x, y)
    ball = _Ball(x, y, exact=False)
    found: dict[CentralScalar, Word] = {}
    for u, a, v, ratio in ball.explore(radius):
        if ratio == 1:
            continue
        s = scalar_decompose(ratio, p, l)
        if s not in found:
            found[s] = concat(ball.word(u), (a,), inverse(ball.word(v)))
    scalars = tuple(sorted(found, key=lambda s: (abs(s.exp_p) + abs(s.exp_l), s.vector)))
    layers = [0] * (radius + 1)
    for d in ball.dist:
        layers[d] += 1
    return BallScan(radius, len(ball.prim), scalars, tuple(layers), found)


def ball_elements(x: Sequence[int], y: Sequence[int], radius: int, exact: bool = True) -> list[tuple[Word, Quat]]:
    """Every node of the ball with its first word and exact value."""
    ball = _Ball(tuple(x), tuple(y), exact)
    for _ in ball.explore(radius):
        pass
    return [(ball.word(v), ball.value(v)) for v in range(len(ball.prim))]


class RelatorMode(enum.Enum):
    PROJECTIVE = "projective"
    EXACT = "exact"


def shortest_relators(x: Sequence[int], y: Sequence[int], mode: RelatorMode, max_len: int) -> Optional[tuple[int, list[Word]]]:
    """Length of the shortest relator with every closing word of that length."""
    mode = RelatorMode(mode)
    ball = _Ball(tuple(x), tuple(y), exact=mode is RelatorMode.EXACT)
    best = None
    words: list[Word] = []
    for u, a, v, ratio in ball.explore(max_len // 2):
        if 2 * ball.dist[u] > max_len or (best is not None and 2 * ball.dist[u] > best):
            break
        n = ball.dist[u] + ball.dist[v] + 1
        if n > max_len or (best is not None and n > best):
            continue
        if mode is RelatorMode.EXACT and ratio != 1:
            continue
        w = concat(ball.word(u), (a,), inverse(ball.word(v)))
        if best is None or n < best:
            best, words = n, [w]
        else:
            words.append(w)
    if best is None:
        return None
    return best, words


def shortest_relator(x: Sequence[int], y: Sequence[int], mode: RelatorMode, max_len: int) -> Optional[tuple[int, Word]]:
    """Shortest freely reduced relator in x, y up to ``max_len``, or None.

    Projective mode accepts words with real scalar value, exact mode only
    words with value 1.
    """
    res = shortest_relators(x, y, mode, max_len)
    if res is None:
        return None
    return res[0], res[1][0]


# -- center determination --------------------------------------------------------


class CenterStatus(enum.Enum):
    DETERMINED = "Determined"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CenterResult:
    status: CenterStatus
    center: CentralSubgroup
    evidence: tuple[tuple[CentralScalar, int, int], ...]
    index: Optional[int] = None
    scan: Optional[BallScan] = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "center": self.center.to_dict(),
            "index": self.index,
            "evidence": [{"lambda": str(s), "index_with": w, "index_without": wo} for s, w, wo in self.evidence],
            "scan": self.scan.to_dict() if self.scan else None,
            "reason": self.reason,
        }


def _enumerate_index(args) -> Optional[int]:
    pres, gens, limit = args
    t = todd_coxeter(pres, gens, limit)
    return None if isinstance(t, Overflow) else t.index


def compute_center(
    x: Sequence[int],
    y: Sequence[int],
    radius: int = DEFAULT_RADIUS,
    coset_limit: int = DEFAULT_COSET_LIMIT,
    jobs: int = 1,
) -> CenterResult:
    """Center of <x, y> for x in X_p and y in X_l.

    Determined only when every nontrivial coset representative of the ball
    lower bound strictly lowers the index of <x, y> in Q_{p,l}.
    """
    x, y = tuple(int(v) for v in x), tuple(int(v) for v in y)
    for v in (x, y):
        if not parity_ok(v):
            raise NotInT(f"{v} violates the parity pattern")
    p, l = _primes_for(x, y)
    check_odd_prime(p)
    scan = ball_scan(x, y, radius, p, l)
    lower = CentralSubgroup(scan.scalars_found, p, l)
    if lower.index() is None:
        return CenterResult(CenterStatus.INCONCLUSIVE, lower, (), None, scan, "ball lower bound has infinite index")
    if int_norm(y) == p:
        return CenterResult(CenterStatus.INCONCLUSIVE, lower, (), None, scan, "generators share a norm")

    ext = build_Q_extension(ambient_gamma(p, l))
    wx, wy = ext.element_word(x), ext.element_word(y)
    base = _enumerate_index((ext.pres, [wx, wy], coset_limit))
    if base is None:
        return CenterResult(CenterStatus.INCONCLUSIVE, lower, (), None, scan, "enumeration of <x, y> overflowed")
    reps = lower.coset_reps()[1:]
    tasks = [(ext.pres, [wx, wy, ext.scalar_word(s)], coset_limit) for s in reps]
    if jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            indices = list(pool.map(_enumerate_index, tasks))
    else:
        indices = [_enumerate_index(t) for t in tasks]
    evidence = []
    for s, idx in zip(reps, indices):
        if idx is None:
            return CenterResult(CenterStatus.INCONCLUSIVE, lower, tuple(evidence), base, scan, f"enumeration with {s} overflowed")
        evidence.append((s, idx, base))
    ok = all(w < wo for _, w, wo in evidence)
    status = CenterStatus.DETERMINED if ok else CenterStatus.INCONCLUSIVE
    reason = "" if ok else "some coset representative does not lower the index"
    return CenterResult(status, lower, tuple(evidence), base, scan, reason)


# -- the two-generator presentation ------------------------------------------------


def assemble_xy_presentation(
    relators_image: Sequence[Word],
    center_relator_indices: Sequence[int],
    evaluations: Sequence[CentralScalar],
    generator_names: Sequence[str] = ("x", "y"),
) -> Presentation:
    """Extension presentation of <x, y> from relators of its projective image.

    ``center_relator_indices`` are 0-based.  Relators of value 1 are kept,
    every other relator r becomes ``(expression of r) r^-1`` in the central
    relator words, and each generator is made to commute with each central
    relator word.
    """
    rels = [tuple(r) for r in relators_image]
    if len(rels) != len(evaluations):
        raise ValueError("one evaluation per relator is required")
    centre = list(center_relator_indices)
    vecs = [evaluations[i].vector for i in centre]
    lat = Lattice(vecs + [SIGN_VECTOR], 3)
    k = len(centre)
    out: list[Word] = []
    for i, r in enumerate(rels):
        if evaluations[i].is_one():
            out.append(r)
    for i, r in enumerate(rels):
        if evaluations[i].is_one() or i in centre:
            continue
        sol = lat.solve(evaluations[i].vector)
        if sol is None:
            raise CenterNotGenerated(f"value {evaluations[i]} of relator {i} is not generated by the central relators")
        expr = concat(*(power(rels[j], c) for j, c in zip(centre, sol[:k])))
        out.append(concat(expr, inverse(r)))
    for rel in lat.relations():
        if any(rel[:k]):
            out.append(concat(*(power(rels[j], c) for j, c in zip(centre, rel[:k]))))
    ngens = len(generator_names)
    for g in range(ngens):
        for j in centre:
            out.append(commutator((g + 1,), rels[j]))
    return Presentation(tuple(generator_names), tuple(out))


def xy_derived_ab_chain(xy_pres: Presentation, image_pres: Presentation, center: CentralSubgroup, coset_limit: int = DEFAULT_COSET_LIMIT) -> list[AbelianGroup]:
    """``[<x,y>^ab, (<x,y>')^ab]`` using <x,y>' = <a,b>' when -1 is not central.

    <x,y>^ab is infinite, so its derived subgroup cannot be enumerated
    directly.  The derived subgroup meets the center only in {1, -1}; when -1
    is not in the center, projecting to the image is injective on it.
    """
    if torsion_status(center) is TorsionStatus.HAS_TORSION:
        raise ValueError("-1 is central; the derived subgroups need not be isomorphic")
    return [abelianization(xy_pres), derived_ab_chain(image_pres, 2, coset_limit)[1]]

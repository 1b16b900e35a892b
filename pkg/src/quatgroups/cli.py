"""Command-line front end.

Text output is tab-delimited, one record per line; ``--format json`` prints a
single JSON document instead.  Exit status: 0 success, 1 input or algorithm
error, 2 inconclusive result or enumeration overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .center import (
    DEFAULT_RADIUS,
    CenterStatus,
    RelatorMode,
    ball_scan,
    compute_center,
    shortest_relator,
)
from .commuting import classify_mod8, exists_commuting, table_pl
from .errors import EnumerationOverflow, ParseError, QuatGroupsError
from .fp.abelian import abelianization, derived_ab_chain
from .fp.presentation import Presentation
from .fp.todd_coxeter import DEFAULT_COSET_LIMIT, coset_index
from .fp.words import format_word_powers
from .gamma import ambient_gamma, build_gamma_presentation, build_Q_extension, minus_one_word, relator_evaluations
from .quat import Quat, format_quat, int_norm, parse_quat, scalar_decompose
from .xsets import check_odd_prime, enumerate_Xq, n_set, odd_primes, orbit_reps

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2

MOD8_GROUPS = (3, 5, 7, 1)  # reading order of the table grouped by p mod 8


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


class _Out:
    """Collects output so text and JSON share one code path."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.doc: dict = {}

    def row(self, *fields) -> None:
        self.lines.append("\t".join(str(f) for f in fields))

    def flush(self, stream) -> None:
        if self.fmt == "json":
            stream.write(json.dumps(self.doc, indent=2, sort_keys=True) + "\n")
        elif self.lines:
            stream.write("\n".join(self.lines) + "\n")


def _int_quat(text: str) -> tuple[int, int, int, int]:
    q = parse_quat(text)
    if not q.is_integral:
        raise ParseError(f"{text!r} is not an integral quaternion")
    return tuple(int(c) for c in q.components())


def _qstr(c: Sequence[int]) -> str:
    return format_quat(Quat.from_int(c))


def _set_str(vals: Sequence[int]) -> str:
    return "{" + ", ".join(str(v) for v in vals) + "}"


def _odd_prime(text: str) -> int:
    try:
        q = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    try:
        check_odd_prime(q)
    except QuatGroupsError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return q


def _scalar(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational scalar")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


# -- subcommands ------------------------------------------------------------------


def cmd_xq(args, out: _Out) -> int:
    xs = enumerate_Xq(args.q)
    for c in xs:
        out.row(_qstr(c))
    out.doc = {"q": args.q, "size": len(xs), "elements": [list(c) for c in xs]}
    return EXIT_OK


def nset_rows(qmax: int, order: str = "p", jobs: int = 1) -> list[tuple[int, tuple[int, ...]]]:
    primes = odd_primes(qmax)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            sets = list(pool.map(n_set, primes))
    else:
        sets = [n_set(q) for q in primes]
    rows = [(s.q, s.values) for s in sets]
    if order == "mod8":
        rank = {r: i for i, r in enumerate(MOD8_GROUPS)}
        rows.sort(key=lambda r: (rank[r[0] % 8], r[0]))
    return rows


def cmd_nset(args, out: _Out) -> int:
    rows = nset_rows(args.q_max, args.order, args.jobs)
    for q, vals in rows:
        if args.order == "mod8":
            out.row(q, q % 8, _set_str(vals))
        else:
            out.row(q, _set_str(vals))
    out.doc = {"q_max": args.q_max, "order": args.order, "rows": [{"p": q, "n": list(v)} for q, v in rows]}
    if args.plot:
        from .plotting import plot_nset

        plot_nset(rows, args.plot)
    return EXIT_OK


def cmd_nset_special(args, out: _Out) -> int:
    primes = [p for p in odd_primes(args.bound) if p % 24 == 23 and p % 88 in (7, 39, 63, 79, 87)]
    rows = [(p, n_set(p).values) for p in primes]
    for p, vals in rows:
        out.row(p, _set_str(vals))
    out.doc = {"bound": args.bound, "rows": [{"p": p, "n": list(v)} for p, v in rows]}
    return EXIT_OK


def cmd_nmin(args, out: _Out) -> int:
    values = {p: n_set(p).min for p in args.primes}
    for p, m in values.items():
        out.row(p, m)
    out.doc = {"n_min": {str(p): m for p, m in values.items()}}
    if args.plot:
        from .plotting import plot_nmin

        plot_nmin(values, args.plot)
    return EXIT_OK


def cmd_commute(args, out: _Out) -> int:
    ok, w = exists_commuting(args.p, args.l)
    cls = classify_mod8(args.p, args.l)
    shared = sorted(set(n_set(args.p)) & set(n_set(args.l)))
    out.row("commuting", "yes" if ok else "no")
    out.row("mod8_class", cls.value)
    out.row("shared_n", _set_str(shared))
    if w is not None:
        out.row("witness", _qstr(w.x), _qstr(w.y), w.shared_n)
    out.doc = {
        "p": args.p,
        "l": args.l,
        "commuting": ok,
        "mod8_class": cls.value,
        "shared_n": shared,
        "witness": None if w is None else {"x": list(w.x), "y": list(w.y), "n": w.shared_n},
    }
    return EXIT_OK


def cmd_tablepl(args, out: _Out) -> int:
    table = table_pl()
    out.row("p\\l", 1, 3, 5, 7)
    for a, row in zip((1, 3, 5, 7), table):
        out.row(a, *(c.value for c in row))
    out.doc = {"rows": {str(a): [c.value for c in row] for a, row in zip((1, 3, 5, 7), table)}}
    return EXIT_OK


def _save(pres: Presentation, path: Optional[str]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(pres.to_text() + "\n")


def cmd_gamma(args, out: _Out) -> int:
    gp = build_gamma_presentation(args.p, args.l)
    pres = gp.pres
    for name, c in zip(pres.generator_names, gp.gen_quats):
        out.row("generator", name, _qstr(c))
    evals = relator_evaluations(gp)
    for r, v in zip(pres.relators, evals):
        out.row("relator", pres.format(r), v)
    out.doc = gp.to_dict()
    out.doc["relator_values"] = [str(v) for v in evals]
    _save(pres, args.save)
    return EXIT_OK


def cmd_qpres(args, out: _Out) -> int:
    ext = build_Q_extension(ambient_gamma(args.p, args.l))
    pres = ext.pres
    gp = ext.gamma
    for name, c in zip(pres.generator_names, gp.gen_quats):
        out.row("generator", name, _qstr(c))
    for i in ext.kernel:
        out.row("kernel", gp.pres.format(gp.pres.relators[i]), ext.evaluations[i])
    for r in pres.relators:
        out.row("relator", pres.format(r))
    out.doc = ext.to_dict()
    _save(pres, args.save)
    return EXIT_OK


def _default_pair(p: int, l: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return orbit_reps(enumerate_Xq(p))[0], orbit_reps(enumerate_Xq(l))[0]


def cmd_index(args, out: _Out) -> int:
    dx, dy = _default_pair(args.p, args.l)
    x = _int_quat(args.x) if args.x else dx
    y = _int_quat(args.y) if args.y else dy
    if (int_norm(x), int_norm(y)) != (args.p, args.l):
        raise QuatGroupsError(f"need |x|^2 = {args.p} and |y|^2 = {args.l}")
    ext = build_Q_extension(ambient_gamma(args.p, args.l))
    gens = [ext.element_word(x), ext.element_word(y)]
    gens += [ext.scalar_word(scalar_decompose(s, args.p, args.l)) for s in args.adjoin]
    idx = coset_index(ext.pres, gens, args.coset_limit)
    out.row("x", _qstr(x))
    out.row("y", _qstr(y))
    if args.adjoin:
        out.row("adjoined", *(str(s) for s in args.adjoin))
    out.row("index", "overflow" if idx is None else idx)
    out.doc = {"x": list(x), "y": list(y), "adjoined": [str(s) for s in args.adjoin], "index": idx}
    code = EXIT_OK if idx is not None else EXIT_INCONCLUSIVE
    if not args.no_center:
        res = compute_center(x, y, args.radius, args.coset_limit, args.jobs)
        out.row("center_status", res.status.value)
        out.row("center", *(str(s) for s in res.center.basis()))
        out.doc["center"] = res.to_dict()
        if res.status is not CenterStatus.DETERMINED:
            code = EXIT_INCONCLUSIVE
    return code


def _read_presentation(path: str) -> Presentation:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return Presentation.from_dict(json.loads(text))
    return Presentation.from_text(text)


def cmd_abel(args, out: _Out) -> int:
    ab = abelianization(_read_presentation(args.file))
    out.row("abelianization", ab)
    out.row("free_rank", ab.free_rank)
    out.row("torsion", *ab.torsion)
    out.doc = ab.to_dict()
    return EXIT_OK


def cmd_derived_chain(args, out: _Out) -> int:
    chain = derived_ab_chain(_read_presentation(args.file), args.depth, args.coset_limit)
    for i, ab in enumerate(chain):
        out.row(i, ab)
    out.doc = {"chain": [ab.to_dict() for ab in chain]}
    return EXIT_OK


def cmd_center(args, out: _Out) -> int:
    x, y = _int_quat(args.x), _int_quat(args.y)
    res = compute_center(x, y, args.radius, args.coset_limit, args.jobs)
    out.row("status", res.status.value)
    out.row("generators", *(str(s) for s in res.center.basis()))
    out.row("index", "none" if res.index is None else res.index)
    for s, w, wo in res.evidence:
        out.row("lambda", s, w, wo)
    if res.reason:
        out.row("reason", res.reason)
    out.doc = res.to_dict()
    return EXIT_OK if res.status is CenterStatus.DETERMINED else EXIT_INCONCLUSIVE


def cmd_ball(args, out: _Out) -> int:
    x, y = _int_quat(args.x), _int_quat(args.y)
    scan = ball_scan(x, y, args.ball_radius)
    out.row("elements", scan.elements_visited)
    out.row("layers", *scan.layer_sizes)
    for s in scan.scalars_found:
        out.row("scalar", s, format_word_powers(scan.witnesses[s], ("x", "y")))
    out.doc = scan.to_dict()
    out.doc["witnesses"] = {str(s): format_word_powers(w, ("x", "y")) for s, w in scan.witnesses.items()}
    if args.plot:
        from .plotting import plot_ball_layers

        plot_ball_layers(scan.layer_sizes, args.plot)
    return EXIT_OK


def cmd_shortest_relator(args, out: _Out) -> int:
    x, y = _int_quat(args.x), _int_quat(args.y)
    res = shortest_relator(x, y, RelatorMode(args.mode), args.max)
    if res is None:
        out.row("none", f"no {args.mode} relator up to length {args.max}")
        out.doc = {"mode": args.mode, "max": args.max, "length": None, "relator": None}
    else:
        n, w = res
        out.row(n, format_word_powers(w, ("x", "y")))
        out.doc = {"mode": args.mode, "max": args.max, "length": n, "relator": format_word_powers(w, ("x", "y"))}
    return EXIT_OK


def cmd_remark14(args, out: _Out) -> int:
    ext = build_Q_extension(ambient_gamma(args.p, args.l))
    ab = abelianization(ext.pres)
    word = minus_one_word(ext)
    ab1 = abelianization(ext.pres.with_added_relators([word]))
    outside = ab != ab1
    out.row("abelianization", ab)
    out.row("with_minus_one", ab1)
    out.row("minus_one_word", ext.pres.format(word))
    out.row("minus_one_in_derived", "unknown" if not outside else "no")
    out.doc = {
        "abelianization": ab.to_dict(),
        "with_minus_one": ab1.to_dict(),
        "minus_one_word": ext.pres.format(word),
        "minus_one_outside_derived": outside,
    }
    return EXIT_OK if outside else EXIT_INCONCLUSIVE


def cmd_verify(args, out: _Out) -> int:
    from .acceptance import run_suite

    def show(res):
        if out.fmt == "text":
            print(res.line(), flush=True)

    results = run_suite(args.suite, on_result=show, jobs=args.jobs)
    failed = [r.name for r in results if not r.passed]
    if out.fmt == "text":
        print(f"{len(results) - len(failed)}/{len(results)} criteria passed", flush=True)
    out.doc = {
        "suite": args.suite,
        "results": [{"name": r.name, "passed": r.passed, "details": r.details, "seconds": round(r.seconds, 3)} for r in results],
    }
    return EXIT_OK if not failed else EXIT_ERROR


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--radius", type=_positive, default=DEFAULT_RADIUS, help="ball radius for center lower bounds")
    common.add_argument("--coset-limit", type=_positive, default=DEFAULT_COSET_LIMIT)
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    parser = _Parser(prog="quatgroups", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("xq", cmd_xq, "list X_q")
    sp.add_argument("q", type=_odd_prime)

    sp = add("nset", cmd_nset, "n-sets of X_p for odd primes p < q_max")
    sp.add_argument("q_max", type=int)
    sp.add_argument("--order", choices=("p", "mod8"), default="p")
    sp.add_argument("--plot", metavar="FILE", help="also render a scatter plot")

    sp = add("nset-special", cmd_nset_special, "n-sets for p = 23 mod 24 in the mod-88 classes 7, 39, 63, 79, 87")
    sp.add_argument("--bound", type=int, default=1000)

    sp = add("nmin", cmd_nmin, "smallest n-value for each prime")
    sp.add_argument("primes", type=_odd_prime, nargs="+")
    sp.add_argument("--plot", metavar="FILE")

    sp = add("commute", cmd_commute, "commuting elements of X_p and X_l")
    sp.add_argument("p", type=_odd_prime)
    sp.add_argument("l", type=_odd_prime)

    add("tablepl", cmd_tablepl, "existence of commuting pairs by residues mod 8")

    for name, func, text in (("gamma", cmd_gamma, "presentation of Gamma_{p,l}"), ("qpres", cmd_qpres, "presentation of Q_{p,l}")):
        sp = add(name, func, text)
        sp.add_argument("p", type=_odd_prime)
        sp.add_argument("l", type=_odd_prime)
        sp.add_argument("--save", metavar="FILE", help="write the presentation in text form")

    sp = add("index", cmd_index, "index of <x, y> in Q_{p,l} and its center")
    sp.add_argument("p", type=_odd_prime)
    sp.add_argument("l", type=_odd_prime)
    sp.add_argument("--x", help="element of X_p (default: first orbit representative)")
    sp.add_argument("--y", help="element of X_l")
    sp.add_argument("--adjoin", type=_scalar, action="append", default=[], help="central scalar to adjoin, repeatable")
    sp.add_argument("--no-center", action="store_true", help="skip the center determination")

    sp = add("abel", cmd_abel, "abelianization of a presentation file")
    sp.add_argument("file")

    sp = add("derived-chain", cmd_derived_chain, "abelian invariants down the derived series")
    sp.add_argument("file")
    sp.add_argument("depth", type=_positive)

    sp = add("center", cmd_center, "center of <x, y>")
    sp.add_argument("x")
    sp.add_argument("y")

    sp = add("ball", cmd_ball, "central scalars in a ball of the projective Cayley graph")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("ball_radius", type=_positive, metavar="radius")
    sp.add_argument("--plot", metavar="FILE", help="also render the sphere sizes")

    sp = add("shortest-relator", cmd_shortest_relator, "shortest relator of <x, y>")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("mode", choices=[m.value for m in RelatorMode])
    sp.add_argument("max", type=_positive)

    sp = add("remark14", cmd_remark14, "whether -1 lies outside the derived subgroup of Q_{p,l}")
    sp.add_argument("p", type=_odd_prime)
    sp.add_argument("l", type=_odd_prime)

    sp = add("verify", cmd_verify, "run the acceptance suite")
    sp.add_argument("--suite", choices=("desk", "extended"), default="desk")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.format)
    try:
        code = args.func(args, out)
    except EnumerationOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (QuatGroupsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out.flush(sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from fractions import Fraction

from . import closed_forms as cf
from . import suites
from .catalogue import extension_catalogue
from .engine import (ORACLE_LIMIT, Engine, EngineLimitError, default_engine,
                     oracle_s_vector)
from .graph import (Graph, add_isolated, chromatic_number, complement, complete, cycle,
                    make_family, max_degree, parse_edges, path)
from .graph6 import Graph6Error, from_graph6, to_graph6
from .lab import decimal6, sweep
from .numbers import bell
from .report import rat, to_csv, to_json

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"expected integers, got {text!r}") from exc


def _range(text: str) -> range:
    """``"a:b"`` inclusive, or a single integer."""
    try:
        if ":" in text:
            a, b = text.split(":")
            return range(int(a), int(b) + 1)
        return range(int(text), int(text) + 1)
    except ValueError as exc:
        raise InputError(f"bad range {text!r}; use a:b") from exc


def _graph_from_args(args) -> Graph:
    given = [x for x in (args.graph6, args.edges, args.family) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --graph6, --edges, --family")
    try:
        if args.graph6 is not None:
            return from_graph6(args.graph6)
        if args.edges is not None:
            return parse_edges(args.edges)
        return make_family(args.family, _int_list(args.params or ""))
    except (Graph6Error, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph6 string, e.g. Bw for K_3")
    p.add_argument("--edges", help='edge literal "n; u-v,u-v,..."')
    p.add_argument("--family", help="named family, e.g. path-complement")
    p.add_argument("--params", help="family parameters, comma separated")


# -- compute -------------------------------------------------------------------

def cmd_compute(args) -> int:
    g = _graph_from_args(args)
    if g.n == 0:
        raise InputError("graph has no vertices")
    eng = default_engine()
    s = eng.s_vector(g)
    b, t = eng.bt_of(g)
    a = Fraction(t, b)
    print(f"graph6 {to_graph6(g)}")
    print(f"n {g.n}")
    print(f"m {g.m}")
    print(f"chi {chromatic_number(g)}")
    print(f"delta {max_degree(g)}")
    print("S " + " ".join(map(str, s)))
    print(f"B {b}")
    print(f"T {t}")
    print(f"A {rat(a)} {decimal6(a)}")
    return EXIT_OK


# -- family tables ---------------------------------------------------------------

def _family_rows(name: str, ns, p: int):
    """Yield ``(n, graph, closed-form B or None, closed-form A)``."""
    for n in ns:
        if name == "empty":
            yield n, Graph.empty(n), bell(n), cf.a_empty(n)
        elif name == "tree":
            yield n, add_isolated(path(n), p), None, cf.a_tree_plus_isolated(n, p)
        elif name == "cycle":
            yield n, add_isolated(cycle(n), p), None, cf.a_cycle_plus_isolated(n, p)
        elif name == "clique":
            yield n, add_isolated(complete(n), p), None, cf.a_clique_plus_isolated(n, p)
        elif name == "path-complement":
            yield n, complement(path(n)), cf.b_path_complement(n), cf.a_path_complement(n)
        elif name == "cycle-complement":
            yield n, complement(cycle(n)), cf.b_cycle_complement(n), cf.a_cycle_complement(n)
        else:
            raise InputError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")


FAMILY_NAMES = ["empty", "tree", "cycle", "clique", "path-complement", "cycle-complement"]


def cmd_family(args) -> int:
    if args.name not in FAMILY_NAMES:
        raise InputError(f"unknown family {args.name!r}; known: {', '.join(FAMILY_NAMES)}")
    eng = default_engine()
    ok = True
    print("n\tB\tA_closed\tA_dec\tA_engine\tmatch")
    for n, g, b_closed, a_closed in _family_rows(args.name, _range(args.range), args.p):
        if g.n <= eng.limit:
            b, t = eng.bt_of(g)
            a_eng = Fraction(t, b)
            match = a_eng == a_closed and (b_closed is None or b_closed == b)
            ok &= match
            print(f"{n}\t{b if b_closed is None else b_closed}\t{rat(a_closed)}\t{decimal6(a_closed)}"
                  f"\t{rat(a_eng)}\t{'yes' if match else 'NO'}")
        else:
            print(f"{n}\t{'' if b_closed is None else b_closed}\t{rat(a_closed)}"
                  f"\t{decimal6(a_closed)}\t-\t-")
    return EXIT_OK if ok else EXIT_FAIL


# -- verify ------------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.suite not in suites.SUITES:
        raise InputError(f"unknown suite {args.suite!r}; known: {', '.join(suites.SUITES)}")
    kw = {}
    if args.max_n is not None:
        if args.suite in ("recurrences", "removal-theorems"):
            kw["max_n"] = args.max_n
        elif args.suite in ("join", "union"):
            kw["max_total"] = args.max_n
        elif args.suite == "q-lemmas":
            kw["max_order"] = args.max_n
    if args.suite == "union":
        kw["seed"] = args.seed
    res = suites.SUITES[args.suite](**kw)
    print(res.summary())
    for f in res.failures[:20]:
        print(f"  failed: {f}")
    return EXIT_OK if res.ok else EXIT_FAIL


# -- sweep --------------------------------------------------------------------------

def cmd_sweep(args) -> int:
    conj = set(_int_list(args.conjectures))
    if not conj <= {1, 2, 3}:
        raise InputError("conjectures must be drawn from 1,2,3")
    extra = [c for c in (args.checks or "").split(",") if c]
    if not set(extra) <= {"removal", "peel"}:
        raise InputError("--checks takes removal and/or peel")
    try:
        report = sweep(range(args.min_n, args.max_n + 1), source=args.input, conjectures=conj,
                       extra=extra, jobs=args.jobs)
    except Graph6Error as exc:
        raise InputError(str(exc)) from exc
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from exc
    text = to_json(report) if args.format == "json" else to_csv(report)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    elif args.format == "json":
        sys.stdout.write(text)
    by_n: dict[int, int] = {}
    for r in report.rows:
        by_n[r.n] = by_n.get(r.n, 0) + 1
    print(f"graphs {len(report.rows)} ({', '.join(f'n={n}: {c}' for n, c in sorted(by_n.items()))})",
          file=sys.stderr)
    if report.skipped:
        print(f"skipped {report.skipped} graphs above the engine limit", file=sys.stderr)
    for s in report.summaries:
        if s.kind == "all" or not s.ok:
            label = s.kind if s.value is None else f"{s.kind}={s.value}"
            print(f"minimizer n={s.n} {label}: {', '.join(s.minimizers)} A={rat(s.min_A)}"
                  f" {'ok' if s.ok else 'VIOLATION'}", file=sys.stderr)
    for name, c in report.theorem_checks.items():
        print(f"{name}: {c['graphs']} graphs, {c['failures']} failures", file=sys.stderr)
    for o in report.extra_failures[:20]:
        print(f"failed: {o.check} {o.subject}", file=sys.stderr)
    print(f"violations {report.violations}", file=sys.stderr)
    return EXIT_OK if report.violations == 0 else EXIT_FAIL


# -- oracle -----------------------------------------------------------------------

def _random_graph(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5])


def cmd_oracle(args) -> int:
    eng = Engine()
    if args.graph6 is not None:
        try:
            g = from_graph6(args.graph6)
        except Graph6Error as exc:
            raise InputError(str(exc)) from exc
        a, b = eng.s_vector(g), oracle_s_vector(g)
        print("engine " + " ".join(map(str, a)))
        print("oracle " + " ".join(map(str, b)))
        return EXIT_OK if a == b else EXIT_FAIL
    if args.max_n > ORACLE_LIMIT:
        raise EngineLimitError(f"oracle enumeration bound is {ORACLE_LIMIT}")
    rng = random.Random(args.seed)
    total = bad = 0
    for n in range(1, args.max_n + 1):
        if n <= 7:
            graphs = extension_catalogue(n)
        else:
            graphs = [_random_graph(rng, n) for _ in range(args.samples)]
        mism = [to_graph6(g) for g in graphs if eng.s_vector(g) != oracle_s_vector(g)]
        total += len(graphs)
        bad += len(mism)
        print(f"n={n}: {len(graphs)} graphs, {len(mism)} mismatches" + (" (sampled)" if n > 7 else ""))
        for m in mism[:10]:
            print(f"  mismatch {m}")
    print(f"total {total} graphs, {bad} mismatches")
    return EXIT_OK if bad == 0 else EXIT_FAIL


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gbell", description="Average number of colors in non-equivalent colorings.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="S-vector, B, T, A of one graph")
    _add_graph_args(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="closed form versus engine for a family")
    p.add_argument("name", help=", ".join(FAMILY_NAMES))
    p.add_argument("--range", default="1:10", help="orders a:b (inclusive)")
    p.add_argument("--p", type=int, default=0, help="isolated vertices added (tree, cycle, clique)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run an identity or inequality suite")
    p.add_argument("suite", help=", ".join(suites.SUITES))
    p.add_argument("--max-n", type=int, help="order bound for the suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="check the conjectures over a catalogue")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--input", help="graph6 file instead of the internal generator")
    p.add_argument("--conjectures", default="1,2,3")
    p.add_argument("--checks", help="extra per-graph checks: removal,peel")
    p.add_argument("--out", help="report path (default: stdout for json, none for csv)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="engine versus brute force")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--graph6", help="check a single graph")
    p.add_argument("--samples", type=int, default=20, help="random graphs per order above 7")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EngineLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())

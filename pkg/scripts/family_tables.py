"""Print closed-form and engine values side by side for every family, and the
three lower bounds for a range of orders."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from gbell import closed_forms as cf
from gbell.engine import average_colors
from gbell.graph import Graph, add_isolated, complement, complete, cycle, path
from gbell.lab import decimal6


@dataclass
class TableConfig:
    max_n: int = 12
    p: int = 0


def families(p: int):
    yield "empty", 1, lambda n: Graph.empty(n), cf.a_empty
    yield "path u pK1", 1, lambda n: add_isolated(path(n), p), lambda n: cf.a_tree_plus_isolated(n, p)
    yield "cycle u pK1", 3, lambda n: add_isolated(cycle(n), p), lambda n: cf.a_cycle_plus_isolated(n, p)
    yield "clique u pK1", 1, lambda n: add_isolated(complete(n), p), lambda n: cf.a_clique_plus_isolated(n, p)
    yield "path complement", 1, lambda n: complement(path(n)), cf.a_path_complement
    yield "cycle complement", 4, lambda n: complement(cycle(n)), cf.a_cycle_complement


def fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator} ({decimal6(x)})"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--p", type=int, default=0)
    a = ap.parse_args()
    cfg = TableConfig(a.max_n, a.p)
    bad = 0
    for name, lo, build, formula in families(cfg.p):
        print(f"# {name}" + (f", p={cfg.p}" if "pK1" in name else ""))
        for n in range(lo, cfg.max_n + 1):
            closed = formula(n)
            g = build(n)
            engine = average_colors(g) if g.n <= 16 else None
            flag = "-" if engine is None else ("ok" if engine == closed else "MISMATCH")
            bad += flag == "MISMATCH"
            print(f"  n={n:2d}  {fmt(closed):40s} {flag}")
    print("# bounds L1(n) < L2(n,r), L3(n,r)")
    for n in range(2, cfg.max_n + 1):
        cells = [f"r={r}: {decimal6(cf.bound_l2(n, r))}/{decimal6(cf.bound_l3(n, r))}"
                 for r in range(2, n + 1)]
        print(f"  n={n:2d} L1={decimal6(cf.bound_l1(n))}  " + "  ".join(cells))
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

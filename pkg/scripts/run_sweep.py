"""Exhaustive conjecture sweep with per-order timing.

    python3 scripts/run_sweep.py --max-n 8 --jobs 4 --out sweep8.csv
"""

import argparse
import sys
import time
from dataclasses import dataclass

from gbell.lab import sweep
from gbell.report import rat, to_csv, to_json


@dataclass
class SweepConfig:
    min_n: int = 1
    max_n: int = 7
    jobs: int = 1
    extra: tuple[str, ...] = ("removal", "peel")
    out: str | None = None
    fmt: str = "csv"


def run(cfg: SweepConfig) -> int:
    violations = 0
    rows = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        t0 = time.perf_counter()
        rep = sweep([n], extra=cfg.extra, jobs=cfg.jobs)
        dt = time.perf_counter() - t0
        rows.append(rep)
        violations += rep.violations
        low = min(rep.rows, key=lambda r: r.A)
        print(f"n={n:2d} graphs={len(rep.rows):6d} violations={rep.violations} "
              f"min A={rat(low.A)} at {low.key} ({dt:.1f}s)")
        for name, c in rep.theorem_checks.items():
            print(f"      {name}: {c['graphs']} graphs, {c['failures']} failures")
    if cfg.out:
        full = sweep(range(cfg.min_n, cfg.max_n + 1), extra=(), jobs=cfg.jobs)
        text = to_json(full) if cfg.fmt == "json" else to_csv(full)
        with open(cfg.out, "w", encoding="ascii") as fh:
            fh.write(text)
    print(f"total violations {violations}")
    return 0 if violations == 0 else 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-extra", action="store_true", help="skip removal and peel checks")
    ap.add_argument("--out")
    ap.add_argument("--format", choices=["csv", "json"], default="csv")
    a = ap.parse_args()
    cfg = SweepConfig(a.min_n, a.max_n, a.jobs, () if a.no_extra else ("removal", "peel"), a.out, a.format)
    sys.exit(run(cfg))


if __name__ == "__main__":
    main()

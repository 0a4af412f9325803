"""Sweep every certified inequality on the default grid and write CSV/JSON reports.

    python scripts/run_certification.py --out artifacts/

Each sweep produces ``<name>.csv`` and ``<name>.json``; ``summary.json`` lists
min margin and violation count per sweep.  Output is deterministic.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from landen_ineq.report import dumps, to_csv, to_json
from landen_ineq.specialfn import BesselParams, HyperTriple, KummerParams
from landen_ineq.verify import (
    Grid,
    elementary_checks,
    sweep_ineq9,
    sweep_thm21,
    sweep_thm22,
    sweep_thm23,
    sweep_thm24,
)


@dataclass(frozen=True)
class CertificationConfig:
    out_dir: Path
    grid: Grid = field(default_factory=Grid)


def sweeps(grid: Grid):
    T = HyperTriple
    yield "thm21_ineq1_1_1_1", sweep_thm21(T(1, 1, 1), "ineq1", grid)
    yield "thm21_ineq2_1_1_1", sweep_thm21(T(1, 1, 1), "ineq2", grid)
    yield "thm21_ineq3_half_half_3half", sweep_thm21(T(0.5, 0.5, 1.5), "ineq3", grid)
    yield "thm21_ineq4_half_half_3half", sweep_thm21(T(0.5, 0.5, 1.5), "ineq4", grid)
    yield "thm21_ineq1_boundary", sweep_thm21(T(0.5, 0.5, 1), "ineq1", grid)
    yield "thm22_ones", sweep_thm22("ones", "ineq5", grid)
    yield "thm22_inv_omega", sweep_thm22("inv-omega", "ineq5", grid)
    yield "thm23_kummer", sweep_thm23("kummer", KummerParams(0.25, 1), grid)
    yield "thm23_bessel", sweep_thm23("bessel", BesselParams.from_kappa(1, 4), grid)
    yield "thm23_kummer_outside", sweep_thm23("kummer", KummerParams(1, 1), grid, override=True)
    yield "thm24_ineq6_2_1_2", sweep_thm24(T(2, 1, 2), "ineq6", grid)
    yield "thm24_ineq6_1_half_1", sweep_thm24(T(1, 0.5, 1), "ineq6", grid)
    yield "thm24_ineq7_quarter_half_3half", sweep_thm24(T(0.25, 0.5, 1.5), "ineq7", grid)
    yield "thm24_ineq6_log_case", sweep_thm24(T(0.5, 1, 1.5), "ineq6", grid, override=True)
    yield "thm24_ineq7_log_case", sweep_thm24(T(0.5, 1, 1.5), "ineq7", grid, override=True)
    yield "ineq9_1_half", sweep_ineq9(1, 0.5, grid)
    yield "ineq9_2_1", sweep_ineq9(2, 1, grid)
    arcsin, logpow = elementary_checks(grid)
    yield "elementary_arcsin", arcsin
    yield "elementary_logpow", logpow


def write_artifacts(cfg: CertificationConfig) -> dict:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name, report in sweeps(cfg.grid):
        (cfg.out_dir / f"{name}.csv").write_text(to_csv(report), encoding="utf-8")
        (cfg.out_dir / f"{name}.json").write_text(to_json(report), encoding="utf-8")
        summary[name] = {"theorem_id": report.theorem_id, "min_margin": report.min_margin,
                         "n_violations": report.n_violations}
    (cfg.out_dir / "summary.json").write_text(dumps(summary) + "\n", encoding="utf-8")
    return summary


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("artifacts"))
    ap.add_argument("--extended", action="store_true", help="grid end 0.99 instead of 0.97")
    args = ap.parse_args(argv)
    grid = Grid(end=0.99) if args.extended else Grid()
    summary = write_artifacts(CertificationConfig(args.out, grid))
    width = max(map(len, summary))
    for name, row in summary.items():
        print(f"{name:<{width}}  min_margin={row['min_margin']:+.3e}  violations={row['n_violations']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Probe how far the sufficient parameter regions are from necessary.

Runs seeded counterexample searches over several parameter boxes, including
one with negative parameters that still satisfy the increasing-branch
inequalities, and prints the first violation found in each.

    python scripts/region_necessity.py --budget 200 --seed 0
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from landen_ineq.regions import classify_thm21
from landen_ineq.specialfn import HyperTriple
from landen_ineq.verify import search_counterexample


@dataclass(frozen=True)
class Probe:
    label: str
    theorem_id: str
    direction: str
    box: dict


PROBES = (
    Probe("positive triples, ineq1", "2.1", "ineq1", {"a": (0.05, 3), "b": (0.05, 3), "c": (0.05, 3)}),
    Probe("positive triples, ineq3", "2.1", "ineq3", {"a": (0.05, 3), "b": (0.05, 3), "c": (0.05, 3)}),
    Probe("negative a,b,c in branch a, ineq1", "2.1", "ineq1", {"a": (-1.5, -0.6), "b": (-1.5, -0.6), "c": (-3.9, -3.1)}),
    Probe("Kummer, reversed", "2.3-kummer", "", {"p": (-1, 2), "q": (0.1, 4)}),
    Probe("power-weighted, ineq6", "2.4", "ineq6", {"a": (0.05, 3), "b": (0.05, 3), "c": (0.05, 3)}),
)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget", type=int, default=200)
    args = ap.parse_args(argv)
    for probe in PROBES:
        ce = search_counterexample(probe.theorem_id, probe.direction, probe.box, args.seed, args.budget)
        if ce is None:
            print(f"{probe.label}: none in {args.budget} draws")
            continue
        params = {k: round(v, 6) for k, v in ce.params.items()}
        line = f"{probe.label}: sample {ce.sample_index} {params} r={ce.record.r} margin={ce.record.margin:+.3e}"
        if probe.theorem_id == "2.1":
            t = HyperTriple(*(ce.params[k] for k in "abc"))
            line += f" [{classify_thm21(t).branch.value}]"
        print(line)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Sweep the three reducers over a seeded corpus and summarize margins.

Reports, per algorithm: worst bound slack (|S| minus the exact bound
ceiling), certificate failures (should be zero), and for the planar
reducer the minimum ledger step charge observed.
"""

import argparse
import random
from fractions import Fraction

from planarize import certify, generators as gen
from planarize.multigraph import from_edge_list
from planarize.planar import reduce_planar
from planarize.pseudoforest import reduce_pseudoforest
from planarize.treewidth2 import reduce_treewidth2


def corpus(seed: int, count: int):
    rng = random.Random(seed)
    out = []
    for d in (2, 3, 4, 5):
        for n in (8, 16, 24, 40, 60):
            if (n * d) % 2:
                continue
            for s in range(3):
                out.append((f"rr({n},{d},{s})", gen.random_regular(n, d, s)))
    while len(out) < count:
        n = rng.randrange(5, 26)
        p = rng.choice([0.15, 0.3, 0.5, 0.7, 0.9])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        out.append((f"gnp({n},{p})", from_edge_list(edges, n)))
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=400)
    args = ap.parse_args()

    graphs = corpus(args.seed, args.count)
    worst_slack = {"pseudoforest": None, "tw2": None, "planar": None}
    min_charge = None
    failures = []

    for tag, g in graphs:
        runs = {
            "pseudoforest": reduce_pseudoforest(g),
            "tw2": reduce_treewidth2(g),
        }
        planar_sol, ledger = reduce_planar(g)
        runs["planar"] = planar_sol
        low = ledger.min_charge()
        if low is not None and (min_charge is None or low < min_charge):
            min_charge = low

        for alg, sol in runs.items():
            slack = Fraction(len(sol.s)) - sol.bound_value()
            if worst_slack[alg] is None or slack < worst_slack[alg]:
                worst_slack[alg] = slack
        sub = certify.induced_subgraph(g, runs["pseudoforest"].s)
        if not certify.is_pseudoforest(sub):
            failures.append((tag, "pseudoforest"))
        sub = certify.induced_subgraph(g, runs["tw2"].s)
        if not certify.is_partial_2_tree(sub):
            failures.append((tag, "tw2"))
        sub = certify.induced_subgraph(g, planar_sol.s)
        if not (certify.is_planar(sub) and certify.accepts_planar_residue(sub)):
            failures.append((tag, "planar"))

    print(f"graphs checked: {len(graphs)}")
    for alg, slack in worst_slack.items():
        print(f"{alg:13s} worst bound slack: {slack}")
    print(f"planar min ledger charge: {min_charge}")
    print(f"certificate failures: {failures or 'none'}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())

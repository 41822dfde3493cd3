#!/usr/bin/env python3
"""Scaling ladders for the near-linear reducers; prints doubling ratios."""

import argparse
import time

from planarize import generators as gen
from planarize.pseudoforest import reduce_pseudoforest
from planarize.treewidth2 import reduce_treewidth2


def ladder(name, reducer, sizes, make):
    prev = None
    print(f"== {name}")
    for size in sizes:
        g = make(size)
        t0 = time.perf_counter()
        sol = reducer(g)
        wall = time.perf_counter() - t0
        ratio = f"{wall / prev:5.2f}" if prev else "    -"
        print(f"  n={g.n:7d} m={g.m:7d} |S|={len(sol.s):7d} {wall:8.3f}s ratio {ratio}")
        prev = wall


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-ladder", default="1000,2000,4000,8000")
    ap.add_argument("--n-ladder", default="10000,20000,40000")
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    t_sizes = [int(x) for x in args.t_ladder.split(",") if x]
    n_sizes = [int(x) for x in args.n_ladder.split(",") if x]

    ladder(
        "pseudoforest on t copies of K33",
        reduce_pseudoforest,
        t_sizes,
        lambda t: gen.disjoint_copies(gen.complete_bipartite(3, 3), t),
    )
    ladder(
        "tw2 on random 4-regular graphs",
        reduce_treewidth2,
        n_sizes,
        lambda n: gen.random_regular(n, 4, args.seed),
    )
    ladder(
        "pseudoforest on random 4-regular graphs",
        reduce_pseudoforest,
        n_sizes,
        lambda n: gen.random_regular(n, 4, args.seed),
    )


if __name__ == "__main__":
    main()

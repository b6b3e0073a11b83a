#!/usr/bin/env python3
"""Random sweep of the connectivity bound chi <= lambda + 1.

Reports how often the bound is tight and how the tight cases split by
lambda, e.g.:

    python3 scripts/sweep_bound.py --seed 1 --count 500 --n-max 10
"""

import argparse
import collections
import random

from hyperchrome import coloring as col
from hyperchrome import connectivity as conn
from hyperchrome import corpus as corp


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tight = collections.Counter()
    slack = collections.Counter()
    for _ in range(args.count):
        g = corp.random_hypergraph(rng, args.n_max)
        chi = col.chromatic_number(g)
        lam = conn.max_local_edge_connectivity(g)
        assert chi <= lam + 1, f"bound violated: {g}"
        (tight if chi == lam + 1 else slack)[lam] += 1

    total_tight = sum(tight.values())
    print(f"{args.count} instances, {total_tight} tight ({total_tight / args.count:.1%})")
    print("lambda  tight  slack")
    for lam in sorted(set(tight) | set(slack)):
        print(f"{lam:6d} {tight[lam]:6d} {slack[lam]:6d}")


if __name__ == "__main__":
    main()

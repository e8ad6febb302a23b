"""Part counts of both partitioners against their ceilings.

Prints CSV rows: method, k, n, delta, parts, ceiling, conjectured, seconds.

    python3 scripts/bound_experiment.py --graphs 20 --seed 1
"""

import argparse
import csv
import random
import sys
import time

from kproper.generators import block_tree_graph, meets_greedy_degree, meets_sqrt_degree, planted_graph
from kproper.graph import min_degree
from kproper.greedy import GreedyParams, bound_report, k_proper_partition_greedy
from kproper.two_proper import two_proper_partition


def block_tree_rows(rng, count, n_max):
    done = 0
    while done < count:
        g = block_tree_graph(rng, rng.randint(20, n_max))
        if not meets_sqrt_degree(g):
            continue
        done += 1
        t0 = time.perf_counter()
        p = two_proper_partition(g)
        secs = time.perf_counter() - t0
        r = bound_report(g.n, min_degree(g), GreedyParams(k=2))
        yield ["block-tree", 2, g.n, min_degree(g), len(p), r.get("block_tree").limit,
               r.get("conjectured").limit, f"{secs:.3f}"]


def greedy_rows(rng, count, k):
    done = 0
    low = 60 if k == 2 else 110
    while done < count:
        sizes = [rng.randint(low, low + 60) for _ in range(rng.randint(1, 5))]
        g = planted_graph(rng, sizes, k, links=rng.choice(("sparse", "spine", "random")), cross=50)
        if not meets_greedy_degree(g, k):
            continue
        done += 1
        params = GreedyParams(k=k)
        t0 = time.perf_counter()
        p, _ = k_proper_partition_greedy(g, params)
        secs = time.perf_counter() - t0
        r = bound_report(g.n, min_degree(g), params)
        yield ["greedy", k, g.n, min_degree(g), len(p), r.get("greedy").limit,
               r.get("conjectured").limit, f"{secs:.3f}"]


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--graphs", type=int, default=20, help="graphs per family")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=400)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = csv.writer(sys.stdout)
    out.writerow(["method", "k", "n", "delta", "parts", "ceiling", "conjectured", "seconds"])
    worst = 0.0
    for rows in (block_tree_rows(rng, args.graphs, args.n_max), greedy_rows(rng, args.graphs, 2),
                 greedy_rows(rng, args.graphs, 3)):
        for row in rows:
            out.writerow(row)
            worst = max(worst, row[4] / row[5])
    print(f"# largest parts/ceiling ratio: {worst:.3f}", file=sys.stderr)


if __name__ == "__main__":
    main()

"""Edges added by the matching chain versus the edit-distance bound.

    python3 scripts/edit_distance.py --graphs 10
"""

import argparse
import random

from kproper.augment import edit_distance_upper_bound, k_connect_by_matchings
from kproper.generators import meets_greedy_degree, planted_graph
from kproper.graph import min_degree
from kproper.greedy import GreedyParams, k_proper_partition_greedy


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--graphs", type=int, default=10)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print("k     n  delta  parts  added  bound    loose  certified")
    done = 0
    while done < args.graphs:
        k = rng.choice((2, 3))
        low = 60 if k == 2 else 110
        sizes = [rng.randint(low, low + 40) for _ in range(rng.randint(2, 5))]
        g = planted_graph(rng, sizes, k, links="none")
        if not meets_greedy_degree(g, k):
            continue
        done += 1
        p, _ = k_proper_partition_greedy(g, GreedyParams(k=k))
        aug = k_connect_by_matchings(g, p.parts, k)
        b = edit_distance_upper_bound(g.n, min_degree(g), k)
        print(f"{k} {g.n:5d} {min_degree(g):6d} {len(p):6d} {len(aug.added):6d} "
              f"{float(b.value):6.1f} {b.loose:8.1f}  {aug.certificate.confirmed}")


if __name__ == "__main__":
    main()

"""Brute-force confirmation of the two tightness constructions.

For each apex graph: does any k-connected subgraph contain the apex? For
each join graph: the minimum number of parts of a k-proper partition,
compared with s.
"""

import argparse

from kproper.extremal import ExtremalSpec, apex_vertex, coupling
from kproper.graph import min_degree
from kproper.oracle import brute_has_k_connected_subgraph, brute_min_k_proper_partition

APEX = [(2, 3, 2), (2, 4, 2), (3, 4, 2), (2, 3, 3), (3, 3, 3)]
JOIN = [(2, 3, 2), (2, 2, 3), (2, 4, 2), (3, 3, 2), (2, 3, 3)]


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()
    print("kind  k  a  b   n  delta  coupled  result")
    for k, l, p in APEX:
        spec = ExtremalSpec("apex", k, l, p)
        g = spec.build()
        found, _ = brute_has_k_connected_subgraph(g, k, must_contain=apex_vertex(k, l, p))
        info = coupling(spec)
        print(f"apex  {k}  {l}  {p}  {g.n:2d}  {min_degree(g):5d}  {str(info['coupled']):7s}  "
              f"apex in a {k}-connected subgraph: {found}")
    for k, r, s in JOIN:
        spec = ExtremalSpec("join", k, r, s)
        g = spec.build()
        best = brute_min_k_proper_partition(g, k)
        got = "no partition" if best is None else f"{best[0]} parts"
        info = coupling(spec)
        print(f"join  {k}  {r}  {s}  {g.n:2d}  {min_degree(g):5d}  {str(info['coupled']):7s}  "
              f"minimum {got}, s = {s}")


if __name__ == "__main__":
    main()

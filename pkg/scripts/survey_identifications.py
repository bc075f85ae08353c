"""Census of edge identifications on triangulated polygons.

For every triangulated n-gon (n in the given range) and every pair of disjoint
boundary edges, try both gluings and tabulate: how many give a simple quotient,
how many meet the color condition, the surface reached, and how often a K4
survives at each distance between the glued edges.
"""

import argparse
from collections import Counter

from heawood.constructions import all_triangulated_polygons, valid_identifications
from heawood.embedding import euler_genus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()
    for n in range(args.min_n, args.max_n + 1):
        kinds, genus, k4 = Counter(), Counter(), Counter()
        polygons = 0
        for tp in all_triangulated_polygons(n):
            polygons += 1
            for q in valid_identifications(tp):
                kind = "twist" if q.spec.twist else "orientable"
                kinds[kind, q.meets_color_condition] += 1
                genus[kind, euler_genus(q.embedding)] += 1
                k4[q.edge_distance, q.has_k4] += 1
        print(f"n={n}: {polygons} polygons")
        print(f"  (kind, color condition) -> count: {dict(sorted(kinds.items()))}")
        print(f"  (kind, Euler genus) -> count: {dict(sorted(genus.items()))}")
        print(f"  (edge distance, has K4) -> count: {dict(sorted(k4.items()))}")


if __name__ == "__main__":
    main()

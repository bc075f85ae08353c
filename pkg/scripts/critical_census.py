"""List the k-critical graphs on at most N vertices and their edge-bound slack.

Slack is 2e - ((k-1)n + k - 3); the bound only applies to K_k-free graphs, so
graphs containing K_k are marked and expected to be K_k itself.
"""

import argparse

from heawood.criticality import edge_bound_survey


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    for k in args.k:
        print(f"k = {k}")
        for c in edge_bound_survey(k, max_n=args.max_n):
            tag = "K_k-free" if c.k_free else "contains K_k"
            print(f"  n={c.graph.n:2d} e={c.graph.e:2d} slack={c.lhs - c.rhs:3d}  {tag}  {list(c.graph.edges)}")


if __name__ == "__main__":
    main()

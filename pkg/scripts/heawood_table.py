"""Print H(eps), the genus window and K_{H+1}-E feasibility for eps = 1..N as CSV."""

import argparse
import csv
import sys

from heawood.constructions import k_h_plus1_minus_E_feasibility
from heawood.verify import heawood_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("eps_max", type=int, nargs="?", default=45)
    args = ap.parse_args()
    w = csv.writer(sys.stdout)
    w.writerow(["eps", "H", "i", "case", "eps_lo", "eps_hi", "special",
                "K_H+1-E_edges", "euler_bound", "status"])
    for row in heawood_table(args.eps_max):
        f = k_h_plus1_minus_E_feasibility(row.epsilon)
        w.writerow([row.epsilon, row.heawood, row.i, row.case, row.eps_lo, row.eps_hi,
                    int(row.special), f.edges, f.bound, f.status or ""])


if __name__ == "__main__":
    main()

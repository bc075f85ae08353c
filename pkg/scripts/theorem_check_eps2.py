"""Small-graph theorem check on the Klein bottle / torus genus (eps = 2).

All connected graphs on up to 7 vertices with every nonempty face subset is
expensive in pure Python; --max-classes caps the classes per vertex count and
--max-n the size.
"""

import argparse
import time

from heawood.verify import verify_small_graphs


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--max-classes", type=int, default=None)
    ap.add_argument("--palette-bound", type=int, default=None)
    args = ap.parse_args()
    start = time.perf_counter()
    s = verify_small_graphs(2, max_n=args.max_n, max_classes=args.max_classes,
                       palette_bound=args.palette_bound)
    for n, classes, checked, bad in s.per_n:
        print(f"n={n}: {classes} classes, {checked} face subsets searched, {bad} with a face K6")
    print(f"violations: {len(s.violations)}  ({time.perf_counter() - start:.1f}s)")
    for v in s.violations[:5]:
        print("  ", v)


if __name__ == "__main__":
    main()

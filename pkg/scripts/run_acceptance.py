"""Run the ten acceptance criteria outside pytest and print one line each.

    python scripts/run_acceptance.py            # all criteria
    python scripts/run_acceptance.py 3 8        # a subset
"""

import argparse
import sys

from heawood import acceptance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("numbers", nargs="*", type=int, default=sorted(acceptance.CRITERIA))
    args = ap.parse_args()
    bad = 0
    for k in args.numbers:
        r = acceptance.run(k)
        print(r.line(), flush=True)
        bad += not r.ok
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Scan a grid of higher-order relation parameters, including out-of-range ones.

For a chosen pair (i, j) this expands the order-l alternating sum for
every l and outer exponent m in a grid and reports which instances
vanish.  In-range instances must vanish; out-of-range instances are
evaluated with the exploratory flag and usually leave a remainder, which
makes the admissibility boundary visible.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from qcluster.relations import higher_verify
from qcluster.seeds import load_seed

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", default=str(FIXTURES / "exam1.json"))
    parser.add_argument("--i", type=int, default=2)
    parser.add_argument("--j", type=int, default=1)
    parser.add_argument("--max-l", type=int, default=3)
    parser.add_argument("--max-m", type=int, default=8)
    args = parser.parse_args()

    seed = load_seed(args.seed)
    b = seed.b_entry(args.i, args.j)
    size = abs(b)
    print(f"b_{args.i}{args.j} = {b}; admissible: l <= {size}, m >= l*{size}")
    print(f"{'l':>3} {'m':>3}  in-range  vanishes")
    for l in range(1, args.max_l + 1):
        for m in range(args.max_m + 1):
            in_range = (b == 0 and m >= 0) or (0 < l <= size and m >= l * size)
            cert = higher_verify(seed, args.i, args.j, l, m, exploratory=True)
            marker = "yes" if in_range else " no"
            print(f"{l:>3} {m:>3}      {marker}       {'yes' if cert.ok else ' no'}")
            if in_range and not cert.ok:
                print("UNEXPECTED nonzero remainder:", cert.residue)
                return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

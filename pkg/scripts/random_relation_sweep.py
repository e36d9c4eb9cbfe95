#!/usr/bin/env python3
"""Stress the relation suite on randomly generated principal seeds.

Generates skew-symmetrizable exchange matrices with bounded entries and
symmetrizers, then runs every direct, reversed-side, and minimal
higher-order relation check on each.
"""

import argparse
import pathlib
import random
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from qcluster.relations import full_suite
from qcluster.seeds import random_principal_seed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=50, help="number of random seeds")
    parser.add_argument("--rank", type=int, choices=(2, 3, 4), default=None,
                        help="mutable rank n (default: mix of 2 and 3)")
    parser.add_argument("--max-entry", type=int, default=3)
    parser.add_argument("--max-d", type=int, default=3)
    parser.add_argument("--rng-seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.rng_seed)
    started = time.perf_counter()
    total = 0
    failures = 0
    for index in range(args.count):
        rank = args.rank or rng.choice([2, 3])
        seed = random_principal_seed(rng, rank, max_entry=args.max_entry, max_d=args.max_d)
        certificates = full_suite(seed)
        total += len(certificates)
        bad = [c for c in certificates if not c.ok]
        failures += len(bad)
        flat = ";".join(f"{row}" for row in seed.exchange.principal_part())
        status = "ok" if not bad else "FAIL"
        print(f"seed {index:3d}  n={rank}  d={list(seed.d)}  B={flat}  "
              f"{len(certificates) - len(bad)}/{len(certificates)} {status}")
        for cert in bad:
            print("  " + cert.render().replace("\n", "\n  "))
    elapsed = time.perf_counter() - started
    print(f"\n{args.count} seeds, {total} certificates, {failures} failures, {elapsed:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

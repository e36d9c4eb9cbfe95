#!/usr/bin/env python3
"""Walk the two bundled example seeds end to end.

Prints the seed matrices, one-step variables, commutator witnesses, and
the full relation suite for fixtures/exam1.json and fixtures/exam3.json.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from qcluster.relations import commutator_witness, full_suite, one_step_variables
from qcluster.seeds import load_seed

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def show(seed_path):
    seed = load_seed(seed_path)
    print(f"== {seed_path.name}: n={seed.n}, m={seed.m}, d={list(seed.d)}")
    print("Lambda:")
    for row in seed.form.rows():
        print("   " + " ".join(f"{v:3d}" for v in row))
    print("Btilde:")
    for row in seed.exchange.btilde:
        print("   " + " ".join(f"{v:3d}" for v in row))

    variables = one_step_variables(seed)
    for k, value in enumerate(variables, start=1):
        print(f"y{k} = {value}")

    for i in range(1, seed.n + 1):
        for j in range(1, seed.n + 1):
            if i != j and seed.b_entry(i, j) < 0:
                print(f"[y{i}, y{j}] = {commutator_witness(seed, i, j)}")

    certificates = full_suite(seed)
    for cert in certificates:
        print(cert.render())
    failed = [c for c in certificates if not c.ok]
    print(f"-> {len(certificates) - len(failed)}/{len(certificates)} relation checks passed")
    return not failed


def main():
    ok = True
    for name in ("exam1.json", "exam3.json"):
        ok = show(FIXTURES / name) and ok
        print()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

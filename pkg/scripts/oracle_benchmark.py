"""Compare the sequence formula with the presentation oracle on random schemes.

Usage: python scripts/oracle_benchmark.py [--count N] [--seed S] [--max-points P] [--max-mult M]

Prints per-scheme timings and a final mismatch count; exits 1 on any mismatch.
"""
import argparse
import random
import time

from fatkahler.kaehler import hf_omega, hf_omega_oracle
from fatkahler.sampling import random_scheme


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-points", type=int, default=6)
    ap.add_argument("--max-mult", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    mismatches = 0
    for k in range(args.count):
        Y = random_scheme(rng, args.max_points, args.max_mult)
        t0 = time.perf_counter()
        formula = hf_omega(Y)
        t1 = time.perf_counter()
        oracle = hf_omega_oracle(Y, formula.rows, formula.cols)
        t2 = time.perf_counter()
        same = formula.data == oracle.data
        mismatches += not same
        print(
            f"{k:3d} deg={Y.degree:3d} window={formula.rows}x{formula.cols} "
            f"formula={t1 - t0:6.2f}s oracle={t2 - t1:6.2f}s {'EQUAL' if same else 'DIFFER'}"
        )
    print(f"{mismatches} mismatches in {args.count} schemes")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()

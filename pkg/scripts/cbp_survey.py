"""Survey random reduced ACM sets: CBP, CI and the different criterion side by side.

Usage: python scripts/cbp_survey.py [--count N] [--seed S] [--max-points P]
"""
import argparse
import random
from collections import Counter

from fatkahler.sampling import random_acm_scheme
from fatkahler.separators import cbp_different_criterion, is_cbp, is_ci


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-points", type=int, default=9)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    outcomes = Counter()
    for _ in range(args.count):
        X = random_acm_scheme(rng, args.max_points)
        outcomes[(is_cbp(X), is_ci(X), cbp_different_criterion(X))] += 1
    for (cbp, ci, diff), n in sorted(outcomes.items()):
        print(f"cbp={cbp!s:5} ci={ci!s:5} different={diff!s:5}  {n}")
    agree = all(len(set(key)) == 1 for key in outcomes)
    print("all three agree" if agree else "DISAGREEMENT FOUND")
    raise SystemExit(0 if agree else 1)


if __name__ == "__main__":
    main()

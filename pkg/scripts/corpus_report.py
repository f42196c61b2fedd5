"""Oracle-equivalence report over a seeded random pair corpus.

For each pair (I, J) the minimized generalized Taylor complex is
compared against the minimized Taylor complex of I+J, and likewise the
intersection construction against I meet J.  Prints timing and the
generator-count profile of the corpus.
"""

import argparse
import collections
import time

from monres.complexes import minimize
from monres.constructions import (
    taylor, gen_taylor, double_star, minimal_resolution,
)
from monres.monomials import ideal_sum, ideal_intersection
from monres.randgen import CorpusConfig, ideal_pairs


def betti(I):
    _, table = minimize(taylor(I))
    return table.entries


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=12345)
    ap.add_argument("--max-vars", type=int, default=6)
    ap.add_argument("--max-gens", type=int, default=4)
    args = ap.parse_args()

    config = CorpusConfig(count=args.count, seed=args.seed,
                          max_vars=args.max_vars, max_gens=args.max_gens)
    profile = collections.Counter()
    mismatches = 0
    start = time.monotonic()
    for I, J in ideal_pairs(config):
        profile[(len(I.gens), len(J.gens))] += 1
        F, G = minimal_resolution(I), minimal_resolution(J)
        _, ts = minimize(gen_taylor(F, G))
        if ts.entries != betti(ideal_sum(I, J)):
            mismatches += 1
            print("sum mismatch on %s, %s" % (I, J))
        N = ideal_intersection(I, J)
        if not N.is_zero:
            _, td = minimize(double_star(F, G))
            if td.entries != betti(N):
                mismatches += 1
                print("intersection mismatch on %s, %s" % (I, J))
    elapsed = time.monotonic() - start

    print("pairs: %d  seed: %d  elapsed: %.2fs" % (args.count, args.seed, elapsed))
    print("mismatches: %d" % mismatches)
    print("generator-count profile (after minimalization):")
    for key in sorted(profile):
        print("  %s: %d" % (key, profile[key]))


if __name__ == "__main__":
    main()

"""Golod-style property survey over squarefree quasitransverse pairs.

For each seeded pair (I, J): injectivity of the two Koszul homology
algebras into the homology of the sum, vanishing of degree-one products
for the intersection, the trivial-Massey chain condition, and whether
each factor's homology has the expected monomial-cycle form.
"""

import argparse
import collections

from monres.koszul import (
    expected_form, golod_injectivity, h1_product_vanishing, massey_condition,
)
from monres.monomials import ideal_intersection
from monres.randgen import quasitransverse_squarefree_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=25)
    ap.add_argument("--seed", type=int, default=20260824)
    args = ap.parse_args()

    pairs = quasitransverse_squarefree_pairs(args.count, seed=args.seed)
    stats = collections.Counter()
    for I, J in pairs:
        stats["golod_injective"] += golod_injectivity(I, J)
        stats["h1_vanishing"] += h1_product_vanishing(
            ideal_intersection(I, J))[0]
        stats["massey"] += massey_condition(I, J)[0]
        stats["expected_form_I"] += expected_form(I)[0]
        stats["expected_form_J"] += expected_form(J)[0]

    print("pairs: %d  seed: %d" % (len(pairs), args.seed))
    for key in sorted(stats):
        print("  %s: %d / %d" % (key, stats[key], len(pairs)))


if __name__ == "__main__":
    main()

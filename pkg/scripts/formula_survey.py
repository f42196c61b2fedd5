"""Survey of the closed-form rescaled-product formulas on homology.

The induced maps on Koszul homology for sums and intersections are
computed from canonical cycle lifts of the resolution bases.  Two
closed-form candidates for those images exist in the literature on
rescaled products: a termwise-lcm of the two cycle representatives, and
a gcd-division form.  Both depend on the chosen representatives; this
script counts, over a seeded corpus of squarefree quasitransverse
pairs, how often each candidate fails to be a cycle or lands in a
different homology class than the canonical image.
"""

import argparse

from monres.koszul import kunneth_rescaled, intersection_homology_map
from monres.randgen import quasitransverse_squarefree_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=25)
    ap.add_argument("--seed", type=int, default=20260824)
    args = ap.parse_args()

    pairs = quasitransverse_squarefree_pairs(args.count, seed=args.seed)
    tallies = {"sum": [0, 0, 0], "intersection": [0, 0, 0]}
    not_iso = 0
    for I, J in pairs:
        for name, rep in (("sum", kunneth_rescaled(I, J)),
                          ("intersection", intersection_homology_map(I, J))):
            if not rep.ok:
                not_iso += 1
                print("%s map not an isomorphism on %s, %s" % (name, I, J))
                continue
            t = tallies[name]
            t[0] += len(rep.lcm_noncycles)
            t[1] += len(rep.lcm_mismatches)
            t[2] += len(rep.gcd_noncycles)

    print("pairs: %d  seed: %d  non-isomorphisms: %d"
          % (len(pairs), args.seed, not_iso))
    for name, (nc, mm, gnc) in tallies.items():
        print("%s map: lcm non-cycles %d, lcm class mismatches %d, "
              "gcd-division non-cycles %d" % (name, nc, mm, gnc))


if __name__ == "__main__":
    main()

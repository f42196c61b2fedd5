"""Exponent-vector monomial arithmetic and monomial ideals.

A multidegree is a tuple of non-negative ints of length n and doubles
as the monomial x^m.  The all-zero tuple is the monomial 1.
"""

from dataclasses import dataclass


class DimensionError(ValueError):
    pass


def check_same_length(a, b):
    if len(a) != len(b):
        raise DimensionError("multidegree lengths differ: %d vs %d" % (len(a), len(b)))


def mdeg_lcm(a, b):
    check_same_length(a, b)
    return tuple(x if x > y else y for x, y in zip(a, b))


def mdeg_gcd(a, b):
    check_same_length(a, b)
    return tuple(x if x < y else y for x, y in zip(a, b))


def lcm_gcd(a, b):
    """Componentwise (max, min) of two multidegrees."""
    check_same_length(a, b)
    return mdeg_lcm(a, b), mdeg_gcd(a, b)


def mdeg_add(a, b):
    check_same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mdeg_sub(a, b):
    """a - b; requires b <= a componentwise."""
    check_same_length(a, b)
    d = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in d):
        raise ValueError("multidegree subtraction went negative: %r - %r" % (a, b))
    return d


def divides(a, b):
    """True iff x^a divides x^b, i.e. a <= b componentwise."""
    check_same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def is_squarefree(a):
    return all(x <= 1 for x in a)


def total_degree(a):
    return sum(a)


def mdeg_str(a, var="x"):
    if all(e == 0 for e in a):
        return "1"
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append("%s%d" % (var, i + 1))
        elif e > 1:
            parts.append("%s%d^%d" % (var, i + 1, e))
    return "*".join(parts)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal monic generating set G(I).

    Construct through :func:`minimalize` (or ``MonomialIdeal.make``),
    which deduplicates, drops divisible generators and sorts lex.
    """

    n: int
    gens: tuple

    @staticmethod
    def make(n, gens):
        return minimalize(n, gens)

    @property
    def is_zero(self):
        return len(self.gens) == 0

    @property
    def is_unit(self):
        return any(all(e == 0 for e in g) for g in self.gens)

    @property
    def is_proper(self):
        return not self.is_unit

    @property
    def is_squarefree(self):
        return all(is_squarefree(g) for g in self.gens)

    def contains(self, m):
        """True iff x^m lies in the ideal (some generator divides m)."""
        if len(m) != self.n:
            raise DimensionError("monomial length %d != variable count %d" % (len(m), self.n))
        return any(divides(g, m) for g in self.gens)

    def total_lcm(self):
        out = (0,) * self.n
        for g in self.gens:
            out = mdeg_lcm(out, g)
        return out

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(mdeg_str(g) for g in self.gens) + ")"


def minimalize(n, gens):
    """Minimal generating set: keep exactly the <=-minimal elements."""
    gens = list(gens)
    for g in gens:
        if len(g) != n:
            raise DimensionError("generator length %d != variable count %d" % (len(g), n))
        if any(e < 0 for e in g):
            raise ValueError("negative exponent in %r" % (g,))
    uniq = sorted(set(tuple(g) for g in gens))
    keep = [g for g in uniq if not any(h != g and divides(h, g) for h in uniq)]
    return MonomialIdeal(n, tuple(keep))


def ideal_sum(I, J):
    if I.n != J.n:
        raise DimensionError("variable counts differ: %d vs %d" % (I.n, J.n))
    return minimalize(I.n, I.gens + J.gens)


def ideal_intersection(I, J):
    """Intersection via minimalized pairwise lcms of the generators."""
    if I.n != J.n:
        raise DimensionError("variable counts differ: %d vs %d" % (I.n, J.n))
    return minimalize(I.n, [mdeg_lcm(u, v) for u in I.gens for v in J.gens])


def subset_lcms(I):
    """All distinct lcms of subsets of G(I), including the empty lcm 0."""
    acc = {(0,) * I.n}
    for g in I.gens:
        acc |= {mdeg_lcm(s, g) for s in acc}
    return acc


def candidate_multidegrees(I, shifts=True):
    """Multidegrees where Koszul homology of R/I can live.

    Subset lcms, optionally shifted by 0/1 vectors and capped at the
    total lcm componentwise; a finite cover of all Tor multidegrees.
    """
    cap = I.total_lcm()
    base = subset_lcms(I)
    if not shifts:
        return sorted(base)
    out = set(base)
    n = I.n
    for s in base:
        grow = [s]
        for k in range(n):
            nxt = []
            for v in grow:
                nxt.append(v)
                if v[k] < cap[k]:
                    nxt.append(v[:k] + (v[k] + 1,) + v[k + 1:])
            grow = nxt
        out |= set(grow)
    return sorted(out)

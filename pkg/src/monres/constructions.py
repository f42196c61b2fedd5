"""Builders: Taylor complexes, the generalized Taylor complex F*G,
truncations, Star(F,G), F**G, and quasitransverse detection."""

from itertools import combinations

from .fields import QQ
from .monomials import mdeg_lcm, mdeg_add, DimensionError
from .complexes import (
    UNIT, subset_label, star_label, build_complex, make_element_id,
    BasisElement, MultigradedComplex, label_sort_key, verify, is_minimal,
    nonminimal_witness, minimize, stratum_homology,
)


def taylor(I):
    """Taylor complex of R/I: basis the subsets of G(I), mdeg the lcms.

    Incidence sign for dropping the j-th element of a sorted subset is
    (-1)^(j+1) with 1-based j.  Augmented: hdeg 0 is the unit.
    """
    if I.is_unit:
        raise ValueError("Taylor complex requires a proper ideal")
    r = len(I.gens)
    elements = [(0, (0,) * I.n, UNIT)]
    entries = {}
    lcm_of = {(): (0,) * I.n}
    for size in range(1, r + 1):
        for sigma in combinations(range(r), size):
            m = (0,) * I.n
            for j in sigma:
                m = mdeg_lcm(m, I.gens[j])
            lcm_of[sigma] = m
            elements.append((size, m, subset_label(sigma)))
            for pos, j in enumerate(sigma):
                tau = sigma[:pos] + sigma[pos + 1:]
                sign = 1 if pos % 2 == 0 else -1
                tl = UNIT if not tau else subset_label(tau)
                entries[(size, tl, subset_label(sigma))] = sign
    return build_complex(I.n, QQ, elements, {k: QQ.of(v) for k, v in entries.items()})


def taylor_over(I, field):
    C = taylor(I)
    return MultigradedComplex(
        C.n, field, C.bases,
        {i: {k: field.of(int(v)) for k, v in d.items()} for i, d in C.diff.items()})


def _check_augmented(C, name):
    b0 = C.basis(0)
    if len(b0) != 1 or any(e != 0 for e in b0[0].mdeg):
        raise ValueError("%s must be augmented: hdeg 0 of rank 1 with mdeg 0" % name)


def gen_taylor_pairs(F, G, check=True):
    """Generalized Taylor complex F*G plus the pair map id -> (fid, gid)."""
    if F.n != G.n:
        raise DimensionError("variable counts differ: %d vs %d" % (F.n, G.n))
    if F.field != G.field:
        raise ValueError("coefficient fields differ")
    if check:
        for C, name in ((F, "F"), (G, "G")):
            rep = verify(C)
            if not rep.ok:
                raise ValueError("%s fails verification: %s" % (name, rep))
            _check_augmented(C, name)
    field = F.field
    bases = {}
    pair_of = {}
    id_of_pair = {}
    for i in sorted(F.bases):
        for f in F.basis(i):
            for j in sorted(G.bases):
                for g in G.basis(j):
                    lab = star_label([f.label, g.label])
                    b = BasisElement(make_element_id(i + j, lab), i + j,
                                     mdeg_lcm(f.mdeg, g.mdeg), lab)
                    bases.setdefault(i + j, []).append(b)
                    pair_of[b.id] = (f.id, g.id)
                    id_of_pair[(f.id, g.id)] = b.id
    for i in bases:
        bases[i].sort(key=lambda b: label_sort_key(b.label))
    diff = {}
    for bid, (fid, gid) in pair_of.items():
        f = F.by_id[fid]
        g = G.by_id[gid]
        n = f.hdeg + g.hdeg
        if n == 0:
            continue
        d = diff.setdefault(n, {})
        for t, c in F.differential_of(f).items():
            tid = id_of_pair[(t, gid)]
            d[(tid, bid)] = field.add(d.get((tid, bid), field.zero), c)
        sign = field.one if f.hdeg % 2 == 0 else field.neg(field.one)
        for t, c in G.differential_of(g).items():
            tid = id_of_pair[(fid, t)]
            d[(tid, bid)] = field.add(d.get((tid, bid), field.zero),
                                      field.mul(sign, c))
    C = MultigradedComplex(F.n, field, bases, diff)
    return C, pair_of


def gen_taylor(F, G):
    """The generalized Taylor complex F*G, an lcm-twisted tensor."""
    C, _ = gen_taylor_pairs(F, G)
    return C


def gen_taylor_many(complexes):
    """Left fold of gen_taylor; returns (complex, id -> factor-id tuple)."""
    if not complexes:
        raise ValueError("need at least one complex")
    C = complexes[0]
    factors = {b.id: (b.id,) for bs in C.bases.values() for b in bs}
    for Nxt in complexes[1:]:
        C2, pair_of = gen_taylor_pairs(C, Nxt)
        factors = {bid: factors[fid] + (gid,) for bid, (fid, gid) in pair_of.items()}
        C = C2
    return C, factors


def truncate(C, n):
    """Modules kept for hdeg >= n; differentials kept for hdeg > n."""
    bases = {i: bs for i, bs in C.bases.items() if i >= n}
    diff = {i: d for i, d in C.diff.items() if i > n}
    return MultigradedComplex(C.n, C.field, bases, diff)


def star_product_complex(F, G, check=True):
    """Star(F,G): tensor-style complex resolving R/(I*J) shapes.

    Basis f (x) g with |f|,|g| >= 1 in hdeg |f|+|g|-1 and mdeg the sum;
    hdeg-1 map sends f1 (x) g1 to the product monomial on the unit.
    """
    if F.n != G.n:
        raise DimensionError("variable counts differ")
    if check:
        for C, name in ((F, "F"), (G, "G")):
            rep = verify(C)
            if not rep.ok:
                raise ValueError("%s fails verification: %s" % (name, rep))
            _check_augmented(C, name)
    field = F.field
    bases = {0: [BasisElement(make_element_id(0, UNIT), 0, (0,) * F.n, UNIT)]}
    id_of_pair = {}
    for i in sorted(F.bases):
        if i < 1:
            continue
        for f in F.basis(i):
            for j in sorted(G.bases):
                if j < 1:
                    continue
                for g in G.basis(j):
                    lab = star_label([f.label, g.label])
                    b = BasisElement(make_element_id(i + j - 1, lab), i + j - 1,
                                     mdeg_add(f.mdeg, g.mdeg), lab)
                    bases.setdefault(i + j - 1, []).append(b)
                    id_of_pair[(f.id, g.id)] = b.id
    for i in bases:
        bases[i].sort(key=lambda b: label_sort_key(b.label))
    unit_id = bases[0][0].id
    diff = {}
    for (fid, gid), bid in id_of_pair.items():
        f = F.by_id[fid]
        g = G.by_id[gid]
        n = f.hdeg + g.hdeg - 1
        d = diff.setdefault(n, {})
        if n == 1:
            d[(unit_id, bid)] = field.one
            continue
        for t, c in F.differential_of(f).items():
            if F.by_id[t].hdeg >= 1:
                tid = id_of_pair[(t, gid)]
                d[(tid, bid)] = field.add(d.get((tid, bid), field.zero), c)
        sign = field.one if f.hdeg % 2 == 0 else field.neg(field.one)
        for t, c in G.differential_of(g).items():
            if G.by_id[t].hdeg >= 1:
                tid = id_of_pair[(fid, t)]
                d[(tid, bid)] = field.add(d.get((tid, bid), field.zero),
                                          field.mul(sign, c))
    return MultigradedComplex(F.n, field, bases, diff)


def double_star_pairs(F, G, check=True):
    """F**G resolving R/(I cap J), plus the pair map id -> (fid, gid).

    hdeg-1 map sends f1*g1 to the lcm monomial on the unit; higher
    differentials are those of F_{>=1} * G_{>=1} shifted down by one.
    """
    if F.n != G.n:
        raise DimensionError("variable counts differ")
    if check:
        for C, name in ((F, "F"), (G, "G")):
            rep = verify(C)
            if not rep.ok:
                raise ValueError("%s fails verification: %s" % (name, rep))
            _check_augmented(C, name)
    field = F.field
    bases = {0: [BasisElement(make_element_id(0, UNIT), 0, (0,) * F.n, UNIT)]}
    id_of_pair = {}
    pair_of = {}
    for i in sorted(F.bases):
        if i < 1:
            continue
        for f in F.basis(i):
            for j in sorted(G.bases):
                if j < 1:
                    continue
                for g in G.basis(j):
                    lab = star_label([f.label, g.label])
                    b = BasisElement(make_element_id(i + j - 1, lab), i + j - 1,
                                     mdeg_lcm(f.mdeg, g.mdeg), lab)
                    bases.setdefault(i + j - 1, []).append(b)
                    id_of_pair[(f.id, g.id)] = b.id
                    pair_of[b.id] = (f.id, g.id)
    for i in bases:
        bases[i].sort(key=lambda b: label_sort_key(b.label))
    unit_id = bases[0][0].id
    diff = {}
    for (fid, gid), bid in id_of_pair.items():
        f = F.by_id[fid]
        g = G.by_id[gid]
        n = f.hdeg + g.hdeg - 1
        d = diff.setdefault(n, {})
        if n == 1:
            d[(unit_id, bid)] = field.one
            continue
        for t, c in F.differential_of(f).items():
            if F.by_id[t].hdeg >= 1:
                tid = id_of_pair[(t, gid)]
                d[(tid, bid)] = field.add(d.get((tid, bid), field.zero), c)
        sign = field.one if f.hdeg % 2 == 0 else field.neg(field.one)
        for t, c in G.differential_of(g).items():
            if G.by_id[t].hdeg >= 1:
                tid = id_of_pair[(fid, t)]
                d[(tid, bid)] = field.add(d.get((tid, bid), field.zero),
                                          field.mul(sign, c))
    C = MultigradedComplex(F.n, field, bases, diff)
    return C, pair_of


def double_star(F, G):
    C, _ = double_star_pairs(F, G)
    return C


def double_star_many(complexes):
    """Left fold of the **-product."""
    if not complexes:
        raise ValueError("need at least one complex")
    C = complexes[0]
    for Nxt in complexes[1:]:
        C = double_star(C, Nxt)
    return C


def resolves_by_strata(C):
    """True iff every basis-multidegree stratum has homology only in hdeg 0.

    On failure returns (False, witness multidegree); on success (True, None).
    """
    seen = set()
    for i, bs in C.bases.items():
        for b in bs:
            seen.add(b.mdeg)
    for m in sorted(seen):
        dims = stratum_homology(C, m)
        if any(v != 0 for v in dims[1:]):
            return False, m
    return True, None


def gen_taylor_resolves(F, G, I=None, J=None):
    """Self-test that F*G is acyclic in positive degrees, stratum by stratum."""
    T = gen_taylor(F, G)
    ok, witness = resolves_by_strata(T)
    return ok


def minimal_resolution(I, field=None):
    """Canonical minimal free resolution: minimize(taylor(I))."""
    C = taylor(I) if field is None else taylor_over(I, field)
    M, _ = minimize(C)
    return M


def quasitransverse(ideals, field=None):
    """Quasitransverse test for a family of proper nonzero monomial ideals.

    Folds the generalized Taylor complex of the canonical minimal
    resolutions and tests minimality.  Returns (bool, witness) where the
    witness on False is a covering pair (source_id, target_id) of equal
    multidegree (equivalently equal total lcm-degree).
    """
    for I in ideals:
        if I.is_unit or I.is_zero:
            raise ValueError("quasitransverse needs proper nonzero ideals, got %s" % I)
    Fs = [minimal_resolution(I, field) for I in ideals]
    S, _ = gen_taylor_many(Fs)
    if is_minimal(S):
        return True, None
    return False, nonminimal_witness(S)

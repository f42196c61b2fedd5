"""Standard and generalized Scarf complexes, quasiscarf detection."""

from dataclasses import dataclass, field as dc_field

from .monomials import ideal_sum
from .complexes import MultigradedComplex, ranks_table, minimize
from .constructions import taylor, gen_taylor_many, minimal_resolution


def _subcomplex(C, keep_ids):
    bases = {i: [b for b in bs if b.id in keep_ids] for i, bs in C.bases.items()}
    diff = {}
    for i, d in C.diff.items():
        sub = {(t, s): c for (t, s), c in d.items()
               if t in keep_ids and s in keep_ids}
        if sub:
            diff[i] = sub
    return MultigradedComplex(C.n, C.field, bases, diff)


def scarf(I):
    """Standard Scarf complex: Taylor basis elements with unique lcm."""
    if I.is_unit:
        raise ValueError("Scarf complex requires a proper ideal")
    T = taylor(I)
    counts = {}
    for bs in T.bases.values():
        for b in bs:
            counts[b.mdeg] = counts.get(b.mdeg, 0) + 1
    keep = {b.id for bs in T.bases.values() for b in bs if counts[b.mdeg] == 1}
    return _subcomplex(T, keep)


@dataclass
class ScarfReport:
    complex: MultigradedComplex
    unique_mdeg_count: int
    standard_scarf_count: int
    dropped: list = dc_field(default_factory=list)
    extra_mdegs: list = dc_field(default_factory=list)
    unique_per_hdeg_count: int = 0

    def ranks(self):
        return tuple(self.complex.rank(i)
                     for i in range(0, self.complex.max_hdeg + 1))


def _check_disjoint_gens(ideals):
    seen = {}
    for k, I in enumerate(ideals):
        for g in I.gens:
            if g in seen:
                raise ValueError(
                    "generating sets must be pairwise disjoint: %r appears in "
                    "ideals %d and %d" % (g, seen[g], k))
            seen[g] = k


def gen_scarf(ideals, field=None):
    """Generalized Scarf complex of a family with disjoint generator sets.

    S_0 = R and S_1 = F_1 for F the generalized Taylor fold of the
    canonical minimal resolutions; for i >= 2 a basis element is kept iff
    its multidegree is unique among all basis elements of F (every
    homological degree) and its differential lands in S_{i-1}.
    """
    _check_disjoint_gens(ideals)
    Fs = [minimal_resolution(I, field) for I in ideals]
    F, _ = gen_taylor_many(Fs)

    counts = {}
    per_hdeg_counts = {}
    for i, bs in F.bases.items():
        for b in bs:
            counts[b.mdeg] = counts.get(b.mdeg, 0) + 1
            key = (i, b.mdeg)
            per_hdeg_counts[key] = per_hdeg_counts.get(key, 0) + 1
    unique_mdeg_count = sum(1 for v in counts.values() if v == 1)
    unique_per_hdeg_count = sum(1 for v in per_hdeg_counts.values() if v == 1)

    keep = set()
    for b in F.basis(0):
        keep.add(b.id)
    for b in F.basis(1):
        keep.add(b.id)
    for i in range(2, F.max_hdeg + 1):
        d = F.diff.get(i, {})
        for b in F.basis(i):
            if counts[b.mdeg] != 1:
                continue
            targets = {t for (t, s) in d if s == b.id}
            if targets <= keep:
                keep.add(b.id)
    S = _subcomplex(F, keep)

    dropped = sorted(
        b.id for bs in F.bases.values() for b in bs
        if counts[b.mdeg] == 1 and b.id not in keep)

    total = ideals[0]
    for I in ideals[1:]:
        total = ideal_sum(total, I)
    std = scarf(total)
    std_mdegs = {b.mdeg for bs in std.bases.values() for b in bs}
    own_mdegs = {b.mdeg for bs in S.bases.values() for b in bs}
    extra = sorted(own_mdegs - std_mdegs)

    return ScarfReport(
        complex=S,
        unique_mdeg_count=unique_mdeg_count,
        standard_scarf_count=std.total_rank(),
        dropped=dropped,
        extra_mdegs=extra,
        unique_per_hdeg_count=unique_per_hdeg_count,
    )


def is_quasiscarf(ideals, field=None):
    """True iff the generalized Scarf complex resolves R/(sum of ideals)."""
    report = gen_scarf(ideals, field)
    total = ideals[0]
    for I in ideals[1:]:
        total = ideal_sum(total, I)
    Tm = taylor(total) if field is None else None
    if Tm is None:
        from .constructions import taylor_over
        Tm = taylor_over(total, field)
    _, betti = minimize(Tm)
    return ranks_table(report.complex) == betti

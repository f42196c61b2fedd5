"""Multigraded free complexes with scalar frames.

A complex stores, per homological degree, an ordered list of labeled
basis elements with multidegrees, and per degree i >= 1 a sparse scalar
matrix ``diff[i][(target_id, source_id)]``.  The true differential entry
is scalar * x^(mdeg(source) - mdeg(target)); homogeneity requires
mdeg(source) >= mdeg(target) wherever the scalar is nonzero, so checking
d^2 = 0 and minimality is pure field arithmetic.
"""

from dataclasses import dataclass, field as dc_field

from .fields import QQ
from . import linalg
from .monomials import divides, mdeg_str


# ---------------------------------------------------------------------------
# labels

UNIT = ("unit",)


def gen_label(i):
    return ("gen", i)


def subset_label(indices):
    return ("subset", tuple(sorted(indices)))


def star_label(children):
    """Star label with flattening of nested stars."""
    flat = []
    for c in children:
        if c[0] == "star":
            flat.extend(c[1])
        else:
            flat.append(c)
    return ("star", tuple(flat))


def free_label(text):
    return ("free", text)


def label_sort_key(label):
    kind = label[0]
    if kind == "unit":
        return ("unit",)
    if kind == "gen":
        return ("gen", label[1])
    if kind == "subset":
        return ("subset", label[1])
    if kind == "star":
        return ("star", tuple(label_sort_key(c) for c in label[1]))
    if kind == "free":
        return ("zfree", label[1])
    raise ValueError("unknown label kind %r" % (kind,))


def label_str(label):
    kind = label[0]
    if kind == "unit":
        return "1"
    if kind == "gen":
        return "g%d" % label[1]
    if kind == "subset":
        return "{" + ",".join(str(i) for i in label[1]) + "}"
    if kind == "star":
        return "*".join(label_str(c) for c in label[1])
    if kind == "free":
        return label[1]
    raise ValueError("unknown label kind %r" % (kind,))


# ---------------------------------------------------------------------------
# complex data

@dataclass(frozen=True)
class BasisElement:
    id: str
    hdeg: int
    mdeg: tuple
    label: tuple


class MultigradedComplex:
    """Bases per homological degree plus sparse scalar differentials."""

    def __init__(self, n, field, bases, diff):
        self.n = n
        self.field = field
        self.bases = {i: list(bs) for i, bs in bases.items() if bs}
        self.diff = {i: {k: v for k, v in d.items() if v != field.zero}
                     for i, d in diff.items()}
        self.diff = {i: d for i, d in self.diff.items() if d}
        self.by_id = {}
        for bs in self.bases.values():
            for b in bs:
                if b.id in self.by_id:
                    raise ValueError("duplicate basis id %r" % b.id)
                self.by_id[b.id] = b

    @property
    def max_hdeg(self):
        return max(self.bases) if self.bases else -1

    def basis(self, i):
        return self.bases.get(i, [])

    def rank(self, i):
        return len(self.bases.get(i, []))

    def entry(self, i, target_id, source_id):
        return self.diff.get(i, {}).get((target_id, source_id), self.field.zero)

    def columns(self, i):
        """Differential at degree i as source_id -> {target_id: scalar}."""
        cols = {}
        for (t, s), c in self.diff.get(i, {}).items():
            cols.setdefault(s, {})[t] = c
        return cols

    def differential_of(self, b):
        """d(b) as a coefficient dict target_id -> scalar (frame form)."""
        out = {}
        for (t, s), c in self.diff.get(b.hdeg, {}).items():
            if s == b.id:
                out[t] = c
        return out

    def total_rank(self):
        return sum(len(bs) for bs in self.bases.values())


def make_element_id(hdeg, label):
    return "h%d:%s" % (hdeg, label_str(label))


def build_complex(n, field, elements, entries):
    """Assemble a complex from (hdeg, mdeg, label) triples and entries.

    Bases are sorted by label within each homological degree; entries is
    a dict (hdeg, target_label, source_label) -> scalar.
    """
    bases = {}
    ids = {}
    for (hdeg, mdeg, label) in elements:
        b = BasisElement(make_element_id(hdeg, label), hdeg, tuple(mdeg), label)
        bases.setdefault(hdeg, []).append(b)
        ids[(hdeg, label)] = b.id
    for i in bases:
        bases[i].sort(key=lambda b: label_sort_key(b.label))
    diff = {}
    for (hdeg, tl, sl), c in entries.items():
        if c == field.zero:
            continue
        diff.setdefault(hdeg, {})[(ids[(hdeg - 1, tl)], ids[(hdeg, sl)])] = c
    return MultigradedComplex(n, field, bases, diff)


# ---------------------------------------------------------------------------
# support / verification / poset

def support(coeffs):
    """Basis ids with nonzero coefficient in a coefficient dict."""
    return {k for k, v in coeffs.items() if v != 0}


@dataclass
class VerifyReport:
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join("%s: %s" % (kind, detail) for kind, detail in self.violations)


def verify(C):
    """Check homogeneity and d^2 = 0; never raises."""
    report = VerifyReport()
    field = C.field
    for i, d in sorted(C.diff.items()):
        for (t, s), c in d.items():
            bs, bt = C.by_id[s], C.by_id[t]
            if bs.hdeg != i or bt.hdeg != i - 1:
                report.violations.append(
                    ("degree", "entry (%s <- %s) stored at hdeg %d" % (t, s, i)))
            if not divides(bt.mdeg, bs.mdeg):
                report.violations.append(
                    ("homogeneity", "entry (%s <- %s): mdeg %r !>= %r"
                     % (t, s, bs.mdeg, bt.mdeg)))
    for i in sorted(C.diff):
        if i < 2 or (i - 1) not in C.diff:
            continue
        lower_cols = C.columns(i - 1)
        for s, col in C.columns(i).items():
            acc = {}
            for mid, c1 in col.items():
                for t, c2 in lower_cols.get(mid, {}).items():
                    acc[t] = field.add(acc.get(t, field.zero), field.mul(c1, c2))
            for t, v in acc.items():
                if v != field.zero:
                    report.violations.append(
                        ("d2", "d^2(%s) has coefficient %s on %s" % (s, v, t)))
    return report


@dataclass
class ResolutionPoset:
    nodes: list
    covers: set  # (child_id, parent_id), child in hdeg-1

    def children(self, pid):
        return sorted(c for (c, p) in self.covers if p == pid)


def poset(C):
    covers = set()
    for i, d in C.diff.items():
        for (t, s), c in d.items():
            covers.add((t, s))
    nodes = [b.id for i in sorted(C.bases) for b in C.bases[i]]
    return ResolutionPoset(nodes, covers)


def is_minimal(C):
    """No frame entry between elements of equal multidegree."""
    for i, d in C.diff.items():
        for (t, s), c in d.items():
            if C.by_id[s].mdeg == C.by_id[t].mdeg:
                return False
    return True


def nonminimal_witness(C):
    """First (source_id, target_id) with a unit frame entry, or None."""
    for i in sorted(C.diff):
        order = {b.id: k for k, b in enumerate(C.basis(i - 1))}
        sorder = {b.id: k for k, b in enumerate(C.basis(i))}
        hits = [(order[t], sorder[s], s, t) for (t, s) in C.diff[i]
                if C.by_id[s].mdeg == C.by_id[t].mdeg]
        if hits:
            hits.sort()
            _, _, s, t = hits[0]
            return (s, t)
    return None


# ---------------------------------------------------------------------------
# Betti tables

@dataclass
class BettiTable:
    entries: dict  # (hdeg, mdeg tuple) -> positive int

    def get(self, hdeg, mdeg):
        return self.entries.get((hdeg, tuple(mdeg)), 0)

    def total(self):
        """Aggregated view per homological degree."""
        out = {}
        for (i, m), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return out

    def by_total_degree(self):
        """Aggregated (hdeg, total degree) view."""
        out = {}
        for (i, m), v in self.entries.items():
            key = (i, sum(m))
            out[key] = out.get(key, 0) + v
        return out

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries


def ranks_table(C):
    """Basis counts of C per (hdeg, multidegree)."""
    entries = {}
    for i, bs in C.bases.items():
        for b in bs:
            key = (i, b.mdeg)
            entries[key] = entries.get(key, 0) + 1
    return BettiTable(entries)


# ---------------------------------------------------------------------------
# minimization

def minimize(C):
    """Cancel unit frame entries; returns (minimal complex, BettiTable).

    Pivot policy: lowest homological degree first, then row-major first
    unit entry (targets in stored basis order, sources within a row in
    stored order).  The resulting complex is homotopy equivalent to C
    when C is exact over its augmentation in positive degrees.
    """
    field = C.field
    bases = {i: list(bs) for i, bs in C.bases.items()}
    # rows[i][t] = {s: c}, cols[i][s] = {t: c}
    rows = {}
    cols = {}
    for i, d in C.diff.items():
        ri = rows.setdefault(i, {})
        ci = cols.setdefault(i, {})
        for (t, s), c in d.items():
            ri.setdefault(t, {})[s] = c
            ci.setdefault(s, {})[t] = c
    alive = {b.id for bs in bases.values() for b in bs}
    mdeg_of = {b.id: b.mdeg for bs in bases.values() for b in bs}

    max_h = C.max_hdeg
    for i in range(1, max_h + 1):
        while True:
            pivot = None
            tpos = {b.id: k for k, b in enumerate(bases.get(i - 1, [])) if b.id in alive}
            spos = {b.id: k for k, b in enumerate(bases.get(i, [])) if b.id in alive}
            best = None
            for t, row in rows.get(i, {}).items():
                if t not in alive:
                    continue
                for s, c in row.items():
                    if s not in alive or c == field.zero:
                        continue
                    if mdeg_of[s] == mdeg_of[t]:
                        key = (tpos[t], spos[s])
                        if best is None or key < best:
                            best = key
                            pivot = (t, s)
            if pivot is None:
                break
            t, s = pivot
            a = rows[i][t][s]
            inv = field.inv(a)
            row_t = {s2: c for s2, c in rows[i][t].items()
                     if s2 != s and s2 in alive and c != field.zero}
            col_s = {t2: c for t2, c in cols[i][s].items()
                     if t2 != t and t2 in alive and c != field.zero}
            for t2, ct2 in col_s.items():
                f = field.mul(ct2, inv)
                for s2, cs2 in row_t.items():
                    new = field.sub(rows[i].get(t2, {}).get(s2, field.zero),
                                    field.mul(f, cs2))
                    if new == field.zero:
                        rows[i].get(t2, {}).pop(s2, None)
                        cols[i].get(s2, {}).pop(t2, None)
                    else:
                        rows[i].setdefault(t2, {})[s2] = new
                        cols[i].setdefault(s2, {})[t2] = new
            alive.discard(s)
            alive.discard(t)

    new_bases = {i: [b for b in bs if b.id in alive] for i, bs in bases.items()}
    new_diff = {}
    for i, ri in rows.items():
        d = {}
        for t, row in ri.items():
            if t not in alive:
                continue
            for s, c in row.items():
                if s in alive and c != field.zero:
                    d[(t, s)] = c
        if d:
            new_diff[i] = d
    M = MultigradedComplex(C.n, field, new_bases, new_diff)
    return M, ranks_table(M)


# ---------------------------------------------------------------------------
# homology of finite-dimensional strata

def stratum_homology(C, m):
    """Exact homology dimensions of the multidegree-m stratum, per hdeg."""
    m = tuple(m)
    field = C.field
    max_h = C.max_hdeg
    strata = {}
    for i in range(0, max_h + 1):
        strata[i] = [b.id for b in C.basis(i) if divides(b.mdeg, m)]
    ranks = {}
    for i in range(1, max_h + 1):
        tgt = strata[i - 1]
        src = strata[i]
        if not tgt or not src:
            ranks[i] = 0
            continue
        tindex = {t: k for k, t in enumerate(tgt)}
        mat = []
        d = C.diff.get(i, {})
        for s in src:
            rowvec = [field.zero] * len(tgt)
            for t, k in tindex.items():
                c = d.get((t, s))
                if c is not None:
                    rowvec[k] = c
            mat.append(rowvec)
        ranks[i] = linalg.mat_rank(field, mat)
    dims = []
    for i in range(0, max_h + 1):
        dims.append(len(strata[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0))
    return dims

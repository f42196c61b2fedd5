"""Koszul complex on the variables and homology of monomial quotients.

Elements of K (x) R/I are dicts ``sigma -> {exponent_tuple: scalar}``
where sigma is a sorted tuple of 0-based variable indices; the term
``(sigma, {u: c})`` means c * x^u * e_sigma.  Terms whose coefficient
monomial lies in the ambient ideal are normalized to zero.
"""

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .fields import QQ
from .linalg import SpanTracker, nullspace
from .monomials import (
    MonomialIdeal, candidate_multidegrees, divides, ideal_sum,
    ideal_intersection, mdeg_add, mdeg_gcd, mdeg_lcm, mdeg_sub, mdeg_str,
)
from .constructions import (
    gen_taylor_pairs, double_star_pairs, minimal_resolution, quasitransverse,
)


class HypothesesUnmet(ValueError):
    pass


# ---------------------------------------------------------------------------
# element arithmetic

def k_zero():
    return {}


def k_term(sigma, u, scalar):
    return {tuple(sigma): {tuple(u): scalar}}


def k_clean(el, field, I=None):
    out = {}
    for sigma, poly in el.items():
        p = {u: c for u, c in poly.items()
             if c != field.zero and not (I is not None and I.contains(u))}
        if p:
            out[sigma] = p
    return out


def k_add(a, b, field, I=None):
    out = {sigma: dict(poly) for sigma, poly in a.items()}
    for sigma, poly in b.items():
        tgt = out.setdefault(sigma, {})
        for u, c in poly.items():
            tgt[u] = field.add(tgt.get(u, field.zero), c)
    return k_clean(out, field, I)


def k_scale(el, scalar, field):
    if scalar == field.zero:
        return {}
    return {sigma: {u: field.mul(scalar, c) for u, c in poly.items()}
            for sigma, poly in el.items()}


def k_mono_scale(el, exps, scalar, field, I=None):
    if scalar == field.zero:
        return {}
    exps = tuple(exps)
    out = {sigma: {mdeg_add(u, exps): field.mul(scalar, c)
                   for u, c in poly.items()}
           for sigma, poly in el.items()}
    return k_clean(out, field, I)


def k_eq(a, b, field):
    return k_clean(a, field) == k_clean(b, field)


def k_is_zero(el, field):
    return not k_clean(el, field)


def eps(sigma, n):
    out = [0] * n
    for j in sigma:
        out[j] = 1
    return tuple(out)


def k_mdeg(el, n):
    """Common multidegree u + mdeg(e_sigma) of the terms; None if mixed."""
    m = None
    for sigma, poly in el.items():
        e = eps(sigma, n)
        for u in poly:
            t = mdeg_add(u, e)
            if m is None:
                m = t
            elif m != t:
                return None
    return m


def wedge_sign(sigma, tau):
    """Sign of merging two disjoint sorted tuples; 0 on overlap."""
    if set(sigma) & set(tau):
        return 0
    inv = sum(1 for s in sigma for t in tau if s > t)
    return -1 if inv % 2 else 1


def k_diff(el, field, I=None):
    """Koszul boundary, normalized modulo I when given."""
    out = {}
    for sigma, poly in el.items():
        for p, j in enumerate(sigma):
            tau = sigma[:p] + sigma[p + 1:]
            s = field.one if p % 2 == 0 else field.neg(field.one)
            tgt = out.setdefault(tau, {})
            for u, c in poly.items():
                v = u[:j] + (u[j] + 1,) + u[j + 1:]
                tgt[v] = field.add(tgt.get(v, field.zero), field.mul(s, c))
    return k_clean(out, field, I)


def _wedge_terms(a, b, field, combine, I=None):
    out = {}
    for sigma, pa in a.items():
        for tau, pb in b.items():
            sg = wedge_sign(sigma, tau)
            if sg == 0:
                continue
            rho = tuple(sorted(sigma + tau))
            s = field.one if sg == 1 else field.neg(field.one)
            tgt = out.setdefault(rho, {})
            for u, ca in pa.items():
                for v, cb in pb.items():
                    w = combine(u, v)
                    if w is None:
                        continue
                    tgt[w] = field.add(tgt.get(w, field.zero),
                                       field.mul(s, field.mul(ca, cb)))
    return k_clean(out, field, I)


def k_wedge(a, b, field, I=None):
    """Exterior product; coefficient exponents add."""
    return _wedge_terms(a, b, field, mdeg_add, I)


def k_wedge_lcm(a, b, field, I=None):
    """Rescaled product: coefficient exponents combine by componentwise max."""
    return _wedge_terms(a, b, field, mdeg_lcm, I)


def k_wedge_div(a, b, g, field, I=None):
    """Product with each coefficient divided by x^g; None if not divisible."""
    g = tuple(g)
    bad = []

    def combine(u, v):
        w = tuple(x + y - z for x, y, z in zip(u, v, g))
        if any(e < 0 for e in w):
            bad.append(w)
            return None
        return w

    out = _wedge_terms(a, b, field, combine, I)
    if bad:
        return None
    return out


def k_squarefree_part(el, n, field):
    """Divide by the monomial making the multidegree squarefree; None if
    the element is not multihomogeneous or a coefficient is not divisible."""
    el = k_clean(el, field)
    if not el:
        return el
    m = k_mdeg(el, n)
    if m is None:
        return None
    r = tuple(e - min(e, 1) for e in m)
    if all(e == 0 for e in r):
        return el
    out = {}
    for sigma, poly in el.items():
        tgt = {}
        for u, c in poly.items():
            if not divides(r, u):
                return None
            tgt[mdeg_sub(u, r)] = c
        out[sigma] = tgt
    return out


def k_str(el, var="x"):
    if not el:
        return "0"
    parts = []
    for sigma in sorted(el):
        for u in sorted(el[sigma]):
            c = el[sigma][u]
            mono = mdeg_str(u, var)
            sub = "".join(str(j + 1) for j in sigma) if sigma else "0"
            lead = "" if str(c) == "1" else "%s*" % c
            parts.append("%s%s*e_%s" % (lead, mono, sub) if sigma
                         else "%s%s" % (lead, mono))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# strata of K (x) R/I

class Stratum:
    """The multidegree-m piece of K (x) R/I with exact homology data.

    Basis of homological degree i: sorted tuples sigma of size i with
    eps(sigma) <= m and x^(m - eps(sigma)) not in I.
    """

    def __init__(self, I, m, field):
        self.I = I
        self.m = tuple(m)
        self.field = field
        self.n = I.n
        supp = [j for j in range(I.n) if self.m[j] >= 1]
        self.bases = {}
        for i in range(len(supp) + 1):
            bs = []
            for sigma in combinations(supp, i):
                u = mdeg_sub(self.m, eps(sigma, self.n))
                if not I.contains(u):
                    bs.append(sigma)
            if bs:
                self.bases[i] = bs

    def basis(self, i):
        return self.bases.get(i, [])

    def coeff(self, sigma):
        return mdeg_sub(self.m, eps(sigma, self.n))

    def vector(self, el, i):
        """Coefficient vector of a normalized element over basis(i)."""
        field = self.field
        bs = self.basis(i)
        index = {sigma: k for k, sigma in enumerate(bs)}
        vec = [field.zero] * len(bs)
        for sigma, poly in k_clean(el, field, self.I).items():
            for u, c in poly.items():
                if sigma not in index or u != self.coeff(sigma):
                    raise ValueError(
                        "term %r outside the %s stratum" % (sigma, self.m))
                vec[index[sigma]] = c
        return vec

    def element(self, i, vec):
        field = self.field
        out = {}
        for sigma, c in zip(self.basis(i), vec):
            if c != field.zero:
                out[sigma] = {self.coeff(sigma): c}
        return out

    def diff_columns(self, i):
        """Boundary of each degree-i basis element as a vector over basis(i-1)."""
        field = self.field
        tgt = {sigma: k for k, sigma in enumerate(self.basis(i - 1))}
        cols = []
        for sigma in self.basis(i):
            vec = [field.zero] * len(tgt)
            for p, j in enumerate(sigma):
                tau = sigma[:p] + sigma[p + 1:]
                if tau in tgt:
                    s = field.one if p % 2 == 0 else field.neg(field.one)
                    vec[tgt[tau]] = field.add(vec[tgt[tau]], s)
            cols.append(vec)
        return cols

    def boundary_tracker(self, i):
        tr = SpanTracker(self.field, len(self.basis(i)))
        if self.basis(i + 1):
            for col in self.diff_columns(i + 1):
                tr.add(col)
        return tr

    def homology(self, i):
        """(dimension, cycle representatives) for homological degree i.

        Representatives are chosen deterministically: reduced-echelon
        nullspace vectors of the boundary map in lex basis order, kept
        when they enlarge the span of the boundaries.
        """
        field = self.field
        bs = self.basis(i)
        if not bs:
            return 0, []
        if self.basis(i - 1) or i == 0:
            if i == 0:
                cycles = nullspace(field, [], len(bs))
            else:
                cols = self.diff_columns(i)
                rows = [[cols[k][r] for k in range(len(cols))]
                        for r in range(len(self.basis(i - 1)))]
                cycles = nullspace(field, rows, len(bs))
        else:
            cycles = nullspace(field, [], len(bs))
        tr = self.boundary_tracker(i)
        nb = tr.rank
        reps = []
        for vec in cycles:
            if tr.add(vec):
                reps.append(self.element(i, vec))
        return len(cycles) - nb, reps


# ---------------------------------------------------------------------------
# homology with stored representatives

@dataclass
class CycleBasis:
    ideal: MonomialIdeal
    field: object
    strata: dict  # (hdeg, mdeg) -> list of cycle representatives

    def dim(self, hdeg, m):
        return len(self.strata.get((hdeg, tuple(m)), ()))

    def dims_total(self):
        out = {}
        for (i, m), reps in self.strata.items():
            out[i] = out.get(i, 0) + len(reps)
        return out

    def betti_entries(self):
        return {key: len(reps) for key, reps in self.strata.items()}

    def items(self, min_hdeg=0):
        for (i, m) in sorted(self.strata):
            if i >= min_hdeg:
                yield i, m, self.strata[(i, m)]


def koszul_homology(I, field=QQ):
    """Koszul homology of R/I per multidegree, with representatives.

    Strata are computed at every candidate multidegree (subset lcms of
    the generators, shifted by 0/1 vectors and capped componentwise at
    the total lcm); only nonzero strata are stored.
    """
    if I.is_unit:
        raise ValueError("Koszul homology requires a proper ideal")
    strata = {}
    for m in candidate_multidegrees(I):
        st = Stratum(I, m, field)
        top = max(st.bases) if st.bases else -1
        for i in range(top + 1):
            dim, reps = st.homology(i)
            if dim != len(reps):
                raise AssertionError(
                    "representative count %d != dimension %d at %r"
                    % (len(reps), dim, (i, m)))
            if dim:
                strata[(i, m)] = reps
    return CycleBasis(I, field, strata)


def expected_form(I, field=QQ):
    """True iff homology is spanned by classes of cycles u*e_sigma with
    u*x_j in I for every j in sigma; returns (bool, witnesses)."""
    B = koszul_homology(I, field)
    witnesses = []
    for i, m, reps in B.items(min_hdeg=1):
        st = Stratum(I, m, field)
        tr = st.boundary_tracker(i)
        for k, sigma in enumerate(st.basis(i)):
            u = st.coeff(sigma)
            if all(I.contains(u[:j] + (u[j] + 1,) + u[j + 1:]) for j in sigma):
                vec = [field.zero] * len(st.basis(i))
                vec[k] = field.one
                tr.add(vec)
        for rep in reps:
            if not tr.contains(st.vector(rep, i)):
                witnesses.append((i, m, rep))
    return (not witnesses), witnesses


# ---------------------------------------------------------------------------
# canonical cycles from a resolution

def _koszul_contract(el, n, field):
    """Solve d(y) = el for a Koszul cycle el of nonzero multidegree,
    by contraction along the least variable of the stratum."""
    el = k_clean(el, field)
    if not el:
        return {}
    m = k_mdeg(el, n)
    if m is None:
        raise ValueError("contraction needs a multihomogeneous element")
    j = next(k for k in range(n) if m[k] >= 1)
    out = {}
    for sigma, poly in el.items():
        if j in sigma:
            continue
        rho = (j,) + sigma
        tgt = out.setdefault(rho, {})
        for u, c in poly.items():
            tgt[u[:j] + (u[j] - 1,) + u[j + 1:]] = c
    return out


def resolution_cycles(F, I):
    """Koszul-cycle representatives for the basis of a resolution of R/I.

    Lifts each basis element through the Koszul contraction; the result
    maps basis ids to normalized cycles in K (x) R/I whose classes form
    a homology basis when F is minimal.
    """
    field = F.field
    n = F.n
    unit = F.basis(0)[0].id
    one = {(): {(0,) * n: field.one}}
    out = {unit: k_clean(one, field, I)}
    for i in sorted(F.bases):
        if i == 0:
            continue
        for f in F.basis(i):
            w = {f.id: one}
            for _ in range(i):
                v = {}
                for fid, kel in w.items():
                    b = F.by_id[fid]
                    for t, c in F.differential_of(b).items():
                        shift = mdeg_sub(b.mdeg, F.by_id[t].mdeg)
                        add = k_mono_scale(kel, shift, c, field)
                        v[t] = k_add(v.get(t, {}), add, field)
                w = {t: _koszul_contract(kel, n, field)
                     for t, kel in v.items() if k_clean(kel, field)}
            z = k_clean(w.get(unit, {}), field, I)
            if not z:
                raise AssertionError("lift of %s vanished modulo the ideal" % f.id)
            out[f.id] = z
    return out


# ---------------------------------------------------------------------------
# induced maps on homology

@dataclass
class InducedMapReport:
    verdict: str  # "iso" | "not iso" | "hypotheses unmet"
    reason: str = ""
    strata: dict = dc_field(default_factory=dict)
    # (hdeg, mdeg) -> (source_dim, target_dim, image_rank)
    images: dict = dc_field(default_factory=dict)  # basis id -> cycle
    lcm_noncycles: list = dc_field(default_factory=list)
    lcm_mismatches: list = dc_field(default_factory=list)
    gcd_noncycles: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return self.verdict == "iso"


def _check_pair_hypotheses(I, J):
    if not (I.is_squarefree and J.is_squarefree):
        return "not squarefree"
    ok, _ = quasitransverse([I, J])
    if not ok:
        return "not quasitransverse"
    return None


def _rank_check(report, target_ideal, H, images, C, field, min_hdeg):
    """Verify the basis images span homology with full rank per stratum."""
    grouped = {}
    for i in sorted(C.bases):
        if i < min_hdeg:
            continue
        for b in C.basis(i):
            grouped.setdefault((b.hdeg, b.mdeg), []).append(b.id)
    keys = set(grouped) | {(i, m) for (i, m) in H.strata if i >= min_hdeg}
    ok = True
    for key in sorted(keys):
        i, m = key
        st = Stratum(target_ideal, m, field)
        tr = st.boundary_tracker(i)
        base = tr.rank
        for bid in grouped.get(key, ()):
            tr.add(st.vector(images[bid], i))
        rank = tr.rank - base
        src = len(grouped.get(key, ()))
        tgt = len(H.strata.get(key, ()))
        report.strata[key] = (src, tgt, rank)
        if not (src == tgt == rank):
            ok = False
    return ok


def _formula_logs(report, pairs, zF, zG, F, G, target_ideal, field, use_diff):
    """Cross-check the displayed product formulas against the lifted images.

    For each basis pair the rescaled product (coefficientwise lcm) and
    the gcd-division form are computed; non-cycles and class mismatches
    with the canonical image are recorded rather than asserted.
    """
    n = F.n
    for bid, (fid, gid) in sorted(pairs.items()):
        f, g = F.by_id[fid], G.by_id[gid]
        if use_diff and (f.hdeg < 1 or g.hdeg < 1):
            continue
        left = k_diff(zF[fid], field) if use_diff else zF[fid]
        lcm_img = k_wedge_lcm(left, zG[gid], field, target_ideal)
        if not k_is_zero(k_diff(lcm_img, field, target_ideal), field):
            report.lcm_noncycles.append(bid)
        else:
            i = f.hdeg + g.hdeg - (1 if use_diff else 0)
            img = report.images.get(bid)
            if img is not None:
                # mismatch iff the formula's class differs from the lifted one
                if k_is_zero(lcm_img, field):
                    report.lcm_mismatches.append(bid)
                else:
                    m = k_mdeg(img, n)
                    st = Stratum(target_ideal, m, field)
                    tr = st.boundary_tracker(i)
                    try:
                        diff = k_add(
                            lcm_img, k_scale(img, field.neg(field.one), field),
                            field, target_ideal)
                        if not tr.contains(st.vector(diff, i)):
                            report.lcm_mismatches.append(bid)
                    except ValueError:
                        report.lcm_mismatches.append(bid)
        g0 = mdeg_gcd(f.mdeg, g.mdeg)
        gcd_img = k_wedge_div(left, zG[gid], g0, field, target_ideal)
        if gcd_img is None or not k_is_zero(
                k_diff(gcd_img, field, target_ideal), field):
            report.gcd_noncycles.append(bid)


def kunneth_rescaled(I, J, field=QQ):
    """Homology of R/(I+J) from the factors, with iso verification.

    The induced map sends the class pair of (f, g) to the canonical
    cycle lifted from the basis element f*g of the minimal resolution of
    R/(I+J); the displayed rescaled formulas are logged as cross-checks.
    """
    report = InducedMapReport(verdict="hypotheses unmet")
    why = _check_pair_hypotheses(I, J)
    if why is not None:
        report.reason = why
        return report
    F = minimal_resolution(I) if field is QQ else minimal_resolution(I, field)
    G = minimal_resolution(J) if field is QQ else minimal_resolution(J, field)
    S = ideal_sum(I, J)
    FG, pairs = gen_taylor_pairs(F, G, check=False)
    zF = resolution_cycles(F, I)
    zG = resolution_cycles(G, J)
    report.images = resolution_cycles(FG, S)
    H = koszul_homology(S, field)
    ok = _rank_check(report, S, H, report.images, FG, field, min_hdeg=0)
    _formula_logs(report, pairs, zF, zG, F, G, S, field, use_diff=False)
    report.verdict = "iso" if ok else "not iso"
    return report


def intersection_homology_map(I, J, field=QQ):
    """Homology of R/(I cap J) from the factors, with iso verification.

    The class pair of (f, g) with both degrees >= 1 maps to the
    canonical cycle lifted from the basis element f**g of the minimal
    resolution of R/(I cap J); displayed formulas are logged.
    """
    report = InducedMapReport(verdict="hypotheses unmet")
    why = _check_pair_hypotheses(I, J)
    if why is not None:
        report.reason = why
        return report
    F = minimal_resolution(I) if field is QQ else minimal_resolution(I, field)
    G = minimal_resolution(J) if field is QQ else minimal_resolution(J, field)
    N = ideal_intersection(I, J)
    D, pairs = double_star_pairs(F, G, check=False)
    zF = resolution_cycles(F, I)
    zG = resolution_cycles(G, J)
    report.images = resolution_cycles(D, N)
    H = koszul_homology(N, field)
    ok = _rank_check(report, N, H, report.images, D, field, min_hdeg=1)
    _formula_logs(report, pairs, zF, zG, F, G, N, field, use_diff=True)
    report.verdict = "iso" if ok else "not iso"
    return report


def golod_injectivity(I, J, field=QQ):
    """True iff H(R/I) (+) H(R/J) -> H(R/(I+J)) is injective per stratum.

    The map reduces representatives modulo I+J; it is well defined on
    classes, so any representative choice gives the same verdict.  Runs
    on any pair of proper ideals; positive homological degrees only.
    """
    S = ideal_sum(I, J)
    HI = koszul_homology(I, field)
    HJ = koszul_homology(J, field)
    for key in sorted(set(HI.strata) | set(HJ.strata)):
        i, m = key
        if i < 1:
            continue
        st = Stratum(S, m, field)
        tr = st.boundary_tracker(i)
        for H in (HI, HJ):
            for rep in H.strata.get(key, ()):
                img = k_clean(rep, field, S)
                try:
                    vec = st.vector(img, i)
                except ValueError:
                    return False
                if not tr.add(vec):
                    return False
    return True


def h1_product_vanishing(I, field=QQ):
    """True iff all products of positive-degree classes are boundaries."""
    B = koszul_homology(I, field)
    items = list(B.items(min_hdeg=1))
    witnesses = []
    for a, (i, m, reps) in enumerate(items):
        for j2, m2, reps2 in items[a:]:
            M = mdeg_add(m, m2)
            st = None
            for ka, ra in enumerate(reps):
                for kb, rb in enumerate(reps2):
                    w = k_wedge(ra, rb, field, I)
                    if k_is_zero(w, field):
                        continue
                    if st is None:
                        st = Stratum(I, M, field)
                        tr = st.boundary_tracker(i + j2)
                    if not tr.contains(st.vector(w, i + j2)):
                        witnesses.append(((i, m, ka), (j2, m2, kb)))
    return (not witnesses), witnesses


def massey_condition(I, J, field=QQ, nu=None):
    """Checks the chain-level condition sufficient for a trivial Massey
    operation on K (x) R/(I cap J).

    The homology basis elements are the squarefree parts of d(z_f) ^ z_g
    over pairs of canonical representatives; the default nu sends such a
    basis element to the squarefree part of z_f ^ z_g.  Returns (bool,
    witnesses); nu="identity" substitutes the identity for negative
    controls.
    """
    why = _check_pair_hypotheses(I, J)
    if why is not None:
        raise HypothesesUnmet("massey_condition: %s" % why)
    F = minimal_resolution(I) if field is QQ else minimal_resolution(I, field)
    G = minimal_resolution(J) if field is QQ else minimal_resolution(J, field)
    N = ideal_intersection(I, J)
    n = I.n
    zF = resolution_cycles(F, I)
    zG = resolution_cycles(G, J)
    basis = []
    witnesses = []
    for i in sorted(F.bases):
        if i < 1:
            continue
        for f in F.basis(i):
            for j in sorted(G.bases):
                if j < 1:
                    continue
                for g in G.basis(j):
                    raw = k_wedge(k_diff(zF[f.id], field), zG[g.id], field)
                    zb = k_squarefree_part(raw, n, field)
                    nraw = k_wedge(zF[f.id], zG[g.id], field)
                    nb = k_squarefree_part(nraw, n, field)
                    if zb is None or nb is None:
                        witnesses.append(((f.id, g.id), "squarefree part undefined"))
                        continue
                    zb = k_clean(zb, field, N)
                    nb = k_clean(nb, field, N)
                    if k_is_zero(zb, field):
                        witnesses.append(((f.id, g.id), "zero basis image"))
                        continue
                    basis.append(((f.id, g.id), zb, nb))
    if witnesses:
        return False, witnesses
    for (la, za, _) in basis:
        for (lb, zb, nb) in basis:
            val = zb if nu == "identity" else nb
            lhs = k_wedge(za, zb, field, N)
            rhs = k_wedge(za, k_diff(val, field, N), field, N)
            if not k_eq(lhs, rhs, field):
                witnesses.append((la, lb))
    return (not witnesses), witnesses

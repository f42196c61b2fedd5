"""Free-module elements with full polynomial coefficients.

An element is a dict ``basis_id -> {exponent_tuple: scalar}``; the term
``(b, {u: c})`` means c * x^u * b.  Used wherever frame arithmetic is
not enough: DG axiom verification and product constructions.
"""

from .monomials import mdeg_add, mdeg_sub


def e_zero():
    return {}


def e_term(bid, exps, scalar):
    return {bid: {tuple(exps): scalar}}


def e_clean(el, field):
    out = {}
    for bid, poly in el.items():
        p = {u: c for u, c in poly.items() if c != field.zero}
        if p:
            out[bid] = p
    return out


def e_add(a, b, field):
    out = {bid: dict(poly) for bid, poly in a.items()}
    for bid, poly in b.items():
        tgt = out.setdefault(bid, {})
        for u, c in poly.items():
            tgt[u] = field.add(tgt.get(u, field.zero), c)
    return e_clean(out, field)


def e_scale(el, scalar, field):
    if scalar == field.zero:
        return {}
    return {bid: {u: field.mul(scalar, c) for u, c in poly.items()}
            for bid, poly in el.items()}


def e_mono_scale(el, exps, scalar, field):
    """Multiply by scalar * x^exps."""
    if scalar == field.zero:
        return {}
    exps = tuple(exps)
    return {bid: {mdeg_add(u, exps): field.mul(scalar, c)
                  for u, c in poly.items()}
            for bid, poly in el.items()}


def e_eq(a, b, field):
    return e_clean(a, field) == e_clean(b, field)


def e_is_zero(el, field):
    return not e_clean(el, field)


def e_support(el, field):
    return {bid for bid, poly in e_clean(el, field).items()}


class FrameOps:
    """Cached differential application on polynomial elements."""

    def __init__(self, C):
        self.C = C
        self.field = C.field
        self.cols = {}
        for i, d in C.diff.items():
            for (t, s), c in d.items():
                self.cols.setdefault(s, []).append((t, c))

    def diff(self, el):
        """Apply the differential termwise."""
        C = self.C
        field = self.field
        out = {}
        for bid, poly in el.items():
            b = C.by_id[bid]
            for (t, c) in self.cols.get(bid, []):
                bt = C.by_id[t]
                shift = mdeg_sub(b.mdeg, bt.mdeg)
                tgt = out.setdefault(t, {})
                for u, cu in poly.items():
                    v = mdeg_add(u, shift)
                    tgt[v] = field.add(tgt.get(v, field.zero), field.mul(c, cu))
        return e_clean(out, field)


def element_from_frame(C, hdeg, coeffs, mdeg):
    """Homogeneous element of multidegree mdeg from frame scalars.

    coeffs maps basis_id -> scalar; the term on b is
    scalar * x^(mdeg - mdeg(b)) * b.
    """
    out = {}
    for bid, c in coeffs.items():
        if c == C.field.zero:
            continue
        b = C.by_id[bid]
        out[bid] = {mdeg_sub(mdeg, b.mdeg): c}
    return out

"""Ideal-file parsing and lossless JSON serialization of complexes.

File grammar (one statement per line, ``#`` starts a comment):

    vars: n
    NAME: x1, x2^2*x5, ...
    split NAME = A + B + ...

Monomials are products of ``x<index>`` or ``x<index>^<exp>`` factors
with 1-based indices.  Ideals are auto-minimalized with a warning when
a listed generator is redundant.
"""

import json
import re
from dataclasses import dataclass, field as dc_field

from .fields import field_from_name
from .monomials import MonomialIdeal, minimalize
from .complexes import BasisElement, MultigradedComplex

MAX_EXPONENT = 10 ** 6

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class ParseError(ValueError):
    def __init__(self, message, line, col=1):
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.line = line
        self.col = col


@dataclass
class IdealFile:
    n: int
    ideals: dict  # name -> MonomialIdeal, insertion ordered
    splittings: dict = dc_field(default_factory=dict)  # name -> [names]
    warnings: list = dc_field(default_factory=list)


def _parse_monomial(text, n, lineno, col):
    exps = [0] * n
    for factor in text.split("*"):
        factor = factor.strip()
        m = _FACTOR.match(factor)
        if not m:
            raise ParseError("bad monomial factor %r" % factor, lineno, col)
        idx = int(m.group(1))
        if idx < 1 or idx > n:
            raise ParseError(
                "variable x%d outside vars: %d" % (idx, n), lineno, col)
        e = int(m.group(2)) if m.group(2) else 1
        if e > MAX_EXPONENT:
            raise ParseError("exponent overflow in %r" % factor, lineno, col)
        exps[idx - 1] += e
        if exps[idx - 1] > MAX_EXPONENT:
            raise ParseError("exponent overflow in %r" % text, lineno, col)
    return tuple(exps)


def parse_ideal_file(text):
    n = None
    ideals = {}
    splittings = {}
    warnings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("vars"):
            head, _, rest = stripped.partition(":")
            if head.strip() != "vars" or not rest.strip():
                raise ParseError("expected 'vars: n'", lineno)
            if n is not None:
                raise ParseError("duplicate vars line", lineno)
            try:
                n = int(rest.strip())
            except ValueError:
                raise ParseError("bad variable count %r" % rest.strip(), lineno)
            if n < 1:
                raise ParseError("variable count must be positive", lineno)
            continue
        if n is None:
            raise ParseError("'vars: n' must come first", lineno)
        if stripped.startswith("split "):
            body = stripped[len("split "):]
            name, eq, rest = body.partition("=")
            name = name.strip()
            if not eq or not _NAME.match(name):
                raise ParseError("expected 'split NAME = A + B + ...'", lineno)
            parts = [p.strip() for p in rest.split("+")]
            if not all(_NAME.match(p) for p in parts):
                raise ParseError("bad ideal name in split", lineno)
            for p in parts:
                if p not in ideals:
                    raise ParseError("split references unknown ideal %r" % p, lineno)
            splittings[name] = parts
            continue
        name, colon, rest = stripped.partition(":")
        name = name.strip()
        if not colon or not _NAME.match(name):
            raise ParseError("expected 'NAME: mon, mon, ...'", lineno)
        if name in ideals:
            raise ParseError("duplicate ideal name %r" % name, lineno)
        col = raw.index(":") + 2
        gens = []
        for part in rest.split(","):
            part = part.strip()
            if not part:
                raise ParseError("empty monomial", lineno, col)
            gens.append(_parse_monomial(part, n, lineno, col))
        I = minimalize(n, gens)
        if len(I.gens) < len(set(gens)) or len(set(gens)) < len(gens):
            warnings.append(
                "line %d: ideal %s auto-minimalized (%d generators kept of %d)"
                % (lineno, name, len(I.gens), len(gens)))
        ideals[name] = I
    if n is None:
        raise ParseError("missing 'vars: n' line", 1)
    return IdealFile(n=n, ideals=ideals, splittings=splittings, warnings=warnings)


# ---------------------------------------------------------------------------
# JSON round trip for complexes

def _label_to_json(label):
    return [(_label_to_json(x) if isinstance(x, tuple) else x) for x in label]


def _label_from_json(data):
    return tuple(_label_from_json(x) if isinstance(x, list) else x for x in data)


def complex_to_json(C):
    modules = []
    for i in sorted(C.bases):
        modules.append({
            "hdeg": i,
            "basis": [{"id": b.id, "mdeg": list(b.mdeg),
                       "label": _label_to_json(b.label)}
                      for b in C.basis(i)],
        })
    diff = []
    for i in sorted(C.diff):
        entries = [{"row": t, "col": s, "coeff": C.field.coeff_str(c)}
                   for (t, s), c in sorted(C.diff[i].items())]
        diff.append({"hdeg": i, "entries": entries})
    return {"n": C.n, "field": C.field.name, "modules": modules, "diff": diff}


def complex_from_json(data):
    field = field_from_name(data["field"])
    bases = {}
    for mod in data["modules"]:
        i = mod["hdeg"]
        bases[i] = [BasisElement(b["id"], i, tuple(b["mdeg"]),
                                 _label_from_json(b["label"]))
                    for b in mod["basis"]]
    diff = {}
    for block in data["diff"]:
        i = block["hdeg"]
        diff[i] = {(e["row"], e["col"]): field.coeff_from_str(e["coeff"])
                   for e in block["entries"]}
    return MultigradedComplex(data["n"], field, bases, diff)


def save_complex(C, path):
    with open(path, "w") as fh:
        json.dump(complex_to_json(C), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_complex(path):
    with open(path) as fh:
        return complex_from_json(json.load(fh))

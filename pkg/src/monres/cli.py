"""Batch command line front end.

Usage: ``monres COMMAND FILE [NAME ...] [flags]``.  The file uses the
grammar of :mod:`monres.files`; names refer to ideals or splittings
declared there.  Exit codes: 0 success (verdicts included), 1 input
error, 2 hypothesis failure.
"""

import argparse
import json
import os
import sys

from .fields import QQ, field_from_name
from .monomials import mdeg_str, ideal_sum
from .complexes import minimize, ranks_table
from .constructions import (
    taylor, taylor_over, gen_taylor_many, double_star_many,
    minimal_resolution, quasitransverse,
)
from .scarf import scarf, gen_scarf, is_quasiscarf
from .dg import taylor_product, gen_taylor_product, double_star_product_many
from .koszul import (
    koszul_homology, expected_form, kunneth_rescaled, golod_injectivity,
    massey_condition, h1_product_vanishing, HypothesesUnmet, k_str,
)
from .files import parse_ideal_file, ParseError, complex_to_json

COMMANDS = (
    "betti", "taylor", "gentaylor", "doublestar", "scarf", "genscarf",
    "quasitransverse", "quasiscarf", "dgverify", "koszul", "expectedform",
    "golod", "massey", "kunneth",
)


class InputError(ValueError):
    pass


def threads_cap():
    """Stratum parallelism cap from the environment (reserved)."""
    try:
        return max(1, int(os.environ.get("MONRES_THREADS", "1")))
    except ValueError:
        return 1


def _resolve(idf, names, at_least=1):
    """Names to ideals; a single splitting name expands to its members."""
    if len(names) == 1 and names[0] in idf.splittings:
        names = idf.splittings[names[0]]
    ideals = []
    for name in names:
        if name not in idf.ideals:
            raise InputError("unknown ideal %r" % name)
        ideals.append(idf.ideals[name])
    if len(ideals) < at_least:
        raise InputError("command needs at least %d ideal name(s)" % at_least)
    return ideals


def _sum_all(ideals):
    total = ideals[0]
    for I in ideals[1:]:
        total = ideal_sum(total, I)
    return total


def _mdeg_key(m):
    return tuple(m)


def betti_text(table, max_hdeg=None):
    """Staircase layout: rows are total degree minus homological degree."""
    agg = table.by_total_degree()
    if max_hdeg is not None:
        agg = {k: v for k, v in agg.items() if k[0] <= max_hdeg}
    if not agg:
        return ["total:", "(empty)"]
    cols = range(0, max(i for i, d in agg) + 1)
    rows = range(0, max(d - i for i, d in agg) + 1)
    totals = table.total()
    out = ["total: " + " ".join(str(totals.get(i, 0)) for i in cols)]
    head = "      " + "".join("%6d" % i for i in cols)
    out.append(head)
    for r in rows:
        cells = []
        for i in cols:
            v = agg.get((i, i + r), 0)
            cells.append("%6s" % (v if v else "."))
        out.append("%4d: %s" % (r, "".join(cells)))
    return out


def multigraded_lines(entries, max_hdeg=None):
    out = []
    for (i, m) in sorted(entries, key=lambda k: (k[0], _mdeg_key(k[1]))):
        if max_hdeg is not None and i > max_hdeg:
            continue
        out.append("b[%d,(%s)] = %d"
                   % (i, ",".join(str(e) for e in m), entries[(i, m)]))
    return out


def ranks_line(C):
    return "ranks: " + " ".join(
        str(C.rank(i)) for i in range(0, C.max_hdeg + 1))


def _emit(lines, args, payload=None, complex_out=None):
    for line in lines:
        print(line)
    if args.json:
        if complex_out is not None:
            data = complex_to_json(complex_out)
        else:
            data = payload if payload is not None else {"report": lines}
        with open(args.json, "w") as fh:
            json.dump(data, fh, indent=1, sort_keys=True)
            fh.write("\n")


def _over(I, field):
    return taylor(I) if field is QQ else taylor_over(I, field)


def run(args, idf):
    field = field_from_name(args.field)
    cmd = args.command

    if cmd == "betti":
        (I,) = _resolve(idf, args.names, 1)
        _, table = minimize(_over(I, field))
        lines = betti_text(table, args.max_hdeg)
        if args.multi:
            lines += multigraded_lines(table.entries, args.max_hdeg)
        _emit(lines, args, payload={"betti": multigraded_lines(table.entries)})
        return 0

    if cmd == "taylor":
        (I,) = _resolve(idf, args.names, 1)
        C = _over(I, field)
        _emit([ranks_line(C)], args, complex_out=C)
        return 0

    if cmd == "gentaylor":
        ideals = _resolve(idf, args.names, 1)
        Fs = [minimal_resolution(I, None if field is QQ else field)
              for I in ideals]
        C, _ = gen_taylor_many(Fs)
        _emit([ranks_line(C)], args, complex_out=C)
        return 0

    if cmd == "doublestar":
        ideals = _resolve(idf, args.names, 2)
        Fs = [minimal_resolution(I, None if field is QQ else field)
              for I in ideals]
        C = double_star_many(Fs)
        _emit([ranks_line(C)], args, complex_out=C)
        return 0

    if cmd == "scarf":
        (I,) = _resolve(idf, args.names, 1)
        C = scarf(I)
        _emit([ranks_line(C)], args, complex_out=C)
        return 0

    if cmd == "genscarf":
        ideals = _resolve(idf, args.names, 1)
        rep = gen_scarf(ideals, None if field is QQ else field)
        lines = [
            "ranks: " + " ".join(str(r) for r in rep.ranks()),
            "unique multidegrees: %d (standard Scarf: %d)"
            % (rep.unique_mdeg_count, rep.standard_scarf_count),
        ]
        if rep.extra_mdegs:
            lines.append("extra multidegrees: " + " ".join(
                "(%s)" % ",".join(str(e) for e in m) for m in rep.extra_mdegs))
        if rep.dropped:
            lines.append("dropped (unique multidegree, not in subcomplex): "
                         + " ".join(rep.dropped))
        _emit(lines, args, complex_out=rep.complex)
        return 0

    if cmd == "quasitransverse":
        ideals = _resolve(idf, args.names, 2)
        ok, witness = quasitransverse(ideals, None if field is QQ else field)
        lines = ["true" if ok else "false"]
        if witness is not None:
            lines.append("witness: %s covers %s" % witness)
        _emit(lines, args, payload={"quasitransverse": ok})
        return 0

    if cmd == "quasiscarf":
        ideals = _resolve(idf, args.names, 1)
        ok = is_quasiscarf(ideals, None if field is QQ else field)
        _emit(["true" if ok else "false"], args, payload={"quasiscarf": ok})
        return 0

    if cmd == "dgverify":
        ideals = _resolve(idf, args.names, 1)
        tables = [taylor_product(_over(I, field)) for I in ideals]
        lines = []
        if len(tables) == 1:
            from .dg import verify_dg
            rep = verify_dg(tables[0].complex, tables[0])
            lines.append("taylor: %s" % rep)
            ok = rep.all_ok
        else:
            tab, C = gen_taylor_product(tables)
            from .dg import verify_dg
            rep = verify_dg(C, tab)
            lines.append("fold: %s" % rep)
            ok = rep.all_ok
            tab2 = double_star_product_many(tables)
            rep2 = verify_dg(tab2.complex, tab2)
            lines.append("intersection: %s" % rep2)
            ok = ok and rep2.all_ok
        _emit(lines, args, payload={"ok": ok})
        return 0

    if cmd == "koszul":
        (I,) = _resolve(idf, args.names, 1)
        B = koszul_homology(I, field)
        dims = B.dims_total()
        top = max(dims) if dims else 0
        lines = ["dims: " + " ".join(str(dims.get(i, 0))
                                     for i in range(0, top + 1))]
        if args.multi:
            lines += multigraded_lines(B.betti_entries(), args.max_hdeg)
        _emit(lines, args, payload={"dims": dims})
        return 0

    if cmd == "expectedform":
        (I,) = _resolve(idf, args.names, 1)
        ok, wits = expected_form(I, field)
        lines = ["true" if ok else "false"]
        for i, m, rep in wits:
            lines.append("witness: hdeg %d mdeg (%s) class %s"
                         % (i, ",".join(str(e) for e in m), k_str(rep)))
        _emit(lines, args, payload={"expected_form": ok})
        return 0

    if cmd == "golod":
        I, J = _resolve(idf, args.names, 2)
        ok = golod_injectivity(I, J, field)
        qt, _ = quasitransverse([I, J])
        lines = ["true" if ok else "false"]
        if not qt:
            lines.append("note: pair is not quasitransverse; "
                         "injectivity verdict carries no Golod claim")
        _emit(lines, args, payload={"injective": ok, "quasitransverse": qt})
        return 0

    if cmd == "massey":
        I, J = _resolve(idf, args.names, 2)
        ok, wits = massey_condition(I, J, field)
        lines = ["true" if ok else "false"]
        for w in wits:
            lines.append("witness: %s" % (w,))
        _emit(lines, args, payload={"massey": ok})
        return 0

    if cmd == "kunneth":
        I, J = _resolve(idf, args.names, 2)
        rep = kunneth_rescaled(I, J, field)
        if rep.verdict == "hypotheses unmet":
            print("hypotheses unmet: %s" % rep.reason)
            return 2
        lines = [rep.verdict]
        for key in sorted(rep.strata, key=lambda k: (k[0], _mdeg_key(k[1]))):
            src, tgt, rank = rep.strata[key]
            lines.append("stratum hdeg %d mdeg (%s): source %d target %d rank %d"
                         % (key[0], ",".join(str(e) for e in key[1]),
                            src, tgt, rank))
        lines.append("formula log: lcm non-cycles %d, class mismatches %d, "
                     "gcd-division non-cycles %d"
                     % (len(rep.lcm_noncycles), len(rep.lcm_mismatches),
                        len(rep.gcd_noncycles)))
        _emit(lines, args, payload={"verdict": rep.verdict})
        return 0

    raise InputError("unknown command %r" % cmd)


def build_parser():
    p = argparse.ArgumentParser(
        prog="monres",
        description="Resolutions, DG products and Koszul homology of "
                    "monomial ideals from an ideal file.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", help="ideal file (see package docs for the grammar)")
    p.add_argument("names", nargs="*", help="ideal or splitting names")
    p.add_argument("--field", default="q", help="coefficient field: q or gf:P")
    p.add_argument("--json", metavar="PATH", default=None,
                   help="write the complex or report as JSON")
    p.add_argument("--multi", action="store_true",
                   help="list multigraded entries")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized property commands")
    p.add_argument("--max-hdeg", type=int, default=None, dest="max_hdeg",
                   help="limit listed homological degrees")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with open(args.file) as fh:
            idf = parse_ideal_file(fh.read())
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    for w in idf.warnings:
        print("warning: %s" % w, file=sys.stderr)
    try:
        return run(args, idf)
    except HypothesesUnmet as exc:
        print("hypotheses unmet: %s" % exc, file=sys.stderr)
        return 2
    except (InputError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

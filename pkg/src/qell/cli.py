"""Command-line front end.

Subcommands:
    ring        print the ring for a group: per class, basis with grades and
                a monogenic presentation when the centralizer is cyclic
    power       apply the n-th power operation to an element
    tate-verify run the symmetric-group classification check for a given N
    char-table  print the exact character table of a group
    axioms      run the power-operation axiom suite over a small corpus

Groups are given in the mini-language of groupspec ("S3", "C2xC3", "D4",
"perm:(1 2 3)(4 5),(1 2)").  Elements are integer Laurent combinations of
"q" and named basis symbols "b[class_rep][index]", e.g.
"q^2*b[(1 2)][1] + 3*b[id][0] - q^-1".
"""

import argparse
import json
import re
import sys
import time

from .errors import ParseError, QellError
from .groupspec import parse_group
from .laurent import LaurentPoly
from .perm import DEFAULT_CAP


JSON_SCHEMA_VERSION = 1


def _parse_element(ring, text):
    """Parse an element expression over a ring of components.

    Grammar: sum of terms; a term is a "*"-product of factors, each an
    integer, "q", "q^<int>", or "b[<class rep>][<index>]".
    """
    text = text.strip()
    if not text:
        raise ParseError("empty element expression")
    # split into signed terms at top level (no parentheses except inside b[..])
    terms = []
    buf = []
    sign = 1
    depth = 0
    prev = ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        splitter = depth == 0 and ch in "+-" and prev not in "^*"
        if splitter and "".join(buf).strip():
            terms.append((sign, "".join(buf).strip()))
            sign = 1 if ch == "+" else -1
            buf = []
        elif splitter:
            if ch == "-":
                sign = -sign
            buf = []
        else:
            buf.append(ch)
        if not ch.isspace():
            prev = ch
    last = "".join(buf).strip()
    if not last:
        raise ParseError("dangling sign in %r" % text)
    terms.append((sign, last))

    from .qell import QEllElem
    total = QEllElem.zero(ring.group)
    for sign, term in terms:
        coeff = LaurentPoly.const(sign)
        basis = None
        for factor in _split_factors(term):
            m = re.fullmatch(r"[+-]?\d+", factor)
            if m:
                coeff = coeff * int(factor)
                continue
            m = re.fullmatch(r"q(\^(-?\d+))?", factor)
            if m:
                coeff = coeff * LaurentPoly.q(int(m.group(2) or 1))
                continue
            m = re.fullmatch(r"b\[([^]]*)\]\[(\d+)\]", factor)
            if m:
                if basis is not None:
                    raise ParseError(
                        "at most one basis symbol per term: %r" % term)
                basis = (m.group(1).strip(), int(m.group(2)))
                continue
            raise ParseError("bad factor %r in term %r" % (factor, term))
        if basis is None:
            piece = QEllElem.unit(ring.group).scale(coeff)
        else:
            ci = _class_index(ring, basis[0])
            idx = basis[1]
            if not (0 <= idx < ring.contexts[ci].rank):
                raise ParseError("basis index %d out of range for class %s"
                                 % (idx, basis[0]))
            piece = ring.basis_element(ci, idx).scale(coeff)
        total = total + piece
    return total


def _split_factors(term):
    out = []
    buf = []
    depth = 0
    for ch in term:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append("".join(buf).strip())
            buf = []
        else:
            buf.append(ch)
    out.append("".join(buf).strip())
    return [f for f in out if f]


def _class_index(ring, rep_text):
    from .groupspec import _parse_cycles
    conj = ring.group.conjugacy()
    if rep_text in ("id", "e", "()"):
        from .perm import Permutation
        g = Permutation.identity(ring.group.degree)
    else:
        try:
            g = _parse_cycles(rep_text)
        except ParseError:
            raise ParseError("bad class representative %r" % rep_text)
        if g.degree < ring.group.degree:
            from .perm import Permutation
            g = Permutation(list(g.images)
                            + list(range(g.degree + 1, ring.group.degree + 1)))
        if g.degree != ring.group.degree or g not in ring.group:
            raise ParseError("%r is not an element of the group" % rep_text)
    return conj.class_of(g)


def _select_classes(group, texts):
    """Class indices for a list of representative strings (None = all)."""
    if not texts:
        return None
    from .qell import qell_point
    ring = qell_point(group)
    return sorted({_class_index(ring, t) for t in texts})


def _emit(args, report, human_lines):
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def cmd_ring(args):
    G = parse_group(args.group, cap=args.cap)
    from .qell import qell_point
    ring = qell_point(G)
    selected = _select_classes(G, args.classes)
    rep = ring.report()
    classes = [c for i, c in enumerate(rep["classes"])
               if selected is None or i in selected]
    report = {"schema": JSON_SCHEMA_VERSION, "command": "ring",
              "group": args.group, "order": G.order, "classes": classes}
    lines = ["group %s  (order %d, %d classes)" % (
        args.group, G.order, len(rep["classes"]))]
    for c in classes:
        lines.append("  class %s  (size %d, centralizer order %d)"
                     % (c["rep"], c["class_size"], c["centralizer_order"]))
        for b in c["basis"]:
            lines.append("    b[%s][%d]: degree %d, grade %s"
                         % (c["rep"], b["index"], b["degree"], b["grade"]))
        if c.get("presentation"):
            lines.append("    presentation: %s" % c["presentation"])
    _emit(args, report, lines)
    return 0


def cmd_power(args):
    G = parse_group(args.group, cap=args.cap)
    from .power import power_total
    from .qell import qell_point
    ring = qell_point(G)
    V = _parse_element(ring, args.element)
    t0 = time.time()
    P = power_total(G, V, args.n, cap=args.cap)
    conj = P.group.conjugacy()
    selected = _select_classes(P.group, args.classes)
    classes = []
    lines = ["P_%d of %s over %s  (wreath group order %d)"
             % (args.n, args.element, args.group, P.group.order)]
    for ci, r in enumerate(conj.reps):
        if selected is not None and ci not in selected:
            continue
        comp = P.comps[ci]
        classes.append({"rep": repr(r), "component": comp.to_json()})
        lines.append("  class %s: %s" % (repr(r), comp))
    report = {"schema": JSON_SCHEMA_VERSION, "command": "power",
              "group": args.group, "n": args.n, "element": args.element,
              "classes": classes, "seconds": round(time.time() - t0, 3)}
    _emit(args, report, lines)
    return 0


def cmd_tate_verify(args):
    from .tate import quotient_and_match
    t0 = time.time()
    rep = quotient_and_match(args.N, cap=args.cap)
    rep = dict(rep)
    rep["schema"] = JSON_SCHEMA_VERSION
    rep["command"] = "tate-verify"
    rep["seconds"] = round(time.time() - t0, 3)
    status = "PASS" if rep["match"] else "FAIL"
    lines = ["tate-verify N=%d: %s  (surviving rank %d, divisor sum %d)"
             % (args.N, status, rep["total_surviving_rank"],
                rep["divisor_sum"])]
    for c in rep["classes"]:
        extra = ""
        if c["case"] == "II":
            extra = "  -> %s  vandermonde %s" % (c["target"], c["vandermonde"])
        lines.append("  class %s type %s case %s: rank %d, %d generators, "
                     "survives %d%s" % (c["rep"], c["cycle_type"], c["case"],
                                        c["rank"], c["num_generators"],
                                        c["surviving_rank"], extra))
    _emit(args, rep, lines)
    return 0 if rep["match"] else 1


def cmd_char_table(args):
    G = parse_group(args.group, cap=args.cap)
    from .chars import character_table
    tab = character_table(G)
    conj = G.conjugacy()
    reps = [repr(r) for r in conj.reps]
    sizes = conj.class_sizes()
    rows = [[repr(v) for v in chi.values] for chi in tab.irreducibles]
    report = {"schema": JSON_SCHEMA_VERSION, "command": "char-table",
              "group": args.group, "order": G.order,
              "class_reps": reps, "class_sizes": sizes,
              "degrees": list(tab.degrees), "rows": rows}
    width = max(max(len(v) for v in row) for row in rows)
    width = max(width, max(len(r) for r in reps))
    lines = ["character table of %s  (order %d)" % (args.group, G.order),
             "  classes: " + "  ".join(r.rjust(width) for r in reps),
             "  sizes:   " + "  ".join(str(s).rjust(width) for s in sizes)]
    for i, row in enumerate(rows):
        lines.append("  chi_%-2d   %s" % (i, "  ".join(
            v.rjust(width) for v in row)))
    _emit(args, report, lines)
    return 0


def cmd_axioms(args):
    G = parse_group(args.group, cap=args.cap)
    from .power import check_axioms
    from .qell import qell_point
    ring = qell_point(G)
    if args.element:
        corpus = [_parse_element(ring, e) for e in args.element]
    else:
        corpus = [ring.unit() + ring.q(),
                  ring.basis_element(len(ring.contexts) - 1,
                                     ring.contexts[len(ring.contexts) - 1].rank - 1)]
    composition = (args.comp_n, args.comp_m) if args.comp_n else None
    t0 = time.time()
    try:
        rep = check_axioms(G, corpus, n=args.n, m=args.m,
                           composition=composition, cap=args.cap)
        ok = True
    except QellError as exc:
        rep = {"ok": False, "error": str(exc)}
        ok = False
    rep = dict(rep)
    rep["schema"] = JSON_SCHEMA_VERSION
    rep["command"] = "axioms"
    rep["group"] = args.group
    rep["seconds"] = round(time.time() - t0, 3)
    status = "PASS" if ok else "FAIL"
    lines = ["axioms %s over %s (n=%d, m=%d%s): %s"
             % ("identity+sum" + ("+composition" if composition else ""),
                args.group, args.n, args.m,
                ", composition %s" % (composition,) if composition else "",
                status)]
    if not ok:
        lines.append("  " + rep["error"])
    _emit(args, rep, lines)
    return 0 if ok else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="qell",
        description="Exact rings, power operations, and the symmetric-group "
                    "classification check.")
    parser.add_argument("--cap", type=int, default=None,
                        help="enumeration cap (default %d, env QELL_CAP)"
                             % DEFAULT_CAP)
    parser.add_argument("--json", action="store_true",
                        help="emit a JSON report instead of text")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("ring", help="print the ring of a group")
    p.add_argument("group")
    p.add_argument("--classes", nargs="*", default=None,
                   help="restrict to these class representatives")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("power", help="apply the n-th power operation")
    p.add_argument("group")
    p.add_argument("n", type=int)
    p.add_argument("element")
    p.add_argument("--classes", nargs="*", default=None)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("tate-verify", help="run the classification check")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_tate_verify)

    p = sub.add_parser("char-table", help="print a character table")
    p.add_argument("group")
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("axioms", help="run the power-operation axiom suite")
    p.add_argument("group")
    p.add_argument("-n", type=int, default=1)
    p.add_argument("-m", type=int, default=1)
    p.add_argument("--comp-n", type=int, default=None)
    p.add_argument("--comp-m", type=int, default=2)
    p.add_argument("--element", action="append", default=None,
                   help="corpus element expression (repeatable)")
    p.set_defaults(func=cmd_axioms)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except QellError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

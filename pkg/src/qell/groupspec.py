"""Parser for the small group-description language used by the CLI.

Grammar:
    spec    := factor ("x" factor)*
    factor  := "S" int | "C" int | "D" int | "perm:" gens
    gens    := cycles ("," cycles)*
    cycles  := ("(" points ")")+     points are 1-based, space separated

Products are realized as permutation groups acting on the disjoint union of
the factors' points.  "D<n>" is the dihedral group of order 2n acting on n
points (n >= 3).  A "perm:" factor is the group generated by the listed
permutations, each given in cycle notation.
"""

import re

from .errors import ParseError
from .perm import (FiniteGroup, Permutation, cyclic_group, dihedral_group,
                   symmetric_group, trivial_group)


def _parse_cycles(text):
    """One generator: a product of cycles like "(1 2 3)(4 5)"."""
    text = text.strip()
    if not text:
        raise ParseError("empty permutation")
    if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\)\s*)+", text):
        raise ParseError("bad cycle notation: %r" % text)
    cycles = []
    for body in re.findall(r"\(([^)]*)\)", text):
        pts = tuple(int(tok) for tok in body.split())
        if len(set(pts)) != len(pts) or any(p < 1 for p in pts):
            raise ParseError("bad cycle: (%s)" % body)
        cycles.append(pts)
    flat = [p for c in cycles for p in c]
    if len(set(flat)) != len(flat):
        raise ParseError("cycles are not disjoint: %r" % text)
    degree = max(flat)
    return Permutation.from_cycles(cycles, degree)


def _perm_group(body, cap):
    gens = [_parse_cycles(t) for t in body.split(",")]
    degree = max(g.degree for g in gens)
    gens = [Permutation(list(g.images) + list(range(g.degree + 1, degree + 1)))
            for g in gens]
    return FiniteGroup.generated(gens, cap=cap, degree=degree)


def _factor(token, cap):
    token = token.strip()
    m = re.fullmatch(r"([SCD])(\d+)", token)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise ParseError("size must be positive in %r" % token)
        if kind == "S":
            return symmetric_group(n, cap=cap) if n > 1 else trivial_group(1)
        if kind == "C":
            return cyclic_group(n)
        if n < 3:
            raise ParseError("D%d: dihedral groups need n >= 3" % n)
        return dihedral_group(n)
    if token.startswith("perm:"):
        return _perm_group(token[len("perm:"):], cap)
    raise ParseError("unrecognized group %r" % token)


def parse_group(text, cap=None):
    """Parse a group description; returns a FiniteGroup."""
    text = text.strip()
    if not text:
        raise ParseError("empty group description")
    # a perm: factor may contain no further "x"-products
    if text.startswith("perm:"):
        factors = [text]
    else:
        factors = text.split("x")
    groups = [_factor(f, cap) for f in factors]
    result = groups[0]
    for extra in groups[1:]:
        result = _product(result, extra)
    return result


def _product(A, B):
    """Direct product acting on the disjoint union of points."""
    dA, dB = A.degree, B.degree
    elems = []
    for a in A.elements:
        ia = list(a.images)
        for b in B.elements:
            elems.append(Permutation(ia + [v + dA for v in b.images]))
    return FiniteGroup(elems, degree=dA + dB)

"""Wreath products G wr Sigma_n and their cycle combinatorics.

An element is a pair (word, perm) with word = (g_1..g_n) in G^n and perm in
Sigma_n, multiplying by (g, s)(h, t) = ((g_i * h_{s^-1(i)})_i, s*t).  The
faithful imprimitive realization acts on n blocks of size deg(G):
position (b-1)*d + x  ->  (s(b)-1)*d + g_{s(b)}(x).
"""

import itertools
from collections import Counter
from math import factorial

from fractions import Fraction

from .chars import ClassFunction, character_table, mn_character, partitions
from .cyclo import CycloNum
from .errors import CapExceeded, NotCentralizing
from .perm import (DEFAULT_CAP, FiniteGroup, Permutation, symmetric_group,
                   trivial_group, young_subgroup)


class WreathElement:
    """Structured element of G wr Sigma_n."""

    __slots__ = ("word", "perm")

    def __init__(self, word, perm):
        self.word = tuple(word)
        self.perm = perm
        if perm.degree != len(self.word):
            raise ValueError("word length must match permutation degree")

    def __mul__(self, other):
        s = self.perm
        sinv = s.inverse()
        word = tuple(self.word[i] * other.word[sinv(i + 1) - 1]
                     for i in range(len(self.word)))
        return WreathElement(word, s * other.perm)

    def inverse(self):
        s = self.perm
        word = tuple(self.word[s(j + 1) - 1].inverse()
                     for j in range(len(self.word)))
        return WreathElement(word, s.inverse())

    def __eq__(self, other):
        return (isinstance(other, WreathElement)
                and self.word == other.word and self.perm == other.perm)

    def __hash__(self):
        return hash((self.word, self.perm))

    def __repr__(self):
        return "WreathElement(%r; %r)" % (list(self.word), self.perm)


class WreathGroup:
    """G wr Sigma_n with its realization as a permutation group."""

    def __init__(self, base, n, cap=None):
        if cap is None:
            cap = DEFAULT_CAP
        self.base = base
        self.n = n
        d = base.degree
        self.block_size = d
        if n == 0:
            self.degree = 1
            self.group = trivial_group(1)
            self.sym = trivial_group(1)
            self._structure_cache = {}
            return
        order = (base.order ** n) * factorial(n)
        if order > cap:
            raise CapExceeded("wreath product order %d exceeds cap %d"
                              % (order, cap))
        self.degree = n * d
        self.sym = symmetric_group(n)
        elems = []
        for perm in self.sym.elements:
            for word in itertools.product(base.elements, repeat=n):
                elems.append(self.realize(WreathElement(word, perm)))
        self.group = FiniteGroup(elems, degree=self.degree)
        assert self.group.order == order, "realization is not faithful"
        self._structure_cache = {}

    def realize(self, w):
        if self.n == 0:
            return Permutation.identity(1)
        d = self.block_size
        images = [0] * self.degree
        for b in range(1, self.n + 1):
            tb = w.perm(b)
            g = w.word[tb - 1]
            for x in range(1, d + 1):
                images[(b - 1) * d + x - 1] = (tb - 1) * d + g(x)
        return Permutation(images)

    def structure(self, p):
        """Invert realize: recover the (word, perm) pair."""
        if self.n == 0:
            return WreathElement((), Permutation(()))
        hit = self._structure_cache.get(p)
        if hit is not None:
            return hit
        d = self.block_size
        perm_images = []
        for b in range(1, self.n + 1):
            target = (p((b - 1) * d + 1) - 1) // d + 1
            perm_images.append(target)
        perm = Permutation(perm_images)
        word = []
        pinv = perm.inverse()
        for i in range(1, self.n + 1):
            src = pinv(i)
            images = [p((src - 1) * d + x) - (i - 1) * d for x in range(1, d + 1)]
            word.append(Permutation(images))
        w = WreathElement(word, perm)
        assert self.realize(w) == p
        self._structure_cache[p] = w
        return w

    def embed_concat(self, other, w_self, w_other):
        """Juxtapose elements of G wr Sigma_n and G wr Sigma_m in G wr Sigma_(n+m)."""
        assert other.base == self.base
        n, m = self.n, other.n
        shifted = Permutation(
            list(w_self.perm.images) + [m_img + n for m_img in w_other.perm.images])
        return WreathElement(w_self.word + w_other.word, shifted)


def cycle_product(word, cycle):
    """Gamma = g_{i_k} * ... * g_{i_1} for a cycle (i_1, ..., i_k)."""
    result = None
    for i in cycle:
        g = word[i - 1]
        result = g if result is None else g * result
    return result


class CycleOrbitData:
    """Cycles of a wreath element, grouped into conjugate-Gamma blocks.

    Cycles are listed min-first and sorted by smallest entry.  Within each
    cycle length, two cycles land in the same block when their cycle products
    are conjugate in the base group; the block representative (theta) is the
    first cycle of the block in this ordering.
    """

    def __init__(self, base, w):
        self.base = base
        self.w = w
        self.cycles = w.perm.cycles(include_fixed=True)
        self.gammas = [cycle_product(w.word, c) for c in self.cycles]
        conj = base.conjugacy()
        self.gamma_class = [conj.class_of(g) for g in self.gammas]
        # conjugator u with gamma = u * rep * u^-1
        self.to_rep = []
        for g, ci in zip(self.gammas, self.gamma_class):
            u = base.conjugator(g, conj.reps[ci])
            assert u is not None
            self.to_rep.append(u)
        # blocks: same length and conjugate cycle product
        self.blocks = []
        assigned = {}
        for idx, c in enumerate(self.cycles):
            key = (len(c), self.gamma_class[idx])
            if key not in assigned:
                assigned[key] = len(self.blocks)
                self.blocks.append({"length": len(c), "class": key[1],
                                    "cycles": [], "theta": idx})
            self.blocks[assigned[key]]["cycles"].append(idx)

    def cycle_index_of_point(self, point):
        for idx, c in enumerate(self.cycles):
            if point in c:
                return idx
        raise ValueError("point not found")


def cycle_orbit_data(base, w):
    return CycleOrbitData(base, w)


def beta_data(base, g, gp, h):
    """Intertwiner data for h with h * gp == g * h in G wr Sigma_n.

    For each cycle i of gp.perm returns (target cycle j of g.perm, offset m,
    beta in G) with Gamma_j * beta == beta * Gamma'_i.  Raises NotCentralizing
    if h does not intertwine.
    """
    if not (h * gp == g * h):
        raise NotCentralizing("element does not intertwine the wreath pair")
    cycles_g = g.perm.cycles(include_fixed=True)
    cycles_gp = gp.perm.cycles(include_fixed=True)
    point_to_gcycle = {}
    for idx, c in enumerate(cycles_g):
        for pt in c:
            point_to_gcycle[pt] = idx
    out = {}
    for ci, cyc in enumerate(cycles_gp):
        k = len(cyc)
        image = h.perm(cyc[0])
        j_idx = point_to_gcycle[image]
        jcyc = cycles_g[j_idx]
        assert len(jcyc) == k
        m = jcyc.index(image)  # image sits at position 1+m (1-based)
        if m == 0:
            beta = h.word[jcyc[k - 1] - 1]
        else:
            beta = None
            for r in range(m):
                f = g.word[jcyc[r] - 1].inverse()
                beta = f if beta is None else beta * f
            beta = beta * h.word[jcyc[m - 1] - 1]
        gamma_j = cycle_product(g.word, jcyc)
        gamma_i = cycle_product(gp.word, cyc)
        assert gamma_j * beta == beta * gamma_i, "intertwiner identity failed"
        out[ci] = (j_idx, m, beta)
    return out


# ---- conjugacy classes by type functions ----

def wreath_class_types(base, n):
    """All class types: maps (base class index -> partition), total n."""
    nclasses = len(base.conjugacy())
    types = []

    def rec(ci, remaining, prefix):
        if ci == nclasses - 1:
            for lam in partitions(remaining) if remaining else [()]:
                types.append(tuple(prefix + [lam]))
            return
        for k in range(remaining, -1, -1):
            for lam in partitions(k) if k else [()]:
                rec(ci + 1, remaining - k, prefix + [lam])

    rec(0, n, [])
    return types


def wreath_type_rep(base, n, typ):
    """Canonical structured representative of a class type."""
    conj = base.conjugacy()
    word = [base.identity] * n
    cycles = []
    offset = 0
    for ci, lam in enumerate(typ):
        for part in lam:
            cyc = tuple(range(offset + 1, offset + part + 1))
            cycles.append(cyc)
            word[offset] = conj.reps[ci]
            offset += part
    perm = Permutation.from_cycles(cycles, n)
    return WreathElement(word, perm)


def wreath_centralizer_order(base, typ):
    conj = base.conjugacy()
    total = 1
    for ci, lam in enumerate(typ):
        cent = base.order // len(conj.classes[ci])
        mult = Counter(lam)
        for k, m in mult.items():
            total *= (k ** m) * factorial(m) * (cent ** m)
    return total


def wreath_conjugacy_classes(base, n):
    """Class data of G wr Sigma_n from type functions.

    Returns a list of dicts with keys type, rep (WreathElement), and
    centralizer_order.  The combinatorial route; cross-checked in tests
    against brute-force conjugacy of the realized group.
    """
    out = []
    for typ in wreath_class_types(base, n):
        out.append({"type": typ,
                    "rep": wreath_type_rep(base, n, typ),
                    "centralizer_order": wreath_centralizer_order(base, typ)})
    return out


def wreath_type_of(base, w):
    """The class type of a structured wreath element."""
    conj = base.conjugacy()
    buckets = [[] for _ in range(len(conj))]
    for cyc in w.perm.cycles(include_fixed=True):
        gamma = cycle_product(w.word, cyc)
        buckets[conj.class_of(gamma)].append(len(cyc))
    return tuple(tuple(sorted(b, reverse=True)) for b in buckets)


# ---- irreducible characters of wreath products ----

def _multipartitions(n, slots):
    out = []

    def rec(i, remaining, prefix):
        if i == slots - 1:
            for lam in partitions(remaining) if remaining else [()]:
                out.append(tuple(prefix + [lam]))
            return
        for k in range(remaining, -1, -1):
            for lam in partitions(k) if k else [()]:
                rec(i + 1, remaining - k, prefix + [lam])

    rec(0, n, [])
    return out


def _sym_char_by_type(n):
    """For Sigma_n: dict partition(label) -> dict cycle_type -> exact value."""
    if n == 0:
        return {(): {(): CycloNum.one()}}
    S = symmetric_group(n)
    tab = character_table(S)
    conj = S.conjugacy()
    type_of_class = [g.cycle_type() for g in conj.reps]
    # match Dixon rows to partition labels through Murnaghan-Nakayama values
    out = {}
    for lam in partitions(n):
        wanted = [mn_character(lam, t) for t in type_of_class]
        match = None
        for chi in tab.irreducibles:
            if all(v == CycloNum.from_rational(wv)
                   for v, wv in zip(chi.values, wanted)):
                match = chi
                break
        assert match is not None, "symmetric-group label matching failed"
        out[lam] = {t: v for t, v in zip(type_of_class, match.values)}
    return out


def wreath_irreducibles(base, n, cap=None):
    """Irreducible characters of G wr Sigma_n, labeled by multipartitions.

    Each label assigns a partition to every irreducible of the base group;
    the character is induced from the block subgroup fixing the corresponding
    composition.  Returns a list of (label, ClassFunction on the realized
    wreath group) plus the WreathGroup, as (W, items).
    """
    W = WreathGroup(base, n, cap=cap)
    tabG = character_table(base)
    nirr = len(tabG.irreducibles)
    conjW = W.group.conjugacy()

    sym_tabs = {}
    for k in range(n + 1):
        sym_tabs[k] = _sym_char_by_type(k) if k else None

    # conjugate count maps, shared across labels
    count_maps = []
    for g in conjW.reps:
        counts = Counter()
        for y in W.group.elements:
            counts[y.inverse() * g * y] += 1
        count_maps.append(counts)

    items = []
    for label in _multipartitions(n, nirr):
        comp = tuple(sum(lam) for lam in label)
        # block boundaries of the composition
        bounds = []
        off = 0
        for c in comp:
            bounds.append((off + 1, off + c))
            off += c
        subgroup_order = (base.order ** n)
        for c in comp:
            subgroup_order *= factorial(c)

        def in_subgroup(sw):
            for (lo, hi) in bounds:
                for b in range(lo, hi + 1):
                    if not (lo <= sw.perm(b) <= hi):
                        return False
            return True

        def chi_H(sw):
            total = CycloNum.one()
            for bi, (lo, hi) in enumerate(bounds):
                if comp[bi] == 0:
                    continue
                block_cycles = [c for c in sw.perm.cycles(include_fixed=True)
                                if lo <= c[0] <= hi]
                lengths = tuple(sorted((len(c) for c in block_cycles),
                                       reverse=True))
                for cyc in block_cycles:
                    gamma = cycle_product(sw.word, cyc)
                    total = total * tabG.irreducibles[bi](gamma)
                total = total * sym_tabs[comp[bi]][label[bi]][lengths]
            return total

        values = []
        for counts in count_maps:
            acc = None
            for z, mult in counts.items():
                sz = W.structure(z)
                if not in_subgroup(sz):
                    continue
                term = chi_H(sz) * mult
                acc = term if acc is None else acc + term
            if acc is None:
                acc = CycloNum.zero()
            values.append(acc * Fraction(1, subgroup_order))
        chi = ClassFunction(W.group, values)
        items.append((label, chi))
    return W, items

"""The quasi-elliptic ring of a point for a finite group, and G-set variants.

An element has one component per conjugacy class of G, each a LambdaElem in
the context of the canonical class representative.  Products, restrictions,
Kunneth maps, transfers, and the change-of-group isomorphism for coset
spaces all operate componentwise through the lambda_ring layer.
"""

from fractions import Fraction

from .chars import ClassFunction
from .cyclo import CycloNum
from .errors import NotSubgroup
from .laurent import LaurentPoly
from .lambda_ring import (LambdaElem, induce_lambda, lambda_context,
                          pullback_lambda, transport)
from .perm import FiniteGroup, GroupHom, ProductGroup


class QEllElem:
    """Element of the quasi-elliptic ring of a point over G."""

    __slots__ = ("group", "comps")

    def __init__(self, group, comps):
        self.group = group
        conj = group.conjugacy()
        full = {}
        for ci in range(len(conj)):
            c = comps.get(ci)
            if c is None:
                c = LambdaElem.zero(lambda_context(group, conj.reps[ci]))
            if c.level != 1:
                raise ValueError("point-ring components live at level 1")
            full[ci] = c
        self.comps = full

    @classmethod
    def unit(cls, group):
        conj = group.conjugacy()
        return cls(group, {
            ci: LambdaElem.unit(lambda_context(group, conj.reps[ci]))
            for ci in range(len(conj))})

    @classmethod
    def q(cls, group, exp=1):
        return cls.unit(group).scale(LaurentPoly.q(exp))

    @classmethod
    def zero(cls, group):
        return cls(group, {})

    def scale(self, p):
        return QEllElem(self.group,
                        {ci: c.scale(p) for ci, c in self.comps.items()})

    def __add__(self, other):
        self._check(other)
        return QEllElem(self.group,
                        {ci: self.comps[ci] + other.comps[ci]
                         for ci in self.comps})

    def __neg__(self):
        return QEllElem(self.group, {ci: -c for ci, c in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return QEllElem(self.group,
                        {ci: self.comps[ci] * other.comps[ci]
                         for ci in self.comps})

    def __pow__(self, n):
        result = QEllElem.unit(self.group)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _check(self, other):
        if self.group != other.group:
            raise ValueError("elements over different groups")

    def __eq__(self, other):
        return (isinstance(other, QEllElem) and self.group == other.group
                and self.comps == other.comps)

    def __hash__(self):
        return hash((self.group,
                     tuple(sorted((ci, hash(c)) for ci, c in self.comps.items()))))

    def is_zero(self):
        return all(c.is_zero() for c in self.comps.values())

    def to_json(self):
        conj = self.group.conjugacy()
        return {repr(conj.reps[ci]): self.comps[ci].to_json()
                for ci in sorted(self.comps)}

    def __repr__(self):
        conj = self.group.conjugacy()
        parts = ["[%r]: %r" % (conj.reps[ci], self.comps[ci])
                 for ci in sorted(self.comps)]
        return "QEllElem{%s}" % "; ".join(parts)


class QEllRing:
    """Handle for the quasi-elliptic ring of a point over a fixed group."""

    def __init__(self, group):
        self.group = group
        self.conj = group.conjugacy()
        self.contexts = [lambda_context(group, g) for g in self.conj.reps]

    def unit(self):
        return QEllElem.unit(self.group)

    def q(self, exp=1):
        return QEllElem.q(self.group, exp)

    def basis_element(self, class_index, basis_index):
        ctx = self.contexts[class_index]
        return QEllElem(self.group,
                        {class_index: LambdaElem.basis(ctx, basis_index)})

    def ranks(self):
        return tuple(ctx.rank for ctx in self.contexts)

    def grade_sets(self):
        return tuple(tuple(sorted(ctx.grades)) for ctx in self.contexts)

    def random_element(self, rng, max_exp=2, max_coeff=3):
        comps = {}
        for ci, ctx in enumerate(self.contexts):
            coeffs = {}
            for i in range(ctx.rank):
                if rng.random() < 0.5:
                    poly = {}
                    for _ in range(rng.randrange(1, 3)):
                        poly[rng.randrange(-max_exp, max_exp + 1)] = \
                            rng.randrange(-max_coeff, max_coeff + 1)
                    coeffs[i] = LaurentPoly(poly)
            comps[ci] = LambdaElem(ctx, coeffs)
        return QEllElem(self.group, comps)

    def report(self):
        from .lambda_ring import cyclic_presentation
        classes = []
        for ci, g in enumerate(self.conj.reps):
            ctx = self.contexts[ci]
            entry = {
                "rep": repr(g),
                "class_size": len(self.conj.classes[ci]),
                "centralizer_order": ctx.group.order,
                "rank": ctx.rank,
                "grades": [str(c) for c in sorted(ctx.grades)],
                "basis": [{"index": i,
                           "degree": ctx.table.degrees[i],
                           "grade": str(ctx.grades[i])}
                          for i in range(ctx.rank)],
            }
            pres = cyclic_presentation(self.group, g)
            if pres is not None:
                M, k, _ = pres
                entry["presentation"] = "Z[q^+-1, x]/(x^%d - q^%d)" % (M, k)
            classes.append(entry)
        return {"group_order": self.group.order,
                "num_classes": len(self.conj),
                "total_rank": sum(ctx.rank for ctx in self.contexts),
                "classes": classes}


def qell_point(group):
    return QEllRing(group)


def kunneth(prod, a, b):
    """External product along QEll(G) x QEll(H) -> QEll(G x H).

    prod is a ProductGroup; a lives over prod.left and b over prod.right.
    """
    if a.group != prod.left or b.group != prod.right:
        raise ValueError("factors over the wrong groups")
    P = prod.group
    conjP = P.conjugacy()
    conjL = prod.left.conjugacy()
    conjR = prod.right.conjugacy()
    comps = {}
    for ci, rep in enumerate(conjP.reps):
        gl, gr = prod.project(rep)
        li = conjL.class_of(gl)
        ri = conjR.class_of(gr)
        # move the factor components onto these exact representatives
        xl = prod.left.conjugator(gl, conjL.reps[li])
        xr = prod.right.conjugator(gr, conjR.reps[ri])
        al = transport(a.comps[li], xl)
        ar = transport(b.comps[ri], xr)
        ctx = lambda_context(P, rep)
        out = {}
        for i, pi in al.coeffs.items():
            chi_l = al.ctx.table.irreducibles[i]
            for j, pj in ar.coeffs.items():
                chi_r = ar.ctx.table.irreducibles[j]
                # external product character on C(gl) x C(gr)
                values = []
                for r2 in ctx.group.conjugacy().reps:
                    u, v = prod.project(r2)
                    values.append(chi_l(u) * chi_r(v))
                ext = ClassFunction(ctx.group, values)
                mults = ctx.table.decompose(ext)
                assert sum(mults) == 1, "external product not irreducible"
                k = mults.index(1)
                total = al.ctx.grades[i] + ar.ctx.grades[j]
                carry = total - ctx.grades[k]
                assert carry.denominator == 1 and carry in (0, 1)
                term = (pi * pj).shift(int(carry))
                out[k] = out.get(k, LaurentPoly.zero()) + term
        comps[ci] = LambdaElem(ctx, out)
    return QEllElem(P, comps)


def restrict_hom(phi, a):
    """Pull a QEll element over phi.dst back to phi.src along phi."""
    if a.group != phi.dst:
        raise ValueError("element not over the target group")
    H, G = phi.src, phi.dst
    conjH = H.conjugacy()
    conjG = G.conjugacy()
    comps = {}
    for ti, tau in enumerate(conjH.reps):
        img = phi(tau)
        gi = conjG.class_of(img)
        x = G.conjugator(img, conjG.reps[gi])
        moved = transport(a.comps[gi], x)
        comps[ti] = pullback_lambda(phi, tau, moved)
    return QEllElem(H, comps)


def restrict_to_subgroup(G, H, a):
    G.require_subgroup(H)
    return restrict_hom(GroupHom.inclusion(H, G), a)


def transfer(G, H, a):
    """Additive transfer from QEll(H) up to QEll(G)."""
    G.require_subgroup(H)
    if a.group != H:
        raise ValueError("element not over H")
    conjG = G.conjugacy()
    conjH = H.conjugacy()
    comps = {}
    for gi, g in enumerate(conjG.reps):
        ctx = lambda_context(G, g)
        total = LambdaElem.zero(ctx)
        for hi, h in enumerate(conjH.reps):
            if conjG.class_of(h) != gi:
                continue
            x = G.conjugator(g, h)  # g = x h x^-1
            moved = transport(a.comps[hi], x)  # now over (x H x^-1, g)
            Hx = FiniteGroup([x * y * x.inverse() for y in H.elements],
                             degree=G.degree)
            total = total + induce_lambda(G, Hx, g, moved)
        comps[gi] = total
    return QEllElem(G, comps)


# ---- finite G-sets ----

class FiniteGSet:
    """A finite G-set with points labeled by hashables."""

    def __init__(self, group, points, action):
        self.group = group
        self.points = tuple(points)
        self.action = dict(action)  # (g, x) -> y
        for g in group.elements:
            for x in self.points:
                y = self.action[(g, x)]
                if y not in set(self.points):
                    raise ValueError("action leaves the point set")
        ident = group.identity
        for x in self.points:
            if self.action[(ident, x)] != x:
                raise ValueError("identity must act trivially")

    def act(self, g, x):
        return self.action[(g, x)]

    def fixed_points(self, g):
        return [x for x in self.points if self.act(g, x) == x]

    def orbits(self, subgroup, points=None):
        pts = list(self.points if points is None else points)
        out = []
        remaining = set(pts)
        for x in pts:
            if x not in remaining:
                continue
            orb = {self.act(s, x) for s in subgroup.elements}
            out.append(sorted(orb, key=repr))
            remaining -= orb
        return out

    def stabilizer(self, x):
        return FiniteGroup([g for g in self.group.elements
                            if self.act(g, x) == x],
                           degree=self.group.degree)


def coset_space(G, H):
    """The G-set G/H with cosets labeled by their minimal element."""
    G.require_subgroup(H)
    label = {}
    cosets = []
    for g in G.elements:
        if g in label:
            continue
        coset = sorted(g * h for h in H.elements)
        rep = coset[0]
        cosets.append(rep)
        for e in coset:
            label[e] = rep
    action = {}
    for g in G.elements:
        for rep in cosets:
            action[(g, rep)] = label[g * rep]
    return FiniteGSet(G, cosets, action)


class GSetComponent:
    """One component of QEll over a G-set: a class, an orbit, a context."""

    __slots__ = ("class_index", "basepoint", "ctx")

    def __init__(self, class_index, basepoint, ctx):
        self.class_index = class_index
        self.basepoint = basepoint
        self.ctx = ctx


class GSetRing:
    """QEll of a finite G-set, componentwise over (class, orbit) pairs.

    For each class representative g, the centralizer of g acts on the g-fixed
    points; each orbit contributes a component whose context is (K, g) with
    K the intersection of the centralizer and the basepoint stabilizer.
    """

    def __init__(self, group, gset):
        self.group = group
        self.gset = gset
        self.conj = group.conjugacy()
        self.components = []
        for ci, g in enumerate(self.conj.reps):
            cent = group.centralizer(g)
            fixed = gset.fixed_points(g)
            for orb in gset.orbits(cent, fixed):
                x0 = orb[0]
                stab = gset.stabilizer(x0)
                K = FiniteGroup([y for y in cent.elements if y in stab],
                                degree=group.degree)
                ctx = lambda_context(K, g)
                self.components.append(GSetComponent(ci, x0, ctx))

    def zero(self):
        return GSetElem(self, {})

    def unit(self):
        return GSetElem(self, {i: LambdaElem.unit(comp.ctx)
                               for i, comp in enumerate(self.components)})

    def ranks(self):
        return tuple(comp.ctx.rank for comp in self.components)


class GSetElem:
    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps):
        self.ring = ring
        full = {}
        for i, comp in enumerate(ring.components):
            c = comps.get(i)
            if c is None:
                c = LambdaElem.zero(comp.ctx)
            full[i] = c
        self.comps = full

    def __add__(self, other):
        assert self.ring is other.ring
        return GSetElem(self.ring, {i: self.comps[i] + other.comps[i]
                                    for i in self.comps})

    def __mul__(self, other):
        assert self.ring is other.ring
        return GSetElem(self.ring, {i: self.comps[i] * other.comps[i]
                                    for i in self.comps})

    def __eq__(self, other):
        return (isinstance(other, GSetElem) and self.ring is other.ring
                and self.comps == other.comps)

    def __repr__(self):
        return "GSetElem{%s}" % "; ".join(
            "%d: %r" % (i, c) for i, c in sorted(self.comps.items()))


def qell_of_gset(G, X):
    return GSetRing(G, X)


def change_of_group(G, H):
    """The isomorphism QEll_G(G/H) = QEll_H(point).

    Returns (ring, to_H, from_H): ring is the GSetRing over G/H, to_H maps a
    GSetElem to a QEllElem over H, from_H is its inverse.
    """
    G.require_subgroup(H)
    X = coset_space(G, H)
    ring = GSetRing(G, X)
    conjH = H.conjugacy()
    conjG = G.conjugacy()

    # match components: (class of g, orbit with basepoint aH) <-> class of
    # a^-1 g a in H
    plan = []
    used = [0] * len(conjH)
    for i, comp in enumerate(ring.components):
        g = conjG.reps[comp.class_index]
        a = comp.basepoint  # coset label: an actual group element with aH fixed
        h = a.inverse() * g * a
        if h not in H:
            raise AssertionError("basepoint fixed by g but h outside H")
        hi = conjH.class_of(h)
        used[hi] += 1
        x = H.conjugator(h, conjH.reps[hi])  # h = x rep x^-1
        plan.append((i, hi, a, x))
    assert all(u == 1 for u in used), "component matching is not a bijection"

    def to_H(elem):
        comps = {}
        for i, hi, a, x in plan:
            val = elem.comps[i]
            # conjugate (K, g) down to (C_H(h), h), then to the canonical rep
            moved = transport(val, a.inverse())
            moved = transport(moved, x.inverse())
            ctx = lambda_context(H, conjH.reps[hi])
            assert moved.ctx is ctx, "centralizer mismatch in change of group"
            comps[hi] = moved
        return QEllElem(H, comps)

    def from_H(elem):
        comps = {}
        for i, hi, a, x in plan:
            moved = transport(elem.comps[hi], x)
            moved = transport(moved, a)
            assert moved.ctx is ring.components[i].ctx
            comps[i] = moved
        return GSetElem(ring, comps)

    return ring, to_H, from_H

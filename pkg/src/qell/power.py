"""Power operations on quasi-elliptic rings via wreath-product combinatorics.

For V over G and a wreath element (g, s) in G wr Sigma_n, the n-th power of V
restricts on the component of (g, s) to a product over the meta-cycles of any
centralizing element: each meta-cycle of length ell lying over cycles of
length k contributes the level-k rescaling of the component of V at the cycle
product, evaluated at the accumulated intertwiner and at the shifted time
(sum of offsets + ell * t) / k.  Decomposing that character exactly (finite
Fourier inversion in t plus character inner products, with integrality and
reconstruction verified) gives the power operation on the canonical basis.
"""

from fractions import Fraction

from .cyclo import CycloNum, accumulate, root_of_unity
from .errors import AxiomViolation, NotCentralizing
from .lambda_ring import LambdaElem, lambda_context
from .laurent import LaurentPoly
from .perm import ProductGroup
from .qell import QEllElem, kunneth, qell_point, restrict_hom, restrict_to_subgroup
from .wreath import (CycleOrbitData, WreathElement, WreathGroup, beta_data,
                     cycle_product)


class PowerEvaluator:
    """Evaluates the restricted power character for a fixed wreath element."""

    def __init__(self, base, V, w):
        self.base = base
        self.V = V
        self.w = w
        self.cod = CycleOrbitData(base, w)
        self._meta_cache = {}
        self._rescaled = {}
        self._val_cache = {}

    def _component(self, class_index, level):
        key = (class_index, level)
        hit = self._rescaled.get(key)
        if hit is None:
            hit = self.V.comps[class_index].rescale(level)
            self._rescaled[key] = hit
        return hit

    def _meta_data(self, c):
        """Per meta-cycle data for a centralizing structured element c."""
        hit = self._meta_cache.get(c)
        if hit is not None:
            return hit
        bd = beta_data(self.base, self.w, self.w, c)
        ncyc = len(self.cod.cycles)
        tau_bar = {i: bd[i][0] for i in range(ncyc)}
        seen = set()
        metas = []
        for start in range(ncyc):
            if start in seen:
                continue
            chain = [start]
            seen.add(start)
            nxt = tau_bar[start]
            while nxt != start:
                chain.append(nxt)
                seen.add(nxt)
                nxt = tau_bar[nxt]
            ell = len(chain)
            k = len(self.cod.cycles[start])
            msum = 0
            B = None
            for a in chain:
                _, m_off, beta = bd[a]
                msum += m_off
                B = beta if B is None else beta * B
            gamma = self.cod.gammas[start]
            assert B * gamma == gamma * B, "meta intertwiner not centralizing"
            u = self.cod.to_rep[start]
            Bp = u.inverse() * B * u
            metas.append((self.cod.gamma_class[start], k, Bp, msum, ell))
        self._meta_cache[c] = metas
        return metas

    def value(self, c, t):
        """The power character at (c, t) for centralizing structured c."""
        t = Fraction(t)
        total = CycloNum.one()
        for class_index, k, Bp, msum, ell in self._meta_data(c):
            T = msum + ell * t
            key = (class_index, k, Bp, T)
            val = self._val_cache.get(key)
            if val is None:
                val = self._component(class_index, k).evaluate(Bp, T)
                self._val_cache[key] = val
            total = total * val
        return total


def power_character(base, V, w, c, t):
    return PowerEvaluator(base, V, w).value(c, t)


def _fourier_decompose(ctx, sampler, bound, level_check=True):
    """Recover a LambdaElem from its character.

    sampler(rep, t) returns the character value at centralizer class rep and
    rational time t.  bound is a rigorous window on the integer part of every
    frequency.  Integrality of every coefficient and agreement at off-grid
    sample points are both asserted.
    """
    S = 2 * (bound + 2) + 1
    conjC = ctx.group.conjugacy()
    reps = conjC.reps
    sizes = conjC.class_sizes()
    order = ctx.group.order
    samples = [Fraction(s, S) for s in range(S)]
    fvals = [[sampler(rep, t) for rep in reps] for t in samples]
    coeffs = {}
    for i, chi in enumerate(ctx.table.irreducibles):
        ci = ctx.grades[i]
        conj_chi = [cv.conjugate() for cv in chi.values]
        gvals = [accumulate(zip(srow, conj_chi, sizes)) * Fraction(1, order)
                 for srow in fvals]
        poly = {}
        for j in range(-(bound + 2), bound + 3):
            acc = accumulate((gv, root_of_unity(-(j + ci) * t))
                             for t, gv in zip(samples, gvals))
            acc = acc * Fraction(1, S)
            if acc.is_zero():
                continue
            af = acc.as_fraction()
            assert af.denominator == 1, "non-integer power coefficient"
            poly[j] = int(af)
        if poly:
            coeffs[i] = LaurentPoly(poly)
    elem = LambdaElem(ctx, coeffs)
    if level_check:
        for t in (Fraction(1, 3 * S), Fraction(2, 3 * S)):
            for rep in reps:
                assert elem.evaluate(rep, t) == sampler(rep, t), \
                    "character reconstruction mismatch"
    return elem


def power_component(base, V, w, W):
    """Decompose the n-th power of V on the component of the wreath class of w."""
    if V.group != base:
        raise ValueError("V must live over the base group")
    r = W.realize(w)
    ctx = lambda_context(W.group, r)
    if W.n == 0:
        return LambdaElem.unit(ctx)
    ev = PowerEvaluator(base, V, w)
    maxexp = max((c.max_abs_exponent() for c in V.comps.values()), default=0)
    bound = (maxexp + 1) * W.n + 1

    def sampler(rep, t):
        return ev.value(W.structure(rep), t)

    return _fourier_decompose(ctx, sampler, bound)


def power_total(base, V, n, cap=None):
    """The n-th power operation applied to V, over the realized G wr Sigma_n."""
    W = WreathGroup(base, n, cap=cap)
    conj = W.group.conjugacy()
    comps = {}
    for ci, rep in enumerate(conj.reps):
        comps[ci] = power_component(base, V, W.structure(rep), W)
    return QEllElem(W.group, comps)


def repfibwr_basis(ctxA, ctxB):
    """Basis of the shared-time product of two component rings.

    Pairs of irreducibles with the sum of grades split into a reduced grade
    in [0,1) plus an integer carry.
    """
    out = []
    for i, ca in enumerate(ctxA.grades):
        for j, cb in enumerate(ctxB.grades):
            total = ca + cb
            carry = int(total)
            out.append(((i, j), ca, cb, total - carry, carry))
    return out


def decompose_pair(ctxA, ctxB, sampler, bound):
    """Decompose a two-variable character on a shared-time product.

    sampler(repA, repB, t) must be a class function in each group variable.
    Returns a dict (i, j) -> LaurentPoly where the term q^e stands for the
    frequency e + grade_i + grade_j.  Exact, with integrality and off-grid
    reconstruction asserted.
    """
    window = bound + 3
    S = 2 * window + 1
    conjA = ctxA.group.conjugacy()
    conjB = ctxB.group.conjugacy()
    orderA, orderB = ctxA.group.order, ctxB.group.order
    samples = [Fraction(s, S) for s in range(S)]
    fvals = {}
    for t in samples:
        for ia, ra in enumerate(conjA.reps):
            for ib, rb in enumerate(conjB.reps):
                fvals[(t, ia, ib)] = sampler(ra, rb, t)
    out = {}
    conjsA = [[cv.conjugate() for cv in chi.values]
              for chi in ctxA.table.irreducibles]
    conjsB = [[cv.conjugate() for cv in chi.values]
              for chi in ctxB.table.irreducibles]
    sizesA = conjA.class_sizes()
    sizesB = conjB.class_sizes()
    for i, chiA in enumerate(ctxA.table.irreducibles):
        for j, chiB in enumerate(ctxB.table.irreducibles):
            shift = ctxA.grades[i] + ctxB.grades[j]
            gvals = []
            for t in samples:
                total = accumulate(
                    (fvals[(t, ia, ib)], conjsA[i][ia], conjsB[j][ib],
                     sa * sb)
                    for ia, sa in enumerate(sizesA)
                    for ib, sb in enumerate(sizesB))
                gvals.append(total * Fraction(1, orderA * orderB))
            poly = {}
            for e in range(-window, window + 1):
                acc = accumulate((gv, root_of_unity(-(e + shift) * t))
                                 for t, gv in zip(samples, gvals))
                acc = acc * Fraction(1, S)
                if acc.is_zero():
                    continue
                af = acc.as_fraction()
                assert af.denominator == 1, "non-integer pair coefficient"
                poly[e] = int(af)
            if poly:
                out[(i, j)] = LaurentPoly(poly)
    # off-grid verification
    for t in (Fraction(1, 3 * S),):
        for ia, ra in enumerate(conjA.reps):
            for ib, rb in enumerate(conjB.reps):
                want = sampler(ra, rb, t)
                got = CycloNum.zero()
                for (i, j), poly in out.items():
                    shift = ctxA.grades[i] + ctxB.grades[j]
                    phase = CycloNum.zero()
                    for e, cc in poly.coeffs.items():
                        phase = phase + root_of_unity((e + shift) * t) * cc
                    got = got + (phase * ctxA.table.irreducibles[i].values[ia]
                                 * ctxB.table.irreducibles[j].values[ib])
                assert got == want, "pair reconstruction mismatch"
    return out


# ---- axioms ----

def axiom_identity(base, V, cap=None):
    """P_1 is the identity and P_0 is the unit."""
    P1 = power_total(base, V, 1, cap=cap)
    if not (P1.group == V.group and
            all(P1.comps[ci] == V.comps[ci] for ci in P1.comps)):
        raise AxiomViolation("P_1 is not the identity")
    P0 = power_total(base, V, 0, cap=cap)
    if P0 != QEllElem.unit(P0.group):
        raise AxiomViolation("P_0 is not the unit")
    return True


def axiom_sum(base, V, n, m, cap=None):
    """P_(n+m) restricted to the juxtaposition agrees with P_n x P_m.

    Both sides, evaluated against a pair of centralizing elements, are
    trigonometric polynomials in t whose frequencies lie in a window
    narrower than S; agreement on the S-point grid t = s/S therefore
    proves equality as elements.
    """
    Wn = WreathGroup(base, n, cap=cap)
    Wm = WreathGroup(base, m, cap=cap)
    maxexp = max((c.max_abs_exponent() for c in V.comps.values()), default=0)
    # every meta-cycle contributes frequency at most (maxexp + 1) * ell / k,
    # so both sides live in [-bound, bound]; S > 2 * bound separates them
    bound = (maxexp + 1) * (n + m)
    S = 2 * bound + 3
    samples = [Fraction(s, S) for s in range(S)]
    comps_m = {}
    for rm in Wm.group.conjugacy().reps:
        comps_m[rm] = power_component(base, V, Wm.structure(rm), Wm)
    for rn in Wn.group.conjugacy().reps:
        wn = Wn.structure(rn)
        An = power_component(base, V, wn, Wn)
        for rm in Wm.group.conjugacy().reps:
            wm = Wm.structure(rm)
            Am = comps_m[rm]
            wcat = Wn.embed_concat(Wm, wn, wm)
            ev = PowerEvaluator(base, V, wcat)
            avals = {ca: [An.evaluate(ca, t) for t in samples]
                     for ca in An.ctx.group.conjugacy().reps}
            bvals = {cb: [Am.evaluate(cb, t) for t in samples]
                     for cb in Am.ctx.group.conjugacy().reps}
            for ca, arow in avals.items():
                sa = Wn.structure(ca)
                for cb, brow in bvals.items():
                    sb = Wm.structure(cb)
                    cc = Wn.embed_concat(Wm, sa, sb)
                    for t, av, bv in zip(samples, arow, brow):
                        if ev.value(cc, t) != av * bv:
                            raise AxiomViolation(
                                "sum axiom failed at classes %r, %r"
                                % (rn, rm))
    return True


def axiom_composition(base, V, n, m, cap=None):
    """P_n after P_m agrees with P_(nm) restricted to the iterated wreath."""
    Wm = WreathGroup(base, m, cap=cap)
    inner = power_total(base, V, m, cap=cap)
    Wouter = WreathGroup(Wm.group, n, cap=cap)
    lhs = power_total(Wm.group, inner, n, cap=cap)
    Wbig = WreathGroup(base, n * m, cap=cap)
    if not Wouter.group.is_subgroup_of(Wbig.group):
        raise AxiomViolation("iterated wreath does not embed")
    big = power_total(base, V, n * m, cap=cap)
    rhs = restrict_to_subgroup(Wbig.group, Wouter.group, big)
    if lhs != rhs:
        raise AxiomViolation("composition axiom failed")
    return True


def axiom_external(prod, x, y, n, cap=None):
    """P_n of an external product agrees with the product of the powers."""
    from .perm import GroupHom
    G, H = prod.left, prod.right
    WP = WreathGroup(prod.group, n, cap=cap)
    WG = WreathGroup(G, n, cap=cap)
    WH = WreathGroup(H, n, cap=cap)
    Q = ProductGroup(WG.group, WH.group)
    table = {}
    for p in WP.group.elements:
        s = WP.structure(p)
        aword = []
        bword = []
        for u in s.word:
            a, b = prod.project(u)
            aword.append(a)
            bword.append(b)
        pa = WG.realize(WreathElement(aword, s.perm))
        pb = WH.realize(WreathElement(bword, s.perm))
        table[p] = Q.pair(pa, pb)
    phi = GroupHom(WP.group, Q.group, table)
    lhs = power_total(prod.group, kunneth(prod, x, y), n, cap=cap)
    rhs = restrict_hom(phi, kunneth(Q, power_total(G, x, n, cap=cap),
                                    power_total(H, y, n, cap=cap)))
    if lhs != rhs:
        raise AxiomViolation("external product axiom failed")
    return True


def check_axioms(base, corpus, n=1, m=1, composition=None, external=None,
                 cap=None):
    """Run the power-operation axioms over a corpus of elements.

    corpus: list of QEllElem over base.  n, m: exponents for the sum axiom.
    composition: optional (n, m) pair for the iterated-wreath axiom.
    external: optional (prod, x, y, n) tuple for the external-product axiom.
    Returns a report dict; raises AxiomViolation on any failure.
    """
    report = {"identity": 0, "sum": 0, "composition": 0, "external": 0}
    for V in corpus:
        axiom_identity(base, V, cap=cap)
        report["identity"] += 1
    for V in corpus:
        axiom_sum(base, V, n, m, cap=cap)
        report["sum"] += 1
    if composition is not None:
        cn, cm = composition
        for V in corpus:
            axiom_composition(base, V, cn, cm, cap=cap)
            report["composition"] += 1
    if external is not None:
        prod, x, y, ext_n = external
        axiom_external(prod, x, y, ext_n, cap=cap)
        report["external"] += 1
    report["ok"] = True
    return report


# ---- the total power operation collapsed to the classified target ----

class AdamsBarResult:
    """Value of the collapsed total power operation.

    components[(d, e)][class_index] is a list of e LambdaElems over the base
    context of that class: the coefficients of q'^0 .. q'^(e-1), where q' is
    the distinguished monomial with q'^e = q^d.
    """

    def __init__(self, base, N, components):
        self.base = base
        self.N = N
        self.components = components

    def _pairs(self):
        return sorted(self.components.keys())

    def __eq__(self, other):
        return (isinstance(other, AdamsBarResult) and self.base == other.base
                and self.N == other.N and self.components == other.components)

    def __mul__(self, other):
        assert self.base == other.base and self.N == other.N
        out = {}
        for de in self.components:
            d, e = de
            out[de] = {}
            for ci in self.components[de]:
                a = self.components[de][ci]
                b = other.components[de][ci]
                ctx = a[0].ctx
                res = [LambdaElem.zero(ctx) for _ in range(e)]
                for r in range(e):
                    for s in range(e):
                        term = a[r] * b[s]
                        idx = r + s
                        if idx >= e:
                            idx -= e
                            term = term.scale(LaurentPoly.q(d))
                        res[idx] = res[idx] + term
                out[de][ci] = res
        return AdamsBarResult(self.base, self.N, out)

    def __repr__(self):
        lines = []
        for de in self._pairs():
            for ci in sorted(self.components[de]):
                vals = self.components[de][ci]
                lines.append("(d=%d,e=%d) class %d: %s" % (
                    de[0], de[1], ci,
                    " + ".join("(%r) q'^%d" % (v, r)
                               for r, v in enumerate(vals) if not v.is_zero())
                    or "0"))
        return "AdamsBar{%s}" % "; ".join(lines)


def adams_bar(base, V, N, cap=None):
    """Collapse the N-th total power operation to the classified target.

    For each divisor pairing N = d * e the value lands in
    QEll(base) tensor Z[q^(+-1)][q'] / (q'^e - q^d); Case-I wreath classes
    die under the collapse and are omitted.
    """
    from .perm import symmetric_group
    from .tate import tate_structure
    if V.group != base:
        raise ValueError("V must live over the base group")
    ts = tate_structure(N, cap=cap)
    SN = symmetric_group(N)
    conjG = base.conjugacy()
    maxexp = max((c.max_abs_exponent() for c in V.comps.values()), default=0)
    bound = (maxexp + 1) * N + 2
    components = {}
    for entry in ts["classes"]:
        if entry["case"] != "II":
            continue
        d, e = entry["d"], entry["e"]
        sigma = entry["rep"]
        ctxB = lambda_context(SN, sigma)
        phi = entry["phi"]  # basis index -> list of e LaurentPolys
        comp = {}
        for gi, g in enumerate(conjG.reps):
            ctxA = lambda_context(base, g)
            word = tuple([g] * N)
            w = WreathElement(word, sigma)
            ev = PowerEvaluator(base, V, w)

            def sampler(c, s, t):
                return ev.value(WreathElement(tuple([c] * N), s), t)

            pairs = decompose_pair(ctxA, ctxB, sampler, bound)
            vals = [LambdaElem.zero(ctxA) for _ in range(e)]
            for (i, j), poly in pairs.items():
                fj = phi[j]
                for r in range(e):
                    if fj[r].is_zero():
                        continue
                    vals[r] = vals[r] + LambdaElem.basis(ctxA, i).scale(
                        poly * fj[r])
            comp[gi] = vals
        components[(d, e)] = comp
    return AdamsBarResult(base, N, components)

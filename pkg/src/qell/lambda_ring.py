"""Representation rings of the extended centralizer groups.

For a group G and element g, the component ring attached to the class of g is
free over Z[q^(+-1)] with basis indexed by the irreducibles of the chosen
ambient subgroup K (by default the full centralizer of g in G), each carrying
a grade c in [0,1) with chi(g) = e^(2 pi i c) * deg(chi).  Multiplying two
basis elements adds grades; a wrap past 1 carries a factor of q.

At level k the same coefficient objects are read in the variable q^(1/k):
a stored exponent j means q^(j/k) and a grade c contributes e^(2 pi i c t / k).
"""

from fractions import Fraction

from .chars import character_table, induce, restrict
from .cyclo import CycloNum, accumulate, rational_angle, root_of_unity
from .errors import NotCentralizing, NotSubgroup
from .laurent import LaurentPoly


class LambdaContext:
    """Basis data for the component ring at (K, g), g central in K."""

    def __init__(self, group, g):
        if g not in group:
            raise ValueError("element not in group")
        cent = group.centralizer(g)
        if cent != group:
            raise NotCentralizing("distinguished element must be central; "
                                  "pass the centralizer as the group")
        self.group = group
        self.g = g
        self.table = character_table(group)
        self.grades = []
        for chi in self.table.irreducibles:
            deg = chi.values[0].as_fraction()
            scalar = chi(g) * (1 / deg)
            self.grades.append(rational_angle(scalar))
        self.grades = tuple(self.grades)
        self.rank = len(self.grades)
        self._mul_table = {}

    def basis_pairs(self):
        """List of (irreducible index, grade)."""
        return list(enumerate(self.grades))

    def mul_pair(self, i, j):
        """Decompose chi_i * chi_j: list of (k, mult, carry)."""
        hit = self._mul_table.get((i, j))
        if hit is not None:
            return hit
        prod = self.table.irreducibles[i] * self.table.irreducibles[j]
        mults = self.table.decompose(prod)
        target = self.grades[i] + self.grades[j]
        out = []
        for k, m in enumerate(mults):
            if m:
                carry = target - self.grades[k]
                assert carry.denominator == 1 and carry in (0, 1), \
                    "grade bookkeeping broke"
                out.append((k, m, int(carry)))
        out = tuple(out)
        self._mul_table[(i, j)] = out
        self._mul_table[(j, i)] = out
        return out

    def __repr__(self):
        return "LambdaContext(|K|=%d, g=%r, rank=%d)" % (
            self.group.order, self.g, self.rank)


_context_cache = {}


def lambda_context(group, g):
    """Context for RLambda_G(g): ambient group is the centralizer of g in G.

    Cached by (centralizer, g), so any ambient group with the same
    centralizer yields the identical context object.
    """
    cent = group.centralizer(g)
    key = (cent, g)
    ctx = _context_cache.get(key)
    if ctx is None:
        ctx = LambdaContext(cent, g)
        _context_cache[key] = ctx
    return ctx


def canonical_basis(group, g):
    """Pairs (irreducible of C_G(g), grade) for the class component of g."""
    return lambda_context(group, g).basis_pairs()


class LambdaElem:
    """Element of a component ring: coefficients over the canonical basis."""

    __slots__ = ("ctx", "level", "coeffs")

    def __init__(self, ctx, coeffs=None, level=1):
        self.ctx = ctx
        self.level = level
        clean = {}
        if coeffs:
            for i, p in coeffs.items():
                if not isinstance(p, LaurentPoly):
                    p = LaurentPoly.const(p)
                if not p.is_zero():
                    clean[i] = p
        self.coeffs = clean

    @classmethod
    def basis(cls, ctx, i, level=1):
        return cls(ctx, {i: LaurentPoly.one()}, level)

    @classmethod
    def zero(cls, ctx, level=1):
        return cls(ctx, {}, level)

    @classmethod
    def unit(cls, ctx, level=1):
        """The trivial character with grade 0."""
        for i, c in enumerate(ctx.grades):
            if c == 0 and ctx.table.degrees[i] == 1:
                chi = ctx.table.irreducibles[i]
                if all(v == CycloNum.one() for v in chi.values):
                    return cls.basis(ctx, i, level)
        raise RuntimeError("trivial character missing")

    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.ctx is not other.ctx or self.level != other.level:
            raise ValueError("mismatched contexts or levels")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for i, p in other.coeffs.items():
            out[i] = out.get(i, LaurentPoly.zero()) + p
        return LambdaElem(self.ctx, out, self.level)

    def __neg__(self):
        return LambdaElem(self.ctx, {i: -p for i, p in self.coeffs.items()},
                          self.level)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p):
        if not isinstance(p, LaurentPoly):
            p = LaurentPoly.const(p)
        return LambdaElem(self.ctx,
                          {i: c * p for i, c in self.coeffs.items()},
                          self.level)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for i, pi in self.coeffs.items():
            for j, pj in other.coeffs.items():
                prod = pi * pj
                for k, m, carry in self.ctx.mul_pair(i, j):
                    term = prod.shift(carry) * m
                    out[k] = out.get(k, LaurentPoly.zero()) + term
        return LambdaElem(self.ctx, out, self.level)

    def __pow__(self, n):
        result = LambdaElem.unit(self.ctx, self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, LambdaElem) and self.ctx is other.ctx
                and self.level == other.level and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.level,
                     tuple(sorted((i, hash(p)) for i, p in self.coeffs.items()))))

    def rescale(self, k):
        """Read the element at level k * current level (q -> q^(1/k))."""
        if k < 1:
            raise ValueError("level factor must be positive")
        return LambdaElem(self.ctx, self.coeffs, self.level * k)

    def evaluate(self, h, t):
        """Character value at the point (h, t), t rational."""
        if h not in self.ctx.group:
            raise NotCentralizing("evaluation point must centralize g")
        t = Fraction(t)
        return accumulate(
            (p.evaluate(t, self.level),
             self.ctx.table.irreducibles[i](h),
             root_of_unity(self.ctx.grades[i] * t / self.level))
            for i, p in self.coeffs.items())

    def max_abs_exponent(self):
        if not self.coeffs:
            return 0
        return max(p.max_abs_exponent() for p in self.coeffs.values())

    def to_json(self):
        return {str(i): p.to_json() for i, p in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in sorted(self.coeffs):
            parts.append("(%s)*b%d" % (self.coeffs[i], i))
        s = " + ".join(parts)
        if self.level != 1:
            s += " @level %d" % self.level
        return s


def mul(a, b):
    return a * b


def rescale(a, k):
    return a.rescale(k)


def evaluate(a, h, t):
    return a.evaluate(h, t)


def transport(a, x, target_group=None):
    """Conjugation isomorphism from the context of a to (x K x^-1, x g x^-1).

    Sends each irreducible chi to chi^x with chi^x(h) = chi(x^-1 h x);
    grades are unchanged.
    """
    ctx = a.ctx
    K2 = target_group
    if K2 is None:
        from .perm import FiniteGroup
        K2 = FiniteGroup([x * k * x.inverse() for k in ctx.group.elements],
                         degree=ctx.group.degree)
    g2 = x * ctx.g * x.inverse()
    ctx2 = lambda_context(K2, g2)
    if ctx2.group != K2:
        raise NotCentralizing("conjugated element not central in target")
    xinv = x.inverse()
    mapping = {}
    reps2 = ctx2.group.conjugacy().reps
    for i in a.coeffs:
        chi = ctx.table.irreducibles[i]
        values = tuple(chi(xinv * r * x) for r in reps2)
        found = None
        for j, chi2 in enumerate(ctx2.table.irreducibles):
            if chi2.values == values:
                found = j
                break
        assert found is not None, "conjugate irreducible not found"
        assert ctx2.grades[found] == ctx.grades[i]
        mapping[i] = found
    return LambdaElem(ctx2, {mapping[i]: p for i, p in a.coeffs.items()},
                      a.level)


def induce_lambda(G, H, sigma, a):
    """Induction along C_H(sigma) <= C_G(sigma); grades are preserved."""
    G.require_subgroup(H)
    if sigma not in H:
        raise NotSubgroup("sigma must lie in H")
    src = lambda_context(H, sigma)
    if a.ctx is not src:
        raise ValueError("element not in the (H, sigma) context")
    dst = lambda_context(G, sigma)
    out = {}
    for i, p in a.coeffs.items():
        ind = induce(dst.group, src.group, src.table.irreducibles[i])
        for j, m in enumerate(dst.table.decompose(ind)):
            if m:
                assert dst.grades[j] == src.grades[i], \
                    "induction moved a grade"
                out[j] = out.get(j, LaurentPoly.zero()) + p * m
    return LambdaElem(dst, out, a.level)


def restrict_lambda(G, H, sigma, a):
    """Restriction along C_H(sigma) <= C_G(sigma); grades are preserved."""
    G.require_subgroup(H)
    if sigma not in H:
        raise NotSubgroup("sigma must lie in H")
    src = lambda_context(G, sigma)
    if a.ctx is not src:
        raise ValueError("element not in the (G, sigma) context")
    dst = lambda_context(H, sigma)
    out = {}
    for i, p in a.coeffs.items():
        res = restrict(src.group, dst.group, src.table.irreducibles[i])
        for j, m in enumerate(dst.table.decompose(res)):
            if m:
                assert dst.grades[j] == src.grades[i], \
                    "restriction moved a grade"
                out[j] = out.get(j, LaurentPoly.zero()) + p * m
    return LambdaElem(dst, out, a.level)


def pullback_lambda(phi, tau, b):
    """Pull back along the map of extended centralizers induced by phi.

    phi is a homomorphism G -> H, tau an element of G, and b an element of
    the component at (H, phi(tau)); the result lives at (G, tau).
    """
    if tau not in phi.src:
        raise ValueError("tau must lie in the source group")
    src_ctx = lambda_context(phi.dst, phi(tau))
    if b.ctx is not src_ctx:
        raise ValueError("element not in the (H, phi(tau)) context")
    dst_ctx = lambda_context(phi.src, tau)
    out = {}
    dst_reps = dst_ctx.group.conjugacy().reps
    from .chars import ClassFunction
    for i, p in b.coeffs.items():
        chi = src_ctx.table.irreducibles[i]
        pulled = ClassFunction(dst_ctx.group, [chi(phi(r)) for r in dst_reps])
        for j, m in enumerate(dst_ctx.table.decompose(pulled)):
            if m:
                assert dst_ctx.grades[j] == src_ctx.grades[i], \
                    "pullback moved a grade"
                out[j] = out.get(j, LaurentPoly.zero()) + p * m
    return LambdaElem(dst_ctx, out, b.level)


def cyclic_presentation(G, g, generator=None):
    """Monogenic presentation data when the centralizer of g is cyclic.

    Returns (M, k, x_index) where M is the centralizer order, x is the basis
    element whose character sends the chosen generator c to e^(2 pi i / M),
    and g = c^k; the relation x^M = q^k then holds.  Returns None when the
    centralizer is not cyclic.
    """
    ctx = lambda_context(G, g)
    M = ctx.group.order
    if generator is None:
        cands = [c for c in ctx.group.elements if c.order() == M]
        if not cands:
            return None
        generator = min(cands)
    elif generator not in ctx.group or generator.order() != M:
        raise ValueError("not a generator of the centralizer")
    want = root_of_unity(Fraction(1, M))
    for i, chi in enumerate(ctx.table.irreducibles):
        if chi(generator) == want:
            k = ctx.grades[i] * M
            assert k.denominator == 1
            return M, int(k), i
    return None

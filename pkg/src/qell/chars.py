"""Exact character tables of finite groups via Dixon's mod-p method.

The table is computed over F_p (p = 1 mod exponent, p large enough that all
degrees and root-of-unity multiplicities are faithful residues), lifted to
exact cyclotomic values, and then verified against both orthogonality
relations before being returned.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

from .cyclo import CycloNum, accumulate, root_of_unity
from .errors import NotCharacter, NotSubgroup


class ClassFunction:
    """A class function on a group, stored as values at the class reps."""

    __slots__ = ("group", "values")

    def __init__(self, group, values):
        self.group = group
        vals = []
        for v in values:
            if not isinstance(v, CycloNum):
                v = CycloNum.from_rational(v)
            vals.append(v)
        if len(vals) != len(group.conjugacy()):
            raise ValueError("wrong number of class values")
        self.values = tuple(vals)

    def __call__(self, g):
        return self.values[self.group.conjugacy().class_of(g)]

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.group,
                             [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.group,
                             [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        """Pointwise product (tensor product of characters)."""
        self._check(other)
        return ClassFunction(self.group,
                             [a * b for a, b in zip(self.values, other.values)])

    def scale(self, c):
        return ClassFunction(self.group, [v * c for v in self.values])

    def _check(self, other):
        if self.group != other.group:
            raise ValueError("class functions on different groups")

    def inner(self, other):
        """<self, other> = (1/|G|) sum self(g) * conj(other(g))."""
        self._check(other)
        conj = self.group.conjugacy()
        total = accumulate(
            (a, b.conjugate(), size)
            for size, a, b in zip(conj.class_sizes(), self.values,
                                  other.values))
        return total * Fraction(1, self.group.order)

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.group == other.group
                and self.values == other.values)

    def __hash__(self):
        return hash((self.group, self.values))

    def __repr__(self):
        return "ClassFunction(%s)" % (list(self.values),)


def _primitive_root(p):
    factors = set()
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.add(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.add(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise RuntimeError("no primitive root found")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _charpoly_mod(A, p):
    """Characteristic polynomial coefficients via Faddeev-LeVerrier mod p."""
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            M[i][i] = (M[i][i] + coeffs[n - k + 1]) % p
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) % p
               for j in range(n)] for i in range(n)]
        tr = sum(AM[i][i] for i in range(n)) % p
        coeffs[n - k] = (-tr * pow(k, p - 2, p)) % p
        M = AM
    return coeffs


def _kernel_mod(A, p):
    """Basis of the kernel of the matrix A over F_p."""
    n = len(A)
    m = len(A[0]) if n else 0
    rows = [list(r) for r in A]
    pivots = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][fc]) % p
        basis.append(v)
    return basis


class CharacterTable:
    """Exact irreducible character table of a finite group."""

    def __init__(self, group):
        self.group = group
        self.conj = group.conjugacy()
        self._build()
        self._verify()
        self._decomp_cache = {}

    # ---- construction ----

    def _build(self):
        G = self.group
        conj = self.conj
        r = len(conj)
        reps = conj.reps
        sizes = conj.class_sizes()
        orders = [g.order() for g in reps]
        m = lcm(*orders)
        # p > r keeps the Faddeev-LeVerrier divisions by 1..r invertible
        bound = max(2 * isqrt(G.order) + 1, r, 3)
        p = m + 1
        while not (_is_prime(p) and p > bound):
            p += m
        self._p = p

        # inverse-class pairing and power maps
        inv_class = [conj.class_of(g.inverse()) for g in reps]
        power_class = [[conj.class_of(reps[k] ** j) for j in range(orders[k])]
                       for k in range(r)]

        # class matrices: (M_i)[j][k] = #{x in C_i : x^-1 * rep_k in C_j}
        def class_matrix(i):
            M = [[0] * r for _ in range(r)]
            for x in conj.classes[i]:
                xi = x.inverse()
                for k in range(r):
                    j = conj.class_of(xi * reps[k])
                    M[j][k] += 1
            return M

        # split the common eigenspaces of the class matrices over F_p
        spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
        done = []
        for i in range(1, r):
            if not spaces:
                break
            Mi = None
            nxt = []
            for basis in spaces:
                d = len(basis)
                if d == 1:
                    done.append(basis)
                    continue
                if Mi is None:
                    Mi = class_matrix(i)
                # action of Mi on the subspace, in subspace coordinates
                images = []
                for v in basis:
                    w = [sum(Mi[a][b] * v[b] for b in range(r)) % p
                         for a in range(r)]
                    images.append(w)
                # solve basis-coordinate expression of each image
                A = self._express(basis, images, p)
                cp = _charpoly_mod(A, p)
                roots = [lam for lam in range(p)
                         if self._poly_eval(cp, lam, p) == 0]
                for lam in roots:
                    Ashift = [[(A[a][b] - (lam if a == b else 0)) % p
                               for b in range(d)] for a in range(d)]
                    sub = []
                    for kv in _kernel_mod(Ashift, p):
                        vec = [sum(kv[t] * basis[t][c] for t in range(d)) % p
                               for c in range(r)]
                        sub.append(vec)
                    if sub:
                        nxt.append(sub)
            spaces = [s for s in nxt if len(s) > 1]
            done.extend(s for s in nxt if len(s) == 1)
        done.extend(spaces)
        assert len(done) == r and all(len(s) == 1 for s in done), \
            "eigenspace splitting incomplete"

        # each eigenvector w has w_k = c * |C_k| chi(g_k) / chi(1)
        gen = _primitive_root(p)
        inv_sizes = [pow(s, p - 2, p) for s in sizes]
        chars = []
        for (w,) in done:
            if w[0] == 0:
                raise RuntimeError("degenerate eigenvector")
            scale = pow(w[0], p - 2, p)
            w = [(v * scale) % p for v in w]
            s = sum(w[k] * w[inv_class[k]] * inv_sizes[k] for k in range(r)) % p
            d2 = (G.order * pow(s, p - 2, p)) % p
            deg = None
            for cand in range(1, isqrt(G.order) + 1):
                if (cand * cand) % p == d2:
                    deg = cand
                    break
            assert deg is not None, "degree recovery failed"
            chi_p = [(deg * w[k] * inv_sizes[k]) % p for k in range(r)]
            values = []
            for k in range(r):
                n = orders[k]
                zn = pow(gen, (p - 1) // n, p)
                inv_n = pow(n, p - 2, p)
                val = CycloNum.zero()
                for l in range(n):
                    mu = 0
                    for j in range(n):
                        mu += chi_p[power_class[k][j]] * pow(zn, (-j * l) % (p - 1), p)
                    mu = (mu * inv_n) % p
                    assert mu <= deg, "multiplicity lift out of range"
                    if mu:
                        val = val + root_of_unity(Fraction(l, n)) * mu
                values.append(val)
            chars.append(ClassFunction(G, values))
        chars.sort(key=lambda c: (c.values[0].as_fraction(),
                                  [v.sort_key() for v in c.values]))
        self.irreducibles = tuple(chars)
        self.degrees = tuple(int(c.values[0].as_fraction()) for c in chars)

    @staticmethod
    def _poly_eval(coeffs, x, p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        return acc

    @staticmethod
    def _express(basis, images, p):
        """Coordinates of each image vector in the given basis (mod p)."""
        d = len(basis)
        r = len(basis[0])
        # solve basis^T * X = images^T by elimination
        rows = [[basis[t][c] for t in range(d)] + [img[c] for img in images]
                for c in range(r)]
        pivots = []
        rr = 0
        for c in range(d):
            piv = None
            for i in range(rr, r):
                if rows[i][c] % p:
                    piv = i
                    break
            assert piv is not None, "basis not independent"
            rows[rr], rows[piv] = rows[piv], rows[rr]
            inv = pow(rows[rr][c], p - 2, p)
            rows[rr] = [(v * inv) % p for v in rows[rr]]
            for i in range(r):
                if i != rr and rows[i][c] % p:
                    f = rows[i][c]
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rr])]
            pivots.append(c)
            rr += 1
        for i in range(rr, r):
            assert all(v % p == 0 for v in rows[i][d:]), "image escapes subspace"
        # column j of A = coordinates of images[j]
        A = [[rows[i][d + j] for j in range(len(images))] for i in range(d)]
        return A

    def _verify(self):
        conj = self.conj
        r = len(conj)
        order = self.group.order
        for i in range(r):
            for j in range(i, r):
                val = self.irreducibles[i].inner(self.irreducibles[j])
                want = CycloNum.one() if i == j else CycloNum.zero()
                assert val == want, "row orthogonality failed"
        # column orthogonality
        sizes = conj.class_sizes()
        for k in range(r):
            for l in range(k, r):
                total = CycloNum.zero()
                for chi in self.irreducibles:
                    total = total + chi.values[k] * chi.values[l].conjugate()
                if k == l:
                    want = CycloNum.from_rational(Fraction(order, sizes[k]))
                else:
                    want = CycloNum.zero()
                assert total == want, "column orthogonality failed"

    # ---- decomposition ----

    def decompose(self, cf, allow_virtual=False):
        """Multiplicities of cf in the irreducible basis.

        Raises NotCharacter unless every multiplicity is a nonnegative
        integer (or any integer, when allow_virtual is set).
        """
        key = (cf.values, allow_virtual)
        hit = self._decomp_cache.get(key)
        if hit is not None:
            return hit
        mults = []
        for chi in self.irreducibles:
            m = cf.inner(chi)
            if not m.is_rational():
                raise NotCharacter("non-rational multiplicity %s" % m)
            mf = m.as_fraction()
            if mf.denominator != 1 or (mf < 0 and not allow_virtual):
                raise NotCharacter("bad multiplicity %s" % mf)
            mults.append(int(mf))
        recon = [CycloNum.zero()] * len(cf.values)
        for m, chi in zip(mults, self.irreducibles):
            if m:
                recon = [a + chi_v * m for a, chi_v in zip(recon, chi.values)]
        if tuple(recon) != cf.values:
            raise NotCharacter("reconstruction mismatch")
        mults = tuple(mults)
        self._decomp_cache[key] = mults
        return mults

    def regular_check(self):
        return sum(d * d for d in self.degrees) == self.group.order


_table_cache = {}


def character_table(group):
    tab = _table_cache.get(group)
    if tab is None:
        tab = CharacterTable(group)
        _table_cache[group] = tab
    return tab


def trivial_character(group):
    return ClassFunction(group, [CycloNum.one()] * len(group.conjugacy()))


def restrict(G, H, cf):
    """Restrict a class function on G to the subgroup H."""
    G.require_subgroup(H)
    if cf.group != G:
        raise ValueError("class function not on G")
    return ClassFunction(H, [cf(g) for g in H.conjugacy().reps])


def restrict_along(phi, cf):
    """Pull back a class function on phi.dst along the homomorphism phi."""
    if cf.group != phi.dst:
        raise ValueError("class function not on the target group")
    return ClassFunction(phi.src,
                         [cf(phi(g)) for g in phi.src.conjugacy().reps])


def induce(G, H, cf):
    """Frobenius induction of a class function from H up to G."""
    G.require_subgroup(H)
    if cf.group != H:
        raise ValueError("class function not on H")
    conjG = G.conjugacy()
    conjH = H.conjugacy()
    values = []
    for gi, g in enumerate(conjG.reps):
        cent_g = Fraction(G.order, len(conjG.classes[gi]))
        total = CycloNum.zero()
        for hi, h in enumerate(conjH.reps):
            if conjG.class_of(h) == gi:
                weight = cent_g / Fraction(H.order, len(conjH.classes[hi]))
                assert weight.denominator == 1
                total = total + cf.values[hi] * int(weight)
        values.append(total)
    return ClassFunction(G, values)


# ---- independent oracle: Murnaghan-Nakayama for symmetric groups ----

def partitions(n):
    """All partitions of n, descending parts, reverse-lex order."""
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rest, maxpart), 0, -1):
            rec(rest - k, k, prefix + [k])

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def mn_character(lam, mu):
    """chi^lam(mu) for partitions lam, mu of n, by Murnaghan-Nakayama.

    Uses the beta-number formulation: removing a k-rim-hook from lam is the
    same as replacing some beta number b by b-k (when b-k is free), with sign
    (-1)^(number of beta numbers strictly between b-k and b).
    """
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    k = mu[0]
    rest = tuple(mu[1:])
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        sign = (-1) ** sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(v - (ell - 1 - i) for i, v in enumerate(newbeta))
        newlam = tuple(v for v in newlam if v > 0)
        total += sign * mn_character(newlam, rest)
    return total

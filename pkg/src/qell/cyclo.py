"""Exact cyclotomic arithmetic.

A CycloNum is an element of Q(zeta_m) stored in the power basis
1, z, ..., z^(phi(m)-1) with z = e^(2 pi i / m), with rational coefficients.
Values are kept at their minimal conductor (descending through Galois
invariance), so equal values always have identical representations.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import NotRootOfUnity


@lru_cache(maxsize=None)
def euler_phi(m):
    result = m
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def prime_divisors(m):
    out = []
    n, p = m, 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _poly_divide(num, den):
    """Exact division of integer coefficient lists (index = exponent)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, den[dd])
        assert r == 0
        out[i - dd] = q
        for j, d in enumerate(den):
            num[i - dd + j] -= q * d
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficient list of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divide(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(m):
    """z^e as a power-basis dict for phi(m) <= e < m."""
    phi = euler_phi(m)
    cp = cyclotomic_polynomial(m)
    table = {}
    cur = {j: Fraction(-cp[j]) for j in range(phi) if cp[j] != 0}
    table[phi] = dict(cur)
    for e in range(phi + 1, m):
        nxt = {}
        for j, c in cur.items():
            if j + 1 < phi:
                nxt[j + 1] = nxt.get(j + 1, 0) + c
            else:
                for jj, cc in table[phi].items():
                    nxt[jj] = nxt.get(jj, 0) + c * cc
        cur = {j: c for j, c in nxt.items() if c != 0}
        table[e] = dict(cur)
    return table


def _reduce(m, coeffs):
    """Reduce exponent dict mod z^m = 1 and mod the cyclotomic polynomial."""
    phi = euler_phi(m)
    merged = {}
    for e, c in coeffs.items():
        e %= m
        merged[e] = merged.get(e, 0) + c
    table = _reduction_table(m) if phi < m else {}
    out = {}
    for e, c in merged.items():
        if c == 0:
            continue
        if e < phi:
            out[e] = out.get(e, 0) + c
        else:
            for j, cj in table[e].items():
                out[j] = out.get(j, 0) + c * cj
    return {e: c for e, c in out.items() if c != 0}


def _galois(m, coeffs, k):
    """Apply zeta -> zeta^k (k coprime to m)."""
    return _reduce(m, {(k * e) % m: c for e, c in coeffs.items()})


@lru_cache(maxsize=None)
def _rebase_solver(m, d):
    """Cached solver data for rewriting conductor m in the basis of zeta_d.

    Returns (cols, pivot_rows, inverse) where cols[j] is zeta_m^(step*j)
    reduced to the conductor-m power basis, pivot_rows selects phi(d)
    independent rows, and inverse is the inverse of that square subsystem.
    """
    step = m // d
    phi_d = euler_phi(d)
    phi_m = euler_phi(m)
    cols = [_reduce(m, {step * j: Fraction(1)}) for j in range(phi_d)]
    # pick phi_d independent rows by elimination
    rows = [[cols[j].get(e, Fraction(0)) for j in range(phi_d)]
            for e in range(phi_m)]
    pivot_rows = []
    r = 0
    for e in range(phi_m):
        if r == phi_d:
            break
        cand = pivot_rows + [e]
        # check rank of the candidate row set
        sub = [list(rows[i]) for i in cand]
        rank = 0
        ncols = phi_d
        for c in range(ncols):
            piv = None
            for i in range(rank, len(sub)):
                if sub[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            sub[rank], sub[piv] = sub[piv], sub[rank]
            inv = 1 / sub[rank][c]
            sub[rank] = [v * inv for v in sub[rank]]
            for i in range(len(sub)):
                if i != rank and sub[i][c] != 0:
                    f = sub[i][c]
                    sub[i] = [a - f * b for a, b in zip(sub[i], sub[rank])]
            rank += 1
        if rank == len(cand):
            pivot_rows.append(e)
            r += 1
    assert len(pivot_rows) == phi_d
    # invert the square subsystem M[i][j] = rows[pivot_rows[i]][j]
    n = phi_d
    M = [list(rows[i]) + [Fraction(1) if k == idx else Fraction(0)
                          for k in range(n)]
         for idx, i in enumerate(pivot_rows)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if M[i][c] != 0:
                piv = i
                break
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    inverse = [row[n:] for row in M]
    return cols, tuple(pivot_rows), inverse


def _rebase(m, coeffs, d):
    """Rewrite a conductor-m power-basis dict in the power basis of zeta_d.

    Requires the value to lie in Q(zeta_d); returns the conductor-d dict.
    """
    cols, pivot_rows, inverse = _rebase_solver(m, d)
    phi_d = euler_phi(d)
    phi_m = euler_phi(m)
    b = [coeffs.get(e, Fraction(0)) for e in pivot_rows]
    sol = [sum(inverse[i][k] * b[k] for k in range(phi_d))
           for i in range(phi_d)]
    # verify the full system (the value might not lie in the smaller field)
    recon = {}
    for j, s in enumerate(sol):
        if s:
            for e, c in cols[j].items():
                recon[e] = recon.get(e, Fraction(0)) + s * c
    recon = {e: c for e, c in recon.items() if c != 0}
    if recon != coeffs:
        raise ValueError("value does not lie in the smaller field")
    return {j: sol[j] for j in range(phi_d) if sol[j] != 0}


def _minimize(m, coeffs):
    """Descend to the minimal conductor by checking Galois invariance."""
    if not coeffs:
        return 1, {}
    if set(coeffs) == {0}:
        return 1, dict(coeffs)
    changed = True
    while changed and m > 1:
        changed = False
        for p in prime_divisors(m):
            d = m // p
            # kernel of (Z/m)* -> (Z/d)*: k = 1 + j*d coprime to m
            invariant = True
            for k in range(1 + d, m, d):
                if gcd(k, m) != 1:
                    continue
                if _galois(m, coeffs, k) != coeffs:
                    invariant = False
                    break
            if invariant:
                try:
                    coeffs = _rebase(m, coeffs, d)
                except ValueError:
                    continue
                m = d
                changed = True
                break
    return m, coeffs


class CycloNum:
    """An exact cyclotomic number at its minimal conductor."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order, coeffs, reduced=False):
        if not reduced:
            coeffs = _reduce(order, {e: Fraction(c) for e, c in coeffs.items()})
            order, coeffs = _minimize(order, coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycloNum is immutable")

    @classmethod
    def from_rational(cls, r):
        r = Fraction(r)
        obj = cls.__new__(cls)
        object.__setattr__(obj, "order", 1)
        object.__setattr__(obj, "coeffs", {} if r == 0 else {0: r})
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls):
        return cls.from_rational(0)

    @classmethod
    def one(cls):
        return cls.from_rational(1)

    def _lift(self, order):
        """Exponent dict at a (multiple) conductor, unreduced."""
        step = order // self.order
        return {e * step: c for e, c in self.coeffs.items()}

    def is_zero(self):
        return not self.coeffs

    def is_rational(self):
        return self.order == 1

    def as_fraction(self):
        if self.order != 1:
            raise ValueError("not rational: %s" % self)
        return self.coeffs.get(0, Fraction(0))

    @staticmethod
    def _coerce(x):
        if isinstance(x, CycloNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycloNum.from_rational(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = lcm(self.order, other.order)
        a = self._lift(m)
        for e, c in other._lift(m).items():
            a[e] = a.get(e, 0) + c
        return CycloNum(m, a)

    __radd__ = __add__

    def __neg__(self):
        obj = CycloNum.__new__(CycloNum)
        object.__setattr__(obj, "order", self.order)
        object.__setattr__(obj, "coeffs", {e: -c for e, c in self.coeffs.items()})
        object.__setattr__(obj, "_hash", None)
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return CycloNum.zero()
        if other.order == 1:
            r = other.coeffs[0]
            obj = CycloNum.__new__(CycloNum)
            object.__setattr__(obj, "order", self.order)
            object.__setattr__(obj, "coeffs",
                               {e: c * r for e, c in self.coeffs.items()})
            object.__setattr__(obj, "_hash", None)
            return obj
        if self.order == 1:
            return other * self
        m = lcm(self.order, other.order)
        a = self._lift(m)
        b = other._lift(m)
        prod = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = (e1 + e2) % m
                prod[e] = prod.get(e, 0) + c1 * c2
        return CycloNum(m, prod)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.order == 1:
            return CycloNum.from_rational(1 / self.coeffs[0])
        m = self.order
        prod = CycloNum.one()
        for k in range(2, m):
            if gcd(k, m) == 1:
                conj = CycloNum.__new__(CycloNum)
                object.__setattr__(conj, "order", m)
                object.__setattr__(conj, "coeffs", _galois(m, self.coeffs, k))
                object.__setattr__(conj, "_hash", None)
                prod = prod * conj
        norm = self * prod
        return prod * (1 / norm.as_fraction())

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        if self.order <= 2:
            return self
        obj = CycloNum.__new__(CycloNum)
        reduced = _galois(self.order, self.coeffs, self.order - 1)
        m, co = _minimize(self.order, reduced)
        object.__setattr__(obj, "order", m)
        object.__setattr__(obj, "coeffs", co)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            key = (self.order, tuple(sorted(self.coeffs.items())))
            object.__setattr__(self, "_hash", hash(key))
        return self._hash

    def sort_key(self):
        return (self.order, tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                terms.append(str(c))
            else:
                base = "z(%d)" % self.order if e == 1 else "z(%d)^%d" % (self.order, e)
                if c == 1:
                    terms.append(base)
                elif c == -1:
                    terms.append("-" + base)
                else:
                    terms.append("%s*%s" % (c, base))
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def accumulate(terms):
    """Sum of products of cyclotomic numbers, reduced only once.

    terms is an iterable of tuples; each tuple's entries (CycloNum, int, or
    Fraction) are multiplied and the results summed.  Equivalent to nested
    + and *, but all intermediate work happens on raw exponent dicts, with a
    single canonicalization at the end.
    """
    m = 1
    acc = {}
    for term in terms:
        tm = 1
        td = {0: Fraction(1)}
        skip = False
        for f in term:
            if isinstance(f, CycloNum):
                if f.is_zero():
                    skip = True
                    break
                fm, fd = f.order, f.coeffs
            else:
                if f == 0:
                    skip = True
                    break
                fm, fd = 1, {0: Fraction(f)}
            nm = lcm(tm, fm)
            s1, s2 = nm // tm, nm // fm
            nd = {}
            for e1, c1 in td.items():
                for e2, c2 in fd.items():
                    e = (e1 * s1 + e2 * s2) % nm
                    nd[e] = nd.get(e, 0) + c1 * c2
            tm, td = nm, nd
        if skip:
            continue
        nm = lcm(m, tm)
        if nm != m:
            acc = {e * (nm // m): c for e, c in acc.items()}
            m = nm
        s = nm // tm
        for e, c in td.items():
            ee = (e * s) % nm
            acc[ee] = acc.get(ee, 0) + c
    return CycloNum(m, acc)


@lru_cache(maxsize=None)
def _root_of_unity_cached(a, b):
    # b is already the minimal conductor here (b == 1, odd, or 0 mod 4),
    # so reduction mod the cyclotomic polynomial suffices
    sign = Fraction(1)
    if b % 4 == 2:
        # conductor drops: zeta_(2b')^a = -zeta_b'^((a + b') / 2), b' = b / 2
        bp = b // 2
        a = ((a + bp) // 2) % bp
        b = bp
        sign = Fraction(-1)
    coeffs = _reduce(b, {a: sign})
    obj = CycloNum.__new__(CycloNum)
    object.__setattr__(obj, "order", b if coeffs else 1)
    object.__setattr__(obj, "coeffs", coeffs)
    object.__setattr__(obj, "_hash", None)
    return obj


def root_of_unity(t):
    """e^(2 pi i t) for rational t."""
    t = Fraction(t)
    t -= t.numerator // t.denominator  # reduce mod 1
    return _root_of_unity_cached(t.numerator, t.denominator)


def rational_angle(z):
    """Return t in [0,1) with z = e^(2 pi i t), or raise NotRootOfUnity."""
    if not isinstance(z, CycloNum):
        z = CycloNum._coerce(z)
    if z.is_zero():
        raise NotRootOfUnity("zero is not a root of unity")
    bound = lcm(2, z.order)
    w = z
    order = None
    for n in range(1, bound + 1):
        if w == 1:
            order = n
            break
        w = w * z
    if order is None:
        raise NotRootOfUnity("%s is not a root of unity" % z)
    for k in range(order):
        if z == root_of_unity(Fraction(k, order)):
            return Fraction(k, order)
    raise NotRootOfUnity("%s is not a root of unity" % z)

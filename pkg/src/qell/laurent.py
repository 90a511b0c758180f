"""Integer Laurent polynomials in one variable q.

Used as the coefficient ring Z[q, q^-1]; at level k the same object is read
as a polynomial in the formal variable q^(1/k) (exponents count k-th roots).
"""

from fractions import Fraction

from .cyclo import CycloNum, accumulate, root_of_unity


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    if not isinstance(c, int):
                        raise TypeError("integer coefficients only, got %r" % (c,))
                    clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def q(cls, exp=1):
        return cls({exp: 1})

    @classmethod
    def const(cls, n):
        return cls({0: n})

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers only for monomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def max_abs_exponent(self):
        if not self.coeffs:
            return 0
        return max(abs(e) for e in self.coeffs)

    def evaluate(self, t, level=1):
        """Value at q^(1/level) = e^(2 pi i t / level), t rational."""
        t = Fraction(t)
        return accumulate((root_of_unity(e * t / level), c)
                          for e, c in self.coeffs.items())

    def to_json(self):
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                terms.append(str(c))
            else:
                base = "q" if e == 1 else "q^%d" % e
                if c == 1:
                    terms.append(base)
                elif c == -1:
                    terms.append("-" + base)
                else:
                    terms.append("%d*%s" % (c, base))
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return NotImplemented

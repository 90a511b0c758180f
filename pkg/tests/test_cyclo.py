import random
from fractions import Fraction

import pytest

from qell.cyclo import CycloNum, rational_angle, root_of_unity
from qell.errors import NotRootOfUnity


def test_vanishing_sum():
    z3 = root_of_unity(Fraction(1, 3))
    assert z3 + z3 * z3 + CycloNum.one() == CycloNum.zero()


def test_i_squared():
    i = root_of_unity(Fraction(1, 4))
    assert i * i == CycloNum.from_rational(-1)


def test_inverse_of_root():
    z5 = root_of_unity(Fraction(1, 5))
    assert z5.inverse() == z5 ** 4
    assert z5 * z5.inverse() == CycloNum.one()


def test_root_of_unity_order():
    for a, b in [(0, 1), (1, 2), (1, 6), (5, 6), (3, 8), (7, 12)]:
        z = root_of_unity(Fraction(a, b))
        order = b // __import__("math").gcd(a, b)
        assert z ** order == CycloNum.one()
        for k in range(1, order):
            assert z ** k != CycloNum.one()


def test_rational_angle_round_trip():
    for a, b in [(0, 1), (1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (5, 6),
                 (1, 8), (7, 12), (11, 30)]:
        c = Fraction(a, b)
        assert rational_angle(root_of_unity(c)) == c % 1


def test_rational_angle_rejects_non_roots():
    with pytest.raises(NotRootOfUnity):
        rational_angle(CycloNum.from_rational(2))
    with pytest.raises(NotRootOfUnity):
        rational_angle(root_of_unity(Fraction(1, 4)) + CycloNum.one())
    # 1 + z_3 happens to be a sixth root of unity
    assert rational_angle(root_of_unity(Fraction(1, 3)) + CycloNum.one()) == \
        Fraction(1, 6)


def test_conjugate_is_inverse_on_roots():
    for b in range(1, 13):
        for a in range(b):
            z = root_of_unity(Fraction(a, b))
            assert z.conjugate() == z.inverse()


def test_half_turn_is_minus_one():
    assert root_of_unity(Fraction(1, 2)) == CycloNum.from_rational(-1)
    assert root_of_unity(Fraction(1, 6)) * root_of_unity(Fraction(1, 3)) == \
        root_of_unity(Fraction(1, 2))


def _random_cyclo(rng, conductor):
    out = CycloNum.zero()
    for _ in range(rng.randrange(1, 4)):
        k = rng.randrange(conductor)
        c = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
        out = out + root_of_unity(Fraction(k, conductor)) * c
    return out


def test_field_axioms_randomized():
    rng = random.Random(20260825)
    for _ in range(120):
        m = rng.choice([3, 4, 5, 6, 8, 12])
        a = _random_cyclo(rng, m)
        b = _random_cyclo(rng, m)
        c = _random_cyclo(rng, m)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        if not a.is_zero():
            assert a * a.inverse() == CycloNum.one()


def test_conjugation_is_ring_hom_randomized():
    rng = random.Random(99)
    for _ in range(100):
        m = rng.choice([3, 4, 5, 8, 12])
        a = _random_cyclo(rng, m)
        b = _random_cyclo(rng, m)
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_as_fraction():
    z3 = root_of_unity(Fraction(1, 3))
    v = z3 + z3.conjugate()  # = -1
    assert v.as_fraction() == -1
    assert CycloNum.from_rational(Fraction(3, 2)).as_fraction() == \
        Fraction(3, 2)
    assert not z3.is_rational()


def test_minimal_conductor_canonical_form():
    # the same value built at different conductors compares equal
    z6_cubed = root_of_unity(Fraction(1, 6)) ** 3
    assert z6_cubed == CycloNum.from_rational(-1)
    z12_sq = root_of_unity(Fraction(1, 12)) ** 2
    assert z12_sq == root_of_unity(Fraction(1, 6))

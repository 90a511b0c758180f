from fractions import Fraction

import pytest

from qell.cyclo import CycloNum, root_of_unity
from qell.laurent import LaurentPoly


def test_arithmetic():
    p = LaurentPoly({2: 1, 0: -3})
    q = LaurentPoly.q()
    assert p + 3 == LaurentPoly({2: 1})
    assert p * q == LaurentPoly({3: 1, 1: -3})
    assert (q - q).is_zero()
    assert q ** 4 == LaurentPoly({4: 1})
    assert p.shift(-2) == LaurentPoly({0: 1, -2: -3})
    assert 2 * q == LaurentPoly({1: 2})


def test_integer_coefficients_only():
    with pytest.raises(TypeError):
        LaurentPoly({0: Fraction(1, 2)})


def test_evaluate_levels():
    q = LaurentPoly.q()
    # at level 1, q at t is e^(2 pi i t)
    assert q.evaluate(Fraction(1, 3)) == root_of_unity(Fraction(1, 3))
    # at level 2 the same object reads as q^(1/2)
    assert q.evaluate(Fraction(1, 3), level=2) == \
        root_of_unity(Fraction(1, 6))
    assert LaurentPoly({2: 3, -1: 1}).evaluate(0) == CycloNum.from_rational(4)


def test_max_abs_exponent_and_repr():
    p = LaurentPoly({3: 1, -5: 2})
    assert p.max_abs_exponent() == 5
    assert repr(LaurentPoly({2: 1, 0: -3})) == "q^2 - 3"
    assert repr(LaurentPoly.zero()) == "0"


def test_to_json_sorted():
    assert LaurentPoly({1: 2, -1: 1}).to_json() == {"-1": 1, "1": 2}

from fractions import Fraction

import pytest

from resforge.errors import PrecisionError
from resforge.padic import (KElem, k_add, k_inv, k_mul, k_one_minus,
                            k_reduce_mod_pi, k_sub, local_field)


@pytest.fixture
def q7():
    return local_field(7)


def test_pi_times_pi_inverse_is_one(q7):
    x = k_mul(q7.pi(1), q7.pi(-1))
    assert x.val == 0 and x.reduce_mod_pi() == 1


def test_unit_reduction(q7):
    a = q7.parse("3")
    assert a.val == 0
    assert k_reduce_mod_pi(a) == 3


def test_inverse_of_three_at_precision_two(q7):
    b = q7.parse("1/3", prec=2)
    assert b.val == 0
    assert b.unit == 33
    assert (3 * 33) % 49 == 1  # oracle


def test_valuations_add(q7):
    import random
    rng = random.Random(3)
    for _ in range(50):
        a = q7.pi(rng.randint(-4, 4)) * q7.from_rational(rng.randint(1, 6))
        b = q7.pi(rng.randint(-4, 4)) * q7.from_rational(rng.randint(1, 6))
        assert (a * b).val == a.val + b.val
        assert (a * b) * k_inv(b) == a


def test_power_and_negation(q7):
    a = q7.parse("pi^2*3")
    assert (a**3).val == 6
    assert (a**-2).val == -4
    assert (a**0).val == 0 and (a**0).reduce_mod_pi() == 1
    assert (-a).val == 2


def test_reduce_requires_unit(q7):
    with pytest.raises(ValueError):
        q7.pi(1).reduce_mod_pi()


def test_unit_must_be_invertible(q7):
    with pytest.raises(PrecisionError):
        KElem(q7, 0, 7, 4)
    with pytest.raises(PrecisionError):
        KElem(q7, 0, 0, 4)


def test_parse_grammar(q7):
    assert q7.parse("42").val == 1          # 42 = 7 * 6
    assert q7.parse("-3").val == 0
    assert q7.parse("9/35").val == -1       # v(9) - v(35) = 0 - 1
    assert q7.parse("pi").val == 1
    assert q7.parse("pi^-2").val == -2
    x = q7.parse("pi^2*3/5")
    assert x.val == 2
    assert q7.parse(" pi^1 * 3 ").val == 1
    for bad in ("", "pj", "3/0", "[1,2]", "pi^", "x+1"):
        with pytest.raises(ValueError):
            q7.parse(bad)


def test_parse_f2_coefficients():
    lf = local_field(3, 2)
    u = lf.parse("[1,2]")
    assert u.val == 0
    assert lf.parse("[0,3]").val == 1       # 3x = pi * x
    w = lf.parse("pi^-1*[1,2]")
    assert w.val == -1
    with pytest.raises(ValueError):
        lf.parse("[1,2,1]")                 # too many coefficients
    with pytest.raises(PrecisionError):
        lf.from_coeffs([0, 0])


def test_fraction_embedding_consistency(q7):
    a = q7.from_rational(Fraction(9, 35))
    b = q7.parse("9") * q7.parse("35").inverse()
    assert a == b


def test_addition_and_cancellation(q7):
    s = k_add(q7.parse("3"), q7.parse("4"))
    assert s.val == 1                        # 3 + 4 = 7
    assert (s * q7.pi(-1)).reduce_mod_pi() == 1
    d = k_sub(q7.parse("10"), q7.parse("3"))
    assert d.val == 1
    with pytest.raises(PrecisionError):
        k_sub(q7.parse("3"), q7.parse("3"))


def test_one_minus(q7):
    x = k_one_minus(q7.parse("7"))           # 1 - 7 = -6 = 1 mod 7
    assert x.val == 0 and x.reduce_mod_pi() == 1
    y = k_one_minus(q7.parse("1/7"))         # (7 - 1)/7: valuation -1
    assert y.val == -1
    z = k_one_minus(q7.parse("3"))           # 1 - 3 = -2 = 5 mod 7
    assert z.val == 0 and z.reduce_mod_pi() == 5


def test_equality_respects_precision(q7):
    a = q7.parse("3", prec=4)
    b = q7.parse("3", prec=8)
    assert a == b
    c = q7.from_rational(3 + 7**3, prec=2)
    assert c == a                            # equal to the available digits

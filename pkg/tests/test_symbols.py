import json
import random

import pytest

from resforge.fields import mu_embed
from resforge.padic import local_field
from resforge.symbols import (crosscheck, delta_route_symbol,
                              power_residue_symbol, steinberg_check,
                              symbol_value_str, tame_symbol)


@pytest.fixture
def q7():
    return local_field(7)


def test_tame_symbol_examples(q7):
    assert tame_symbol(q7, q7.parse("7"), q7.parse("7")) == 6       # -1
    assert tame_symbol(q7, q7.parse("3"), q7.parse("5")) == 1       # units
    assert tame_symbol(q7, q7.parse("3"), q7.parse("7")) == 3


def test_power_residue_symbol_examples(q7):
    assert pow(6, 3, 7) == 6  # oracle for (7,7)_2
    assert power_residue_symbol(q7, q7.parse("7"), q7.parse("7"), 2).exp == 1
    assert power_residue_symbol(q7, q7.parse("5"), q7.parse("1"), 6).is_identity
    lf13 = local_field(13)
    s = power_residue_symbol(lf13, lf13.parse("2"), lf13.parse("13"), 3)
    assert mu_embed(lf13.field, s) == 3


def test_bimultiplicativity_and_antisymmetry():
    for p in (3, 5, 7, 13):
        lf = local_field(p)
        units = range(1, p)
        vals = (-2, -1, 0, 1, 2)
        elems = [lf.pi(v) * lf.from_rational(u) for v in vals for u in units]
        rng = random.Random(p)
        sample = rng.sample(elems, min(10, len(elems)))
        for n in [n for n in range(1, p) if (p - 1) % n == 0]:
            for a in sample:
                for b in sample:
                    sab = power_residue_symbol(lf, a, b, n)
                    sba = power_residue_symbol(lf, b, a, n)
                    assert (sab * sba).is_identity
                    for c in sample[:4]:
                        lhs = power_residue_symbol(lf, a * c, b, n)
                        rhs = sab * power_residue_symbol(lf, c, b, n)
                        assert lhs == rhs


def test_a_minus_a_is_one():
    for p in (3, 5, 7, 13):
        lf = local_field(p)
        rng = random.Random(p + 1)
        for n in [n for n in range(1, p) if (p - 1) % n == 0]:
            for _ in range(40):
                a = lf.pi(rng.randint(-3, 3)) * lf.from_rational(rng.randint(1, p - 1))
                assert power_residue_symbol(lf, a, -a, n).is_identity


def test_steinberg_examples(q7):
    assert steinberg_check(q7, q7.parse("-1"), 2)     # (-1, 2)
    for n in (1, 2, 3, 6):
        assert steinberg_check(q7, q7.parse("7"), n)
    assert steinberg_check(q7, q7.parse("1/7"), 2)


def test_steinberg_random():
    for p in (3, 5, 7, 13):
        lf = local_field(p)
        rng = random.Random(p + 2)
        for n in [n for n in range(1, p) if (p - 1) % n == 0]:
            count = 0
            while count < 100:
                v = rng.randint(-3, 3)
                u = rng.randint(1, p - 1)
                if v == 0 and u == 1:
                    continue
                a = lf.pi(v) * lf.from_rational(u)
                assert steinberg_check(lf, a, n)
                count += 1


def test_delta_route_equals_direct(q7):
    rng = random.Random(16)
    for n in (1, 2, 3, 6):
        for _ in range(30):
            a = q7.pi(rng.randint(-2, 2)) * q7.from_rational(rng.randint(1, 6))
            b = q7.pi(rng.randint(-2, 2)) * q7.from_rational(rng.randint(1, 6))
            assert (delta_route_symbol(q7, a, b, n).exp
                    == power_residue_symbol(q7, a, b, n).exp)


def test_crosscheck_report_fields(q7):
    rep = crosscheck(q7, q7.parse("7"), q7.parse("7"), 2)
    d = rep.to_dict()
    assert list(d) == ["p", "f", "n", "a", "b", "direct", "muset",
                       "extension", "agree", "micros"]
    assert d["p"] == 7 and d["f"] == 1 and d["n"] == 2
    assert d["direct"] == d["muset"] == d["extension"] == 1
    assert d["agree"] is True
    assert isinstance(d["micros"], int)
    parsed = json.loads(rep.to_json())
    assert parsed["agree"] is True


def test_crosscheck_units_trivial(q7):
    rep = crosscheck(q7, q7.parse("3"), q7.parse("5"), 2)
    assert rep.direct == rep.muset == rep.extension == 0 and rep.agree


def test_symbol_value_str(q7):
    from resforge.fields import MuScalar
    assert symbol_value_str(q7, MuScalar(2, 1)) == "6"
    lf9 = local_field(3, 2)
    assert "," in symbol_value_str(lf9, MuScalar(8, 1))

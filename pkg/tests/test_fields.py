import pytest

from resforge.errors import EnumerationBound
from resforge.fields import (MuScalar, extension_field, field_make, is_prime,
                             mu_dlog, mu_embed, norm_check,
                             power_residue_char, zolotarev_sign)


def brute_order(ctx, x):
    o, y = 1, x
    while y != 1:
        y = ctx.mul(y, x)
        o += 1
    return o


def inversion_sign(perm):
    n = len(perm)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def test_field_make_canonical_generators():
    assert field_make(7).g == 3   # least primitive root mod 7
    assert field_make(13).g == 2  # least primitive root mod 13
    c = field_make(2, 2)
    assert c.q == 4
    assert brute_order(c, c.g) == 3


def test_field_make_rejects_bad_input():
    with pytest.raises(ValueError):
        field_make(6)
    with pytest.raises(ValueError):
        field_make(7, 0)
    with pytest.raises(EnumerationBound):
        field_make(2, 40)


def test_generator_order_is_maximal():
    for p, f in [(3, 1), (5, 1), (7, 1), (2, 2), (3, 2), (5, 2), (3, 3), (7, 2)]:
        c = field_make(p, f)
        assert brute_order(c, c.g) == c.q - 1


def test_field_arithmetic_axioms_f2():
    c = field_make(3, 2)
    elts = list(c.elements())
    for a in elts:
        for b in elts:
            assert c.mul(a, b) == c.mul(b, a)
            assert c.add(a, b) == c.add(b, a)
        if a:
            assert c.mul(a, c.inv(a)) == 1


def test_mu_embed_dlog_roundtrip():
    c7 = field_make(7)
    assert mu_embed(c7, MuScalar(2, 1)) == 6  # -1 mod 7
    c13 = field_make(13)
    s = mu_dlog(c13, 3, 3)
    assert s.exp in (1, 2)
    assert mu_embed(c13, s) == 3
    assert pow(3, 3, 13) == 1  # oracle: 3 is a cube root of 1
    # n = 1 collapses everything
    assert mu_dlog(c7, 1, 1).exp == 0
    for p, f in [(7, 1), (13, 1), (3, 2)]:
        c = field_make(p, f)
        for n in [n for n in range(1, c.q) if (c.q - 1) % n == 0]:
            for e in range(n):
                assert mu_dlog(c, mu_embed(c, MuScalar(n, e)), n).exp == e


def test_mu_dlog_rejects_non_roots():
    c = field_make(7)
    with pytest.raises(ValueError):
        mu_dlog(c, 3, 2)  # 3 is not a square root of 1 mod 7
    with pytest.raises(ValueError):
        mu_dlog(c, 1, 4)  # 4 does not divide 6


def test_power_residue_char_examples():
    c7 = field_make(7)
    assert pow(3, 3, 7) == 6  # oracle: Euler criterion
    assert power_residue_char(c7, 3, 2).exp == 1
    c13 = field_make(13)
    assert pow(2, 4, 13) == 3  # oracle
    assert mu_embed(c13, power_residue_char(c13, 2, 3)) == 3
    assert power_residue_char(c7, 1, 2).is_identity
    with pytest.raises(ValueError):
        power_residue_char(c7, 0, 2)
    with pytest.raises(ValueError):
        power_residue_char(c7, 3, 4)


def test_power_residue_char_is_homomorphism():
    for p, f in [(3, 1), (5, 1), (7, 1), (13, 1), (2, 2), (3, 2), (5, 2), (7, 2)]:
        c = field_make(p, f)
        q = c.q
        if q > 49:
            continue
        for n in [n for n in range(1, q) if (q - 1) % n == 0]:
            for x in range(1, q):
                for y in range(1, q):
                    lhs = power_residue_char(c, c.mul(x, y), n)
                    rhs = power_residue_char(c, x, n) * power_residue_char(c, y, n)
                    assert lhs == rhs


def test_zolotarev_examples_and_oracle():
    c7 = field_make(7)
    perm3 = [c7.mul(3, x) for x in range(7)]
    assert inversion_sign(perm3) == -1  # independent oracle
    assert zolotarev_sign(c7, 3) == -1
    assert zolotarev_sign(c7, 2) == 1   # 2 = 3^2 is a square
    assert zolotarev_sign(c7, 1) == 1


def test_zolotarev_matches_euler_all_odd_q_to_49():
    for p, f in [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1),
                 (23, 1), (29, 1), (31, 1), (37, 1), (41, 1), (43, 1), (47, 1),
                 (3, 2), (5, 2), (7, 2), (3, 3)]:
        c = field_make(p, f)
        for a in range(1, c.q):
            sign = zolotarev_sign(c, a)
            perm = [c.mul(a, x) for x in range(c.q)]
            assert sign == inversion_sign(perm)
            euler = 1 if power_residue_char(c, a, 2).exp == 0 else -1
            assert sign == euler


def test_norm_check_examples():
    c2 = field_make(2)
    big, _ = extension_field(c2, 2)
    assert norm_check(c2, 2, big.g) == 1  # g * g^2 = g^3 = 1 in F_4
    c3 = field_make(3)
    big9, emb = extension_field(c3, 2)
    sqrt_m1 = [y for y in big9.elements() if big9.mul(y, y) == 2]
    assert sqrt_m1, "F_9 contains a square root of -1"
    for y in sqrt_m1:
        assert norm_check(c3, 2, y) == 1
    # scalars: norm of an embedded c is c^d
    for cval in range(1, 3):
        assert norm_check(c3, 2, emb[cval]) == c3.pow(cval, 2)


def test_norm_check_is_power_map():
    for p, f, d in [(2, 1, 2), (2, 1, 3), (2, 1, 6), (3, 1, 2), (3, 1, 3),
                    (5, 1, 2), (7, 1, 2), (2, 2, 2), (2, 2, 3), (2, 3, 2)]:
        base = field_make(p, f)
        q = base.q
        if q**d > 64:
            continue
        big, emb = extension_field(base, d)
        power = (q**d - 1) // (q - 1)
        for x in range(1, big.q):
            want = big.pow(x, power)
            got = norm_check(base, d, x)
            assert emb[got] == want, (p, f, d, x)


def test_mu_scalar_group_laws():
    a = MuScalar(6, 4)
    b = MuScalar(6, 5)
    assert (a * b).exp == 3
    assert (a * a.inverse()).is_identity
    assert (a**3).exp == 0
    with pytest.raises(ValueError):
        a * MuScalar(4, 1)

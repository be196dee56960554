import random

import pytest

from resforge.errors import PrecisionError
from resforge.lattices import (KMat, Lattice, lat_apply, lat_contains,
                               lat_contains_lattice, lat_intersect, lat_sum,
                               principal_lattice, quotient_struct, rel_dim,
                               smith_normal_form, standard_lattice)
from resforge.padic import local_field


@pytest.fixture
def q7():
    return local_field(7)


def rand_lattice(lf, rng, m, vmax=3, prec=60):
    while True:
        rows = [[(lf.pi(rng.randint(-vmax, vmax)) * lf.from_rational(rng.randint(1, lf.p - 1), prec))
                 if rng.random() < 0.8 else 0 for _ in range(m)] for _ in range(m)]
        try:
            return Lattice.from_rows(lf, rows, prec)
        except Exception:
            continue


def rand_integral(lf, rng, m, emax=2, prec=60):
    while True:
        rows = [[(lf.pi(rng.randint(0, emax)) * lf.from_rational(rng.randint(1, lf.p - 1), prec))
                 if rng.random() < 0.9 else 0 for _ in range(m)] for _ in range(m)]
        M = KMat.from_rows(lf, rows, prec)
        try:
            M.det_val()
            return M
        except PrecisionError:
            continue


def test_sum_and_intersection_of_standard(q7):
    O2 = standard_lattice(q7, 2)
    assert lat_sum(O2, O2) == O2
    assert lat_intersect(O2, O2) == O2


def test_nested_ideals_m1(q7):
    O = standard_lattice(q7, 1)
    sub = principal_lattice(q7, 1)
    assert lat_sum(O, sub) == O
    assert lat_intersect(O, sub) == sub


def test_diagonal_sum_intersection(q7):
    A = standard_lattice(q7, 2)
    B = Lattice.from_rows(q7, [["7", 0], [0, "1/7"]])
    S, I = lat_sum(A, B), lat_intersect(A, B)
    assert S == Lattice.from_rows(q7, [[1, 0], [0, "1/7"]])
    assert I == Lattice.from_rows(q7, [["7", 0], [0, 1]])


def test_containment_vectors(q7):
    A = standard_lattice(q7, 2)
    assert lat_contains(A, KMat.from_rows(q7, [["7"], ["3"]]))
    assert not lat_contains(A, KMat.from_rows(q7, [["1/7"], ["3"]]))


def test_quotient_examples(q7):
    Q = quotient_struct(standard_lattice(q7, 1), principal_lattice(q7, 1))
    assert Q.module.exps == (1,) and Q.module.size == 7
    Q2 = quotient_struct(standard_lattice(q7, 2),
                         Lattice.from_rows(q7, [["7", 0], [0, "49"]]))
    assert Q2.module.exps == (1, 2) and Q2.module.size == 7**3
    Q3 = quotient_struct(standard_lattice(q7, 2),
                         Lattice.from_rows(q7, [[7, 7], [0, 7]]))
    assert Q3.module.exps == (1, 1)   # all entries divisible by 7, det 49


def test_quotient_requires_containment(q7):
    with pytest.raises(ValueError):
        quotient_struct(principal_lattice(q7, 1), standard_lattice(q7, 1))


def test_projection_kernel_is_sublattice(q7):
    A = standard_lattice(q7, 2)
    B = Lattice.from_rows(q7, [[7, 7], [0, 7]])
    Q = quotient_struct(A, B)
    zero = Q.module.zero
    rng = random.Random(0)
    for _ in range(30):
        x = KMat.from_rows(q7, [[rng.randint(0, 48)] for _ in range(2)])
        in_B = lat_contains(B, x)
        assert (Q.proj(x) == zero) == in_B
    for t in Q.module.elements():
        assert Q.proj(Q.lift(t)) == t


def test_rel_dim_examples(q7):
    O = standard_lattice(q7, 1)
    sub = principal_lattice(q7, 1)
    assert rel_dim(O, sub, 2) == 3
    assert rel_dim(sub, O, 2) == -3
    assert rel_dim(O, O, 2) == 0
    assert rel_dim(O, sub, 1) == 6
    assert rel_dim(O, sub, 3) == 2


def test_lat_apply(q7):
    A = standard_lattice(q7, 2)
    assert lat_apply(KMat.identity(q7, 2), A) == A
    scaled = lat_apply(KMat.from_rows(q7, [["7", 0], [0, "7"]]), A)
    assert quotient_struct(A, scaled).module.exps == (1, 1)
    unimod = KMat.from_rows(q7, [[2, 3], [1, 4]])
    assert lat_apply(unimod, A) == A
    with pytest.raises(PrecisionError):
        lat_apply(KMat.from_rows(q7, [[1, 1], [1, 1]]), A)  # singular


def test_basis_independence_of_canonical_form(q7):
    # u * O = O for a unit u: the construction data cannot leak in
    assert Lattice.from_rows(q7, [["3"]]) == standard_lattice(q7, 1)
    L1 = Lattice.from_rows(q7, [[2, 3], [1, 4]])
    assert L1 == standard_lattice(q7, 2)
    # same lattice from two bases gives identical canonical matrices
    A1 = Lattice.from_rows(q7, [[7, 7], [0, 7]])
    A2 = Lattice.from_rows(q7, [[14, 7], [7, 7]])
    assert A1.mat.data == A2.mat.data and A1.mat.shift == A2.mat.shift


def test_random_containments_and_cardinality(q7):
    rng = random.Random(1)
    for _ in range(60):
        m = rng.randint(1, 3)
        A, B = rand_lattice(q7, rng, m), rand_lattice(q7, rng, m)
        S, I = lat_sum(A, B), lat_intersect(A, B)
        assert lat_contains_lattice(S, A) and lat_contains_lattice(S, B)
        assert lat_contains_lattice(A, I) and lat_contains_lattice(B, I)
        assert quotient_struct(S, A).module.size == quotient_struct(B, I).module.size
        assert rel_dim(A, B, 2) == -rel_dim(B, A, 2)


def test_commensurability_always_finite(q7):
    rng = random.Random(2)
    O = standard_lattice(q7, 2)
    for _ in range(40):
        f = rand_lattice(q7, rng, 2).mat
        fO = lat_apply(f, O) if False else Lattice(f)
        S = lat_sum(O, fO)
        q1 = quotient_struct(S, O)
        q2 = quotient_struct(S, fO)
        assert q1.module.size >= 1 and q2.module.size >= 1
        assert all(e <= 40 for e in q1.module.exps + q2.module.exps)


def test_dimension_additivity_mod_divisors(q7):
    rng = random.Random(3)
    q = 7
    for _ in range(60):
        m = rng.randint(1, 3)
        A = standard_lattice(q7, m)
        B = Lattice(A.mat @ rand_integral(q7, rng, m, 2))
        C = Lattice(B.mat @ rand_integral(q7, rng, m, 1))
        dy = sum(quotient_struct(A, C).module.exps)
        dx = sum(quotient_struct(B, C).module.exps)
        dz = sum(quotient_struct(A, B).module.exps)
        assert dx + dz == dy  # length additivity, giving dim additivity below
        for mm in (1, 2, 3, 6):
            dimX = (q**dx - 1) // mm
            dimY = (q**dy - 1) // mm
            dimZ = (q**dz - 1) // mm
            assert (dimX + dimZ - dimY) % mm == 0


def test_snf_pivot_order_and_exponents(q7):
    M = KMat.from_rows(q7, [[7, 7], [0, 7]])
    exps, _ = smith_normal_form(M)
    assert exps == [1, 1]
    M2 = KMat.from_rows(q7, [[1, 0], [0, 49]])
    exps2, _ = smith_normal_form(M2)
    assert exps2 == [0, 2]


def test_f2_backend_quotients():
    lf = local_field(3, 2)
    A = Lattice.from_rows(lf, [["pi^1*[1,2]", "[0,1]"], [0, "pi^2*[2,0]"]], 40)
    B = Lattice.from_rows(lf, [["pi^3", 0], [0, "pi^2"]], 40)
    S, I = lat_sum(A, B), lat_intersect(A, B)
    assert lat_contains_lattice(S, A) and lat_contains_lattice(A, I)
    Q = quotient_struct(S, I)
    assert Q.module.size == 9 ** sum(Q.module.exps)
    for t in list(Q.module.elements())[:50]:
        assert Q.proj(Q.lift(t)) == t


def test_precision_failure_is_loud():
    lf = local_field(7, default_precision=4)
    with pytest.raises(PrecisionError):
        KMat.from_rows(lf, [[1, 1], [1, lf.from_rational(1 + 7**3, 4)]], 4).inverse()


def test_lattice_json_roundtrip(q7):
    from resforge.lattices import lattice_from_json, lattice_to_json
    rng = random.Random(4)
    for _ in range(20):
        m = rng.randint(1, 3)
        A = rand_lattice(q7, rng, m)
        assert lattice_from_json(q7, lattice_to_json(A)) == A
    lf9 = local_field(3, 2)
    B = Lattice.from_rows(lf9, [["pi^1*[1,2]", "[0,1]"], [0, "pi^2*[2,0]"]], 40)
    assert lattice_from_json(lf9, lattice_to_json(B)) == B
    with pytest.raises(ValueError):
        lattice_from_json(q7, lattice_to_json(B))

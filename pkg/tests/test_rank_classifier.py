import random

import pytest

from ghzw import composition as ca
from ghzw import jordan as J
from ghzw import oracles as O
from ghzw import rank_classifier as RC
from ghzw.composition import AlgebraTag
from ghzw.exact import matmul, rand_invertible, rand_matrix, transpose
from ghzw.fts import rank_label


def test_two_qutrit_example():
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 0]]
    assert RC.classify_table2(RC.severi(J.from_matrix3(m))) == rank_label(2)


def test_octonion_chart_is_rank_one(rng):
    t = AlgebraTag.OCTC
    for _ in range(20):
        m = J.rank_one_chart(t, ca.random_elem(t, rng), ca.random_elem(t, rng))
        assert RC.classify_table2(RC.severi(m)) == rank_label(1)


def test_skew7_generic():
    m = [[0] * 7 for _ in range(7)]
    for i in (0, 2, 4):
        m[i][i + 1], m[i + 1][i] = 1, -1
    assert RC.classify_table2(RC.skew(m)) == rank_label(6)


def test_validation():
    with pytest.raises(ValueError):
        RC.skew([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        RC.skew([[0, 1, 0, 0, 0]] + [[0] * 5] * 4)
    with pytest.raises(ValueError):
        RC.matrix3x4([[1, 2, 3]] * 3)
    with pytest.raises(ValueError):
        RC.Table2State("severi", J.identity(AlgebraTag.DEG0), tag=AlgebraTag.DEG0)


def test_severi_split_vs_matrix_rank():
    rng = random.Random(21)
    for _ in range(500):
        m = J.random_rank(AlgebraTag.CPLUSC, rng.randint(1, 3), rng)
        assert RC.classify_table2(RC.severi(m)).rank == O.minor_rank(J.to_matrix3(m))


def test_severi_quaternion_vs_skew_rank():
    rng = random.Random(22)
    for _ in range(500):
        m = J.random_rank(AlgebraTag.M2C, rng.randint(1, 3), rng)
        s = RC.jordan_to_skew6(m)
        assert 2 * RC.classify_table2(RC.severi(m)).rank == O.minor_rank(s)
        assert RC.pfaffian(s) == J.cubic_norm(m)
        assert RC.skew6_to_jordan(s) == m


def test_skew_upper_round_trip(rng):
    vals = [rng.randint(-5, 5) for _ in range(21)]
    assert RC.skew_upper(RC.skew_from_upper(vals, 7)) == vals
    with pytest.raises(ValueError):
        RC.skew_from_upper(vals, 6)


def _congruence(g, m):
    return matmul(matmul(g, m), transpose(g))


def test_group_invariance(rng):
    for _ in range(100):
        a, b = rand_invertible(rng, 3), rand_invertible(rng, 3)
        m = J.random_rank(AlgebraTag.CPLUSC, rng.randint(1, 3), rng)
        before = RC.classify_table2(RC.severi(m))
        moved = J.from_matrix3(matmul(matmul(a, J.to_matrix3(m)), transpose(b)))
        assert RC.classify_table2(RC.severi(moved)) == before

        k = rng.randint(1, 3)
        x = matmul(rand_matrix(rng, 3, k), rand_matrix(rng, k, 4))
        c, d = rand_invertible(rng, 3), rand_invertible(rng, 4)
        assert RC.classify_table2(RC.matrix3x4(matmul(matmul(c, x), d))) == RC.classify_table2(RC.matrix3x4(x))

        for n in (5, 7):
            u = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(2)]
            s = [[u[0][i] * u[1][j] - u[0][j] * u[1][i] for j in range(n)] for i in range(n)]
            g = rand_invertible(rng, n)
            assert RC.classify_table2(RC.skew(_congruence(g, s))) == RC.classify_table2(RC.skew(s))

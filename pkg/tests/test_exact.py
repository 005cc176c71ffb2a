import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ghzw import oracles as O
from ghzw.exact import (Scalar, clear_denominators, det, div, exact, identity, inverse, matmul,
                        rand_matrix, rank, span_dim, transpose)


def test_rank_examples():
    assert rank(identity(3)) == 3
    assert rank([[1, 2, 3], [2, 4, 6]]) == 1
    assert rank([[0] * 4 for _ in range(4)]) == 0
    assert rank([]) == 0


def test_span_dim_examples():
    assert span_dim([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert span_dim([]) == 0
    with pytest.raises(ValueError):
        span_dim([[1, 2], [1, 2, 3]])


def test_scalar_field_axioms_exact():
    a, b = Scalar(Fraction(1, 3), 2), Scalar(-1, Fraction(5, 7))
    assert (a * b) / b == a
    assert a * b == b * a
    assert a + (-a) == 0
    assert a * a.conjugate() == exact(Fraction(1, 9) + 4)
    assert exact(Scalar(3, 0)) == 3 and isinstance(exact(Scalar(3, 0)), int)


def test_fraction_normalized():
    v = exact(Fraction(6, -4))
    assert v == Fraction(-3, 2) and v.denominator == 2


def test_float_input_is_decimal_exact():
    assert exact(0.1) == Fraction(1, 10)
    assert exact(0.25) == Fraction(1, 4)
    with pytest.raises(ValueError):
        exact(float("nan"))


def test_div_never_floats():
    assert div(1, 3) == Fraction(1, 3)
    assert isinstance(div(6, 3), int)
    with pytest.raises(ZeroDivisionError):
        div(1, 0)


def test_complex_rank_over_gaussian_rationals():
    i = Scalar(0, 1)
    # second row is i times the first: rank 1 over C (but rank 2 over R)
    assert rank([[1, i], [i, -1]]) == 1
    assert rank([[1, i], [1, -i]]) == 2


@given(st.integers(0, 10 ** 6))
def test_rank_transpose_scaling_permutation(seed):
    rng = random.Random(seed)
    r, c = rng.randint(1, 7), rng.randint(1, 7)
    m = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(c)] for _ in range(r)]
    k = rank(m)
    assert k == rank(transpose(m))
    scaled = [[v * Fraction(rng.choice([-3, -1, 2, 5]), 7) for v in row] for row in m]
    assert rank(scaled) == k
    rng.shuffle(scaled)
    assert rank(scaled) == k


def test_float_path_agrees_with_exact_path():
    rng = random.Random(7)
    for _ in range(1000):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        # build some rank deficiency half of the time
        if rng.random() < 0.5:
            k = rng.randint(1, min(r, c))
            a, b = rand_matrix(rng, r, k), rand_matrix(rng, k, c)
            m = [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(c)] for i in range(r)]
        else:
            m = rand_matrix(rng, r, c)
        assert rank(m, tol=1e-9) == rank(m)


def test_rank_matches_numpy_oracle(rng):
    for _ in range(200):
        m = rand_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        assert rank(m) == np.linalg.matrix_rank(np.array(m, dtype=float))


def test_det_and_inverse_against_leibniz(rng):
    for _ in range(50):
        n = rng.randint(1, 5)
        m = rand_matrix(rng, n, n)
        assert det(m) == O.leibniz_det(m)
        if det(m) != 0:
            assert matmul(m, inverse(m)) == identity(n)


def test_clear_denominators():
    v = clear_denominators([Fraction(1, 2), Fraction(2, 3), Scalar(0, Fraction(1, 4))])
    assert all(isinstance(x, (int, Scalar)) for x in v)
    assert v[0] * 2 == v[1] * Fraction(3, 4) * 2

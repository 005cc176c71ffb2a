import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ghzw import fts as F
from ghzw import jordan as J
from ghzw import oracles as O
from ghzw.composition import AlgebraTag
from ghzw.exact import Scalar, exact, rank

ALL_TAGS = list(AlgebraTag)
seeds = st.integers(0, 10 ** 6)


def wedge_sum(*triples):
    """Sum of basis wedges e_i ^ e_j ^ e_k (1-based, any order, sign by sorting)."""
    out = [0] * 20
    for t in triples:
        s = sorted(t)
        perm = [s.index(v) for v in t]
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
        out[F.WEDGE3_INDEX.index(tuple(s))] += sign
    return out


def test_dimensions():
    assert [2 * J.jordan_dim(t) + 1 for t in
            (AlgebraTag.DEG_MINUS1, AlgebraTag.DEG0, AlgebraTag.CC, AlgebraTag.CPLUSC,
             AlgebraTag.M2C, AlgebraTag.OCTC)] == [3, 7, 13, 19, 31, 55]


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_plucker_origin_and_quartic_examples(tag):
    x = F.plucker(tag, J.zero(tag))
    assert x.coords() == [1] + [0] * (F.fts_dim(tag) - 1)
    assert F.classify_fts(x) == F.SEPARABLE
    ghz = F.FTSVector(tag, 1, J.zero(tag), J.zero(tag), 1)
    assert F.quartic(ghz) == 1


def test_gradient_example_deg0():
    x = F.FTSVector(AlgebraTag.DEG0, 1, J.zero(AlgebraTag.DEG0), J.zero(AlgebraTag.DEG0), 1)
    assert F.gradient(x) == [2, 0, 0, 0, 0, 0, 0, 2]


@pytest.mark.parametrize("tag", ALL_TAGS)
@given(seed=seeds)
def test_separable_chart_invariants(tag, seed):
    rng = random.Random(seed)
    P = J.random_jordan(tag, rng)
    x = F.plucker(tag, P)
    assert F.quartic(x) == 0
    assert all(g == 0 for g in F.gradient(x))
    assert all(v == 0 for row in F.reduced_hessian(x) for v in row)
    # the raw Hessian does not vanish: on X it equals 2 w w^T (rank one)
    assert rank(F.hessian_eval(x)) <= 1


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_tangent_vectors_lie_on_the_hypersurface(tag, rng):
    for _ in range(10):
        P, Q = J.random_jordan(tag, rng), J.random_jordan(tag, rng)
        assert F.quartic(F.tangent_sample(tag, P, Q, rng.randint(1, 5), rng.randint(-5, 5))) == 0
        assert F.classify_fts(F.tangent_sample(tag, P, Q, 3, 0)) == F.SEPARABLE


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_quartic_homogeneity_and_symplectic_form(tag, rng):
    x = F.construct_class(tag, "ghz", rng)
    y = F.construct_class(tag, "w", rng)
    lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    assert F.quartic(x * lam) == lam ** 4 * F.quartic(x)
    assert F.omega(x, y) == -F.omega(y, x)
    assert F.omega(x, x) == 0


def test_gradient_matches_richardson_oracle(rng):
    tag = AlgebraTag.CC
    x = F.construct_class(tag, "ghz", rng)
    v = np.array([float(c) for c in x.coords()])
    num = O.richardson_gradient(lambda z: float(F.quartic(F.from_coords(tag, [exact(float(t)) for t in z]))), v, 1e-2)
    exact_grad = np.array([float(g) for g in F.gradient(x)])
    assert np.allclose(num, exact_grad, rtol=1e-6, atol=1e-3)


def test_three_qubit_normal_forms():
    for _, c, label in F.THREE_QUBIT_NORMAL_FORMS:
        assert str(F.classify_fts(F.embed_three_qubit(c))) == label


def test_three_qubit_normalized_amplitudes_are_projective():
    # (|000> + |111>)/sqrt2 is projectively |000> + |111>; exact scaling by any rational keeps the label
    c = [Fraction(1, 2), 0, 0, 0, 0, 0, 0, Fraction(1, 2)]
    assert F.classify_fts(F.embed_three_qubit(c)) == F.GHZ
    w = [0, Fraction(1, 3), Fraction(1, 3), 0, Fraction(1, 3), 0, 0, 0]
    x = F.embed_three_qubit(w)
    assert F.quartic(x) == 0 and any(F.gradient(x))


def test_three_qubit_dictionary_is_product_chart(rng):
    for _ in range(20):
        p = [rng.randint(-5, 5) for _ in range(3)]
        P = J.diag(AlgebraTag.DEG0, *p)
        amps = F.three_qubit_amplitudes(F.plucker(AlgebraTag.DEG0, P))
        # product of (1, p1) (x) (1, p2) (x) (1, p3)
        prod = [a * b * c for a in (1, p[0]) for b in (1, p[1]) for c in (1, p[2])]
        assert amps == prod
        assert O.hyperdeterminant(amps) == 0


def test_quartic_equals_hyperdeterminant():
    rng = random.Random(1)
    for _ in range(200):
        c = [rng.randint(-9, 9) for _ in range(8)]
        assert F.quartic(F.embed_three_qubit(c)) == O.hyperdeterminant(c)
        assert F.three_qubit_amplitudes(F.embed_three_qubit(c)) == c


def test_wedge_examples():
    cases = [
        (wedge_sum((1, 2, 3)), "Separable"),
        (wedge_sum((1, 2, 3), (4, 5, 6)), "GHZ"),
        (wedge_sum((4, 2, 3), (1, 5, 3), (1, 2, 6)), "W"),
        (wedge_sum((1, 2, 3), (1, 4, 5)), "Biseparable"),
    ]
    for c, label in cases:
        assert F.classify_fts(F.embed_wedge3(c)).kind == label


def test_all_basis_wedges_are_separable():
    for t in F.WEDGE3_INDEX:
        assert F.classify_fts(F.embed_wedge3(wedge_sum(t))) == F.SEPARABLE


def test_wedge_dictionary_matches_decomposability_oracle(rng):
    for _ in range(50):
        vs = [[rng.randint(-5, 5) for _ in range(6)] for _ in range(3)]
        c = O.wedge3(*vs)
        if not any(c):
            continue
        x = F.embed_wedge3(c)
        assert F.classify_fts(x) == F.SEPARABLE
        assert F.wedge3_coords(x) == c
    for _ in range(20):
        P = J.random_jordan(AlgebraTag.CPLUSC, rng)
        m = J.to_matrix3(P)
        rows = [[int(i == j) for j in range(3)] + m[i] for i in range(3)]
        assert F.embed_wedge3(O.wedge3(*rows)) == F.plucker(AlgebraTag.CPLUSC, P)


def test_symplectic_subspace_lift(rng):
    for _ in range(20):
        x = F.construct_class(AlgebraTag.CC, rng.choice(["w", "ghz", "biseparable"]), rng)
        y = F.lift_cc(x)
        assert F.project_cc(y) == x
        assert F.classify_fts(y).kind == F.classify_fts(x).kind
    with pytest.raises(ValueError):
        F.project_cc(F.embed_wedge3(wedge_sum((1, 2, 4))))


def test_gaussian_rational_coefficients(rng):
    i = Scalar(0, 1)
    tag = AlgebraTag.M2C
    for label in ("separable", "biseparable", "w", "ghz"):
        x = F.sample_class(tag, label, rng)
        z = x * Scalar(Fraction(2, 3), Fraction(-1, 5))
        assert F.classify_fts(z).kind == F.classify_fts(x).kind
    ghz = F.FTSVector(AlgebraTag.DEG0, i, J.zero(AlgebraTag.DEG0), J.zero(AlgebraTag.DEG0), i)
    assert F.classify_fts(ghz) == F.GHZ


def test_null_and_label_parsing():
    assert F.classify_fts(F.from_coords(AlgebraTag.CC, [0] * 14)) == F.NULL
    assert F.parse_label("W") == F.W
    assert str(F.parse_label("biseparable(A|BC)")) == "Biseparable(A|BC)"
    assert F.parse_label("rank(2)") == F.rank_label(2)
    with pytest.raises(ValueError):
        F.parse_label("entangled")


def test_sampler_contract(rng):
    with pytest.raises(ValueError):
        F.sample_class(AlgebraTag.DEG_MINUS1, "biseparable", rng)
    with pytest.raises(ValueError):
        F.sample_class(AlgebraTag.CC, "null", rng)
    x = F.sample_class(AlgebraTag.CC, "ghz", rng)
    assert F.quartic(x) != 0
    x = F.sample_class(AlgebraTag.M2C, "separable", rng)
    assert not any(v for row in F.reduced_hessian(x) for v in row)
    x = F.sample_class(AlgebraTag.M2C, "biseparable", rng)
    assert not any(F.gradient(x)) and any(v for row in F.reduced_hessian(x) for v in row)


def test_deg0_biseparable_samples_cover_all_partitions(rng):
    parts = {str(F.classify_fts(F.sample_class(AlgebraTag.DEG0, "biseparable", rng))) for _ in range(60)}
    assert parts == {"Biseparable(A|BC)", "Biseparable(B|AC)", "Biseparable(C|AB)"}


def test_bosonic_qubits_have_three_orbits(rng):
    labels = set()
    for _ in range(300):
        c = [rng.randint(-3, 3) for _ in range(4)]
        labels.add(F.classify_fts(F.from_coords(AlgebraTag.DEG_MINUS1, c)).kind)
    assert labels <= {"Null", "Separable", "W", "GHZ"}
    assert {"Separable", "W", "GHZ"} <= labels


@pytest.mark.parametrize("tag", ALL_TAGS)
def test_raw_recipes_mostly_hit(tag, rng):
    labels = [l for l in ("separable", "biseparable", "w", "ghz")
              if not (tag is AlgebraTag.DEG_MINUS1 and l == "biseparable")]
    for label in labels:
        hits = sum(F.classify_fts(F.construct_class(tag, label, rng)).same_kind(label) for _ in range(40))
        assert hits >= 28, (tag, label, hits)

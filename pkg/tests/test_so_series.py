import random

import pytest

from ghzw import fts as F
from ghzw import oracles as O
from ghzw import so_series as SO
from ghzw.exact import rank


def e(m, k, c=1):
    v = [0] * m
    v[k] = c
    return tuple(v)


def test_split_form_nondegenerate():
    for m in range(3, 13):
        assert rank(SO.split_form(m)) == m


def test_examples():
    m = 7
    assert SO.gram_quartic(SO.QubitQuditState(e(m, 0), e(m, 0, 0))) == 0
    ghz = SO.QubitQuditState(e(m, 0), e(m, 1))
    assert SO.gram_quartic(ghz) == -1 and SO.classify_so(ghz) == F.GHZ
    assert SO.classify_so(SO.QubitQuditState(e(m, 0), e(m, 0, 0))) == F.SEPARABLE
    assert SO.classify_so(SO.QubitQuditState(e(m, 6), e(m, 0, 0))) == F.BISEPARABLE
    # totally isotropic plane: Gram matrix zero
    assert SO.classify_so(SO.QubitQuditState(e(m, 0), e(m, 2))) == F.BISEPARABLE
    # isotropic u, anisotropic v orthogonal to u: Gram rank one
    w = SO.QubitQuditState(e(m, 0), tuple(a + b for a, b in zip(e(m, 2), e(m, 3))))
    assert SO.classify_so(w) == F.W
    assert SO.classify_so(SO.QubitQuditState(e(m, 0, 0), e(m, 0, 0))) == F.NULL


def test_small_m_rejected():
    with pytest.raises(ValueError):
        SO.QubitQuditState((1, 0), (0, 1))
    with pytest.raises(ValueError):
        SO.QubitQuditState.from_coords([1, 2, 3], 3)


@pytest.mark.parametrize("m", [3, 5, 7, 9, 12])
def test_invariance(m, rng):
    for label in ("separable", "biseparable", "w", "ghz"):
        for _ in range(25):
            s = SO.sample_class(m, label, rng)
            g, h = O.random_sl2(rng), SO.random_orthogonal(rng, m)
            t = SO.act(s, g, h)
            assert SO.classify_so(t) == SO.classify_so(s)
            detg = g[0][0] * g[1][1] - g[0][1] * g[1][0]
            assert SO.gram_quartic(t) == detg ** 2 * SO.gram_quartic(s)
            assert SO.gram_quartic(SO.act(s, None, h)) == SO.gram_quartic(s)


@pytest.mark.parametrize("m", [3, 4, 5, 7, 9, 12])
def test_orthogonal_maps_preserve_form(m, rng):
    h = SO.random_orthogonal(rng, m)
    q = SO.split_form(m)
    ht = [list(r) for r in zip(*h)]
    lhs = [[sum(ht[i][k] * q[k][l] * h[l][j] for k in range(m) for l in range(m)) for j in range(m)]
           for i in range(m)]
    assert lhs == q


def test_isotropic_chart():
    rng = random.Random(4)
    for m in (3, 4, 8):
        w = SO.random_isotropic(rng, m)
        assert SO.qform(w, w) == 0


def test_three_qubit_coincidence():
    rng = random.Random(9)
    for _ in range(200):
        c = [rng.randint(-3, 3) for _ in range(8)]
        s = SO.from_three_qubit(c)
        a = SO.classify_so(s)
        b = F.classify_fts(F.embed_three_qubit(c))
        assert a.unmarked == b.unmarked
        assert SO.gram_quartic(s) == -O.hyperdeterminant(c)
    for _, c, label in F.THREE_QUBIT_NORMAL_FORMS:
        assert SO.classify_so(SO.from_three_qubit(c)).kind == F.parse_label(label).kind

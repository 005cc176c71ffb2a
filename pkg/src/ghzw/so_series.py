"""One qubit and one isotropic (m-1)-dit: C^2 (x) C^m under SL2 x SO(m).

A state is ``|0>|u> + |1>|v>``. The quadratic form on C^m is split: the
coordinate pairs (0, 1), (2, 3), ... are hyperbolic, and for odd ``m`` the
last coordinate carries a diagonal ``1``. Isotropic vectors then have
rational parametrizations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exact import div, exact, rank, rand_nonzero, rand_vector
from .fts import BISEPARABLE, GHZ, NULL, SEPARABLE, W, StrataLabel, parse_label


def split_form(m: int) -> list[list[int]]:
    """Gram matrix of the split quadratic form on C^m."""
    g = [[0] * m for _ in range(m)]
    for k in range(m // 2):
        g[2 * k][2 * k + 1] = g[2 * k + 1][2 * k] = 1
    if m % 2:
        g[m - 1][m - 1] = 1
    return g


def qform(u, v) -> object:
    """Bilinear form ``Q(u, v)`` for the split form of length ``len(u)``."""
    m = len(u)
    out = 0
    for k in range(m // 2):
        out = out + u[2 * k] * v[2 * k + 1] + u[2 * k + 1] * v[2 * k]
    if m % 2:
        out = out + u[m - 1] * v[m - 1]
    return out


@dataclass(frozen=True)
class QubitQuditState:
    u: tuple
    v: tuple

    def __post_init__(self):
        if len(self.u) != len(self.v):
            raise ValueError("u and v must have the same length")
        if len(self.u) < 3:
            raise ValueError("the SO(m) series needs m >= 3")

    @property
    def m(self) -> int:
        return len(self.u)

    @classmethod
    def from_coords(cls, values, m: int) -> "QubitQuditState":
        values = list(values)
        if len(values) != 2 * m:
            raise ValueError(f"C^2 x C^{m} state needs {2 * m} coordinates, got {len(values)}")
        return cls(tuple(values[:m]), tuple(values[m:]))

    def coords(self) -> list:
        return list(self.u) + list(self.v)

    def gram(self) -> list[list]:
        return [[qform(self.u, self.u), qform(self.u, self.v)],
                [qform(self.v, self.u), qform(self.v, self.v)]]


def gram_quartic(s: QubitQuditState):
    """Determinant of the 2x2 Gram matrix: the invariant cutting out W."""
    g = s.gram()
    return exact(g[0][0] * g[1][1] - g[0][1] * g[1][0])


def classify_so(s: QubitQuditState) -> StrataLabel:
    if s.m < 3:
        raise ValueError("the SO(m) series needs m >= 3")
    r = rank([s.u, s.v])
    if r == 0:
        return NULL
    if r == 1:
        w = s.u if any(c != 0 for c in s.u) else s.v
        return SEPARABLE if qform(w, w) == 0 else BISEPARABLE
    g = s.gram()
    if gram_quartic(s) != 0:
        return GHZ
    if any(c != 0 for row in g for c in row):
        return W
    return BISEPARABLE


def act(s: QubitQuditState, g=None, h=None) -> QubitQuditState:
    """Apply ``g`` (2x2, qubit side) and ``h`` (m x m, qudit side)."""
    u, v = list(s.u), list(s.v)
    if h is not None:
        u = [sum((h[i][j] * u[j] for j in range(s.m)), 0) for i in range(s.m)]
        v = [sum((h[i][j] * v[j] for j in range(s.m)), 0) for i in range(s.m)]
    if g is not None:
        u, v = ([g[0][0] * a + g[0][1] * b for a, b in zip(u, v)],
                [g[1][0] * a + g[1][1] * b for a, b in zip(u, v)])
    return QubitQuditState(tuple(exact(c) for c in u), tuple(exact(c) for c in v))


def isotropic_point(params) -> list:
    """Chart of the quadric: ``e0 - (Q(p, p)/2) e1 + p`` with ``p`` on coordinates 2.. ."""
    params = list(params)
    p = [0, 0] + params
    return [1, -div(qform(p, p), 2)] + params


def random_isotropic(rng: random.Random, m: int) -> list:
    return isotropic_point(rand_vector(rng, m - 2))


def reflection(v) -> list[list]:
    """Q-orthogonal reflection ``x -> x - 2 Q(x, v)/Q(v, v) v`` in an anisotropic ``v``."""
    m = len(v)
    qv = qform(v, v)
    if qv == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    gv = [sum(g * c for g, c in zip(row, v)) for row in split_form(m)]
    return [[int(i == j) - div(2 * v[i] * gv[j], qv) for j in range(m)] for i in range(m)]


def hyperbolic_scaling(m: int, pair: int, lam) -> list[list]:
    """Scale the hyperbolic pair ``(2k, 2k+1)`` by ``(lam, 1/lam)``."""
    h = [[int(i == j) for j in range(m)] for i in range(m)]
    h[2 * pair][2 * pair] = lam
    h[2 * pair + 1][2 * pair + 1] = div(1, lam)
    return h


def random_orthogonal(rng: random.Random, m: int, steps: int = 4) -> list[list]:
    """Product of random reflections and hyperbolic scalings (exact, Q-orthogonal)."""
    h = [[int(i == j) for j in range(m)] for i in range(m)]
    for _ in range(steps):
        v = rand_vector(rng, m)
        while qform(v, v) == 0:
            v = rand_vector(rng, m)
        h = _mm(reflection(v), h)
        h = _mm(hyperbolic_scaling(m, rng.randrange(m // 2), rand_nonzero(rng)), h)
    return h


def _mm(a, b):
    n = len(a)
    return [[exact(sum((a[i][k] * b[k][j] for k in range(n)), 0)) for j in range(n)] for i in range(n)]


def construct_class(m: int, label, rng: random.Random) -> QubitQuditState:
    """Unverified draw from a stratum of C^2 x C^m."""
    label = parse_label(label)
    a, b = rand_nonzero(rng), rng.randint(-9, 9)
    h = random_orthogonal(rng, m)
    if label.kind == "Separable":
        w = random_isotropic(rng, m)
        s = QubitQuditState(tuple(a * c for c in w), tuple(b * c for c in w))
    elif label.kind == "Biseparable":
        if m < 4 or rng.random() < 0.5:
            w = rand_vector(rng, m)
            s = QubitQuditState(tuple(a * c for c in w), tuple(b * c for c in w))
        else:
            # totally isotropic plane spanned by e0 and e2 (needs m >= 4)
            u = [0] * m
            v = [0] * m
            u[0], v[2] = 1, 1
            s = QubitQuditState(tuple(u), tuple(v))
    elif label.kind == "W":
        # isotropic u, anisotropic v orthogonal to it: Gram rank 1
        u = [0] * m
        u[0] = 1
        v = [0] * m
        v[2] = 1
        if m >= 4:
            v[3] = rand_nonzero(rng)
        s = QubitQuditState(tuple(u), tuple(v))
    elif label.kind == "GHZ":
        s = QubitQuditState(tuple(rand_vector(rng, m)), tuple(rand_vector(rng, m)))
    else:
        raise ValueError(f"cannot sample stratum {label}")
    g = [[rand_nonzero(rng), rng.randint(-9, 9)], [rng.randint(-9, 9), rand_nonzero(rng)]]
    while g[0][0] * g[1][1] - g[0][1] * g[1][0] == 0:
        g[1][1] = rand_nonzero(rng)
    return act(s, g, h)


def sample_class(m: int, label, rng: random.Random, max_tries: int = 50) -> QubitQuditState:
    label = parse_label(label)
    for _ in range(max_tries):
        s = construct_class(m, label, rng)
        if classify_so(s).kind == label.kind:
            return s
    raise RuntimeError(f"no {label} sample for m={m}")


# C^2 x C^2 x C^2 = C^2 x C^4 with C^4 = 2x2 matrices w[b][c] and Q = 2 det.
def from_three_qubit(c) -> QubitQuditState:
    """Amplitudes ``c_abc`` (binary order) to ``u = c_0.., v = c_1..`` in split coordinates."""
    def slice_(a):
        w00, w01, w10, w11 = (c[4 * a + k] for k in range(4))
        return (w00, w11, w01, -w10)
    return QubitQuditState(slice_(0), slice_(1))

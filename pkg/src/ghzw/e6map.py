"""The quartic rational map P^21 -> P^77 taking G(3,6) to the E6 adjoint variety.

Coordinates on P^21 are ``(x0, x_1..x_20, x21)`` with the middle block in
lexicographic Plucker order on Lambda^3 C^6. The map is assembled from the
quartic invariant ``I4``, its 20 gradient cubics ``I3`` and a basis of the
35 quadrics ``I2`` cutting out G(3,6):

    [x0^4, x0^3 x21, x0^3 x_i, x0^2 I2, x0^2 x21 x_i - x0 I3_i, x0^2 x21^2 - I4]
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import fts as F
from .composition import AlgebraTag
from .exact import exact, rank, rand_vector
from .poly import Poly, evaluate_compiled, variables

WEDGE_DIM = 20
HESSIAN_SPAN = 35
ADJOINT_DIM = 78
DOMAIN_DIM = 22

_QUAD_MONOMIALS = list(combinations_with_replacement(range(WEDGE_DIM), 2))


@dataclass(frozen=True)
class AdjointPoint:
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != ADJOINT_DIM:
            raise ValueError(f"adjoint point needs {ADJOINT_DIM} coordinates")
        if all(c == 0 for c in self.coords):
            raise ValueError("adjoint point cannot be zero")


class IndeterminacyError(ValueError):
    pass


def _omega_wedge(xs):
    """``omega(x, e_j)`` in wedge coordinates, as linear polynomials."""
    basis = [F.embed_wedge3([int(i == j) for i in range(WEDGE_DIM)]) for j in range(WEDGE_DIM)]
    w = [[F.omega(basis[i], basis[j]) for j in range(WEDGE_DIM)] for i in range(WEDGE_DIM)]
    return [sum((xs[i] * w[i][j] for i in range(WEDGE_DIM) if w[i][j] != 0), Poly())
            for j in range(WEDGE_DIM)]


@functools.lru_cache(maxsize=None)
def wedge_invariants():
    """``(I4, [I3_i], reduced Hessian quadrics by (i, j))`` on Lambda^3 C^6."""
    xs = variables(WEDGE_DIM)
    q = F.quartic(F.embed_wedge3(xs))
    grad = [q.diff(i) for i in range(WEDGE_DIM)]
    wx = _omega_wedge(xs)
    reduced = {}
    for i in range(WEDGE_DIM):
        for j in range(i, WEDGE_DIM):
            reduced[(i, j)] = grad[i].diff(j) - 2 * wx[i] * wx[j]
    return q, grad, reduced


def quadric_vector(p: Poly) -> list:
    """Coefficients of a quadric on the 210 monomials ``x_i x_j`` (``i <= j``)."""
    return [p.terms.get(m, 0) for m in _QUAD_MONOMIALS]


@functools.lru_cache(maxsize=None)
def hessian_basis() -> tuple:
    """First independent reduced-Hessian quadrics in lexicographic ``(i, j)`` order.

    The 210 entries of ``H(x) - 2 (omega x)(omega x)^T`` span the 35 quadrics of
    the Plucker ideal of G(3,6).
    """
    _, _, reduced = wedge_invariants()
    chosen, vectors = [], []
    for key in sorted(reduced):
        v = quadric_vector(reduced[key])
        if not any(v):
            continue
        if rank(vectors + [v]) > len(vectors):
            vectors.append(v)
            chosen.append(reduced[key])
    if len(chosen) != HESSIAN_SPAN:
        raise AssertionError(f"Hessian quadric span has dimension {len(chosen)}, expected {HESSIAN_SPAN}")
    return tuple(chosen)


def hessian_span_dim() -> int:
    _, _, reduced = wedge_invariants()
    return rank([quadric_vector(p) for p in reduced.values()])


@functools.lru_cache(maxsize=None)
def _compiled():
    q, grad, _ = wedge_invariants()
    return (q.compile(), [g.compile() for g in grad], [b.compile() for b in hessian_basis()])


def e6_map(x0, x, x21) -> AdjointPoint:
    """Image of ``[x0 : x : x21]``; raises :class:`IndeterminacyError` on the base locus."""
    x = [exact(c) for c in x]
    if len(x) != WEDGE_DIM:
        raise ValueError(f"expected {WEDGE_DIM} wedge coordinates, got {len(x)}")
    x0, x21 = exact(x0), exact(x21)
    qc, gc, hc = _compiled()
    q = evaluate_compiled(qc, x)
    out = [x0 ** 4, x0 ** 3 * x21]
    out += [x0 ** 3 * c for c in x]
    out += [x0 ** 2 * evaluate_compiled(h, x) for h in hc]
    out += [x0 ** 2 * x21 * c - x0 * evaluate_compiled(g, x) for c, g in zip(x, gc)]
    out.append(x0 ** 2 * x21 ** 2 - q)
    out = tuple(exact(c) for c in out)
    if all(c == 0 for c in out):
        raise IndeterminacyError("indeterminacy point: all 78 coordinates vanish")
    return AdjointPoint(out)


@functools.lru_cache(maxsize=None)
def map_polys() -> tuple:
    """The 78 coordinates of the map as polynomials in the 22 homogeneous inputs."""
    ys = variables(DOMAIN_DIM)
    x0, x, x21 = ys[0], ys[1:21], ys[21]
    q, grad, _ = wedge_invariants()
    images = {i: x[i] for i in range(WEDGE_DIM)}
    qx = q.substitute(images)
    out = [x0 * x0 * x0 * x0, x0 * x0 * x0 * x21]
    out += [x0 * x0 * x0 * c for c in x]
    out += [x0 * x0 * h.substitute(images) for h in hessian_basis()]
    out += [x0 * x0 * x21 * c - x0 * g.substitute(images) for c, g in zip(x, grad)]
    out.append(x0 * x0 * x21 * x21 - qx)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _jacobian_compiled():
    return [[p.diff(j).compile() for j in range(DOMAIN_DIM)] for p in map_polys()]


def jacobian(y) -> list[list]:
    y = [exact(c) for c in y]
    return [[exact(evaluate_compiled(d, y)) for d in row] for row in _jacobian_compiled()]


def random_input(rng: random.Random):
    y = rand_vector(rng, DOMAIN_DIM)
    while y[0] == 0:
        y[0] = rng.randint(-9, 9)
    return y[0], y[1:21], y[21]


def image_span_dim(points: int = 200, seed=0) -> int:
    rng = random.Random(f"{seed}:e6-span")
    rows = []
    for _ in range(points):
        x0, x, x21 = random_input(rng)
        rows.append(list(e6_map(x0, x, x21).coords))
    return rank(rows)


def image_dim(trials: int = 3, seed=0) -> int:
    """Generic rank of the map's Jacobian minus one (projective image dimension)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    best = -1
    for trial in range(trials):
        rng = random.Random(f"{seed}:e6-image:{trial}")
        x0, x, x21 = random_input(rng)
        best = max(best, rank(jacobian([x0] + list(x) + [x21])) - 1)
    return best

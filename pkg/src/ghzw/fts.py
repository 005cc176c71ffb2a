"""Freudenthal triple systems C + J3(A) + J3(A) + C and their SLOCC strata.

Coordinates of an :class:`FTSVector` are ``alpha``, the coordinates of
``A``, the coordinates of ``B``, then ``beta`` (see :func:`jordan.coords`).

The quartic invariant is::

    q = (alpha*beta - T(A, B))^2 - 4 T(A#, B#) + 4 alpha N(B) + 4 beta N(A)

and the invariant symplectic form is::

    omega(x, y) = alpha*beta' - beta*alpha' - T(A, B') + T(B, A')

Strata are cut out by exact vanishing:

* GHZ          q != 0
* W            q == 0, grad q != 0
* Biseparable  grad q == 0, reduced Hessian != 0
* Separable    reduced Hessian == 0, x != 0

where the reduced Hessian is ``Hess q(x) - 2 (omega x)(omega x)^T``. The raw
Hessian never vanishes on separable points (it has rank one there), which is
why the rank-one part is removed.
"""

from __future__ import annotations

import functools
import logging
import random
from dataclasses import dataclass
from itertools import combinations

from . import jordan as J
from .composition import AlgebraTag, CompElem
from .exact import clear_denominators, exact, rand_nonzero
from .jordan import JordanMat
from .poly import Poly, evaluate_compiled, variables

log = logging.getLogger(__name__)

MAX_RESAMPLES = 50


@dataclass(frozen=True)
class FTSVector:
    tag: AlgebraTag
    alpha: object
    A: JordanMat
    B: JordanMat
    beta: object

    def __post_init__(self):
        if self.A.tag is not self.tag or self.B.tag is not self.tag:
            raise ValueError("Jordan components must carry the vector's algebra tag")

    def __add__(self, other: "FTSVector") -> "FTSVector":
        _check(self, other)
        return FTSVector(self.tag, self.alpha + other.alpha, self.A + other.A,
                         self.B + other.B, self.beta + other.beta)

    def __sub__(self, other: "FTSVector") -> "FTSVector":
        return self + (-other)

    def __neg__(self) -> "FTSVector":
        return self * -1

    def __mul__(self, s) -> "FTSVector":
        if isinstance(s, FTSVector):
            return NotImplemented
        return FTSVector(self.tag, self.alpha * s, self.A * s, self.B * s, self.beta * s)

    __rmul__ = __mul__

    def coords(self) -> list:
        return [self.alpha] + J.coords(self.A) + J.coords(self.B) + [self.beta]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords())


def _check(x: FTSVector, y: FTSVector) -> None:
    if x.tag is not y.tag:
        raise ValueError(f"algebra tag mismatch: {x.tag.value} vs {y.tag.value}")


def fts_dim(tag: AlgebraTag) -> int:
    """Number of affine coordinates, ``2 dim J3(A) + 2``."""
    return 2 * J.jordan_dim(tag) + 2


def from_coords(tag: AlgebraTag, values) -> FTSVector:
    values = list(values)
    n = fts_dim(tag)
    if len(values) != n:
        raise ValueError(f"FTS({tag.value}) needs {n} coordinates, got {len(values)}")
    d = J.jordan_dim(tag)
    return FTSVector(tag, values[0], J.from_coords(tag, values[1:1 + d]),
                     J.from_coords(tag, values[1 + d:1 + 2 * d]), values[-1])


def basis_vector(tag: AlgebraTag, i: int) -> FTSVector:
    return from_coords(tag, [int(k == i) for k in range(fts_dim(tag))])


def plucker(tag: AlgebraTag, P: JordanMat) -> FTSVector:
    """``(1, P, P#, N(P))``: the chart of the separable variety."""
    if P.tag is not tag:
        raise ValueError("P has the wrong algebra tag")
    return FTSVector(tag, 1, P, J.sharp(P), J.cubic_norm(P))


def plucker_differential(P: JordanMat, Q: JordanMat) -> FTSVector:
    """Derivative of :func:`plucker` at ``P`` in direction ``Q``."""
    return FTSVector(P.tag, 0, Q, J.cross(P, Q), J.trace_pair(J.sharp(P), Q))


def quartic(x: FTSVector):
    t = x.alpha * x.beta - J.trace_pair(x.A, x.B)
    return (t * t - 4 * J.trace_pair(J.sharp(x.A), J.sharp(x.B))
            + 4 * x.alpha * J.cubic_norm(x.B) + 4 * x.beta * J.cubic_norm(x.A))


def omega(x: FTSVector, y: FTSVector):
    _check(x, y)
    return (x.alpha * y.beta - x.beta * y.alpha
            - J.trace_pair(x.A, y.B) + J.trace_pair(x.B, y.A))


class _Symbolic:
    """Quartic, gradient and Hessians of one tag as compiled polynomials."""

    def __init__(self, tag: AlgebraTag):
        n = fts_dim(tag)
        xs = variables(n)
        self.n = n
        self.q = quartic(from_coords(tag, xs))
        self.grad = [self.q.diff(i) for i in range(n)]
        self.hess = {(i, j): self.grad[i].diff(j) for i in range(n) for j in range(i, n)}
        self.hess = {k: p for k, p in self.hess.items() if p}
        basis = [basis_vector(tag, j) for j in range(n)]
        # omega(e_i, e_j); sparse: each row has one or two entries
        self.omega = [[omega(basis[i], basis[j]) for j in range(n)] for i in range(n)]
        self.omega_rows = [[(j, w) for j, w in enumerate(row) if w != 0] for row in self.omega]
        self.q_c = self.q.compile()
        self.grad_c = [g.compile() for g in self.grad]
        self.hess_c = {k: p.compile() for k, p in self.hess.items()}
        self.omega_x = [sum((xs[i] * self.omega[i][j] for i in range(n) if self.omega[i][j] != 0),
                            Poly()) for j in range(n)]
        self._reduced = None

    def reduced_polys(self) -> dict:
        """Quadrics ``H_ij - 2 (omega x)_i (omega x)_j`` for ``i <= j``."""
        if self._reduced is None:
            out = {}
            for i in range(self.n):
                for j in range(i, self.n):
                    p = self.hess.get((i, j), Poly()) - 2 * self.omega_x[i] * self.omega_x[j]
                    if p:
                        out[(i, j)] = p
            self._reduced = out
        return self._reduced


@functools.lru_cache(maxsize=None)
def symbolic(tag: AlgebraTag) -> _Symbolic:
    return _Symbolic(tag)


def quartic_poly(tag: AlgebraTag) -> Poly:
    return symbolic(tag).q


def gradient(x: FTSVector) -> list:
    """All first partials of the quartic at ``x`` (exact)."""
    s = symbolic(x.tag)
    v = [exact(c) for c in x.coords()]
    return [exact(evaluate_compiled(g, v)) for g in s.grad_c]


def hessian_eval(x: FTSVector) -> list[list]:
    """Matrix of second partials of the quartic at ``x``."""
    s = symbolic(x.tag)
    v = [exact(c) for c in x.coords()]
    h = [[0] * s.n for _ in range(s.n)]
    for (i, j), p in s.hess_c.items():
        h[i][j] = h[j][i] = exact(evaluate_compiled(p, v))
    return h


def omega_covector(x: FTSVector) -> list:
    """``omega(x, e_j)`` for every coordinate ``j``."""
    s = symbolic(x.tag)
    v = [exact(c) for c in x.coords()]
    out = [0] * s.n
    for i, row in enumerate(s.omega_rows):
        if v[i] != 0:
            for j, w in row:
                out[j] = out[j] + v[i] * w
    return [exact(c) for c in out]


def reduced_hessian(x: FTSVector) -> list[list]:
    """``hessian_eval(x) - 2 w w^T`` with ``w = omega_covector(x)``.

    Vanishes exactly on the cone over the separable variety.
    """
    h = hessian_eval(x)
    w = omega_covector(x)
    n = len(w)
    return [[exact(h[i][j] - 2 * w[i] * w[j]) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class StrataLabel:
    """Classifier output.

    ``kind`` is one of ``Null``, ``Separable``, ``Biseparable``, ``W``, ``GHZ``
    or ``Rank``. Biseparable labels may carry a three-qubit partition such as
    ``"A|BC"``; Rank labels carry ``rank``.
    """

    kind: str
    part: str | None = None
    rank: int | None = None

    def __str__(self):
        if self.kind == "Biseparable" and self.part:
            return f"Biseparable({self.part})"
        if self.kind == "Rank":
            return f"Rank({self.rank})"
        return self.kind

    def same_kind(self, other: "StrataLabel | str") -> bool:
        return self.kind == parse_label(other).kind

    @property
    def unmarked(self) -> "StrataLabel":
        return StrataLabel(self.kind, None, self.rank)


NULL = StrataLabel("Null")
SEPARABLE = StrataLabel("Separable")
BISEPARABLE = StrataLabel("Biseparable")
W = StrataLabel("W")
GHZ = StrataLabel("GHZ")
GENUINE_ORDER = (SEPARABLE, BISEPARABLE, W, GHZ)


def rank_label(k: int) -> StrataLabel:
    return StrataLabel("Rank", rank=k)


def parse_label(label: "StrataLabel | str") -> StrataLabel:
    if isinstance(label, StrataLabel):
        return label
    key = label.strip().lower()
    names = {"null": NULL, "separable": SEPARABLE, "sep": SEPARABLE,
             "biseparable": BISEPARABLE, "bisep": BISEPARABLE, "w": W, "ghz": GHZ}
    if key in names:
        return names[key]
    if key.startswith("biseparable(") and key.endswith(")"):
        return StrataLabel("Biseparable", label.strip()[12:-1])
    if key.startswith("rank(") and key.endswith(")"):
        return rank_label(int(key[5:-1]))
    raise ValueError(f"unknown stratum label {label!r}")


# qubit index triples (a, b, c) in binary order |abc>
_QUBIT_BASIS = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
_PARTITIONS = {0: "A|BC", 1: "B|AC", 2: "C|AB"}


def embed_three_qubit(c) -> FTSVector:
    """Three-qubit amplitudes ``c000 .. c111`` (binary order) as a Deg0 FTS vector.

    ``alpha = c000``, ``A = diag(c100, c010, c001)``,
    ``B = diag(c011, c101, c110)``, ``beta = c111``. With this dictionary the
    Plucker chart is the product-state chart ``(1, p1)(1, p2)(1, p3)`` and the
    quartic equals Cayley's hyperdeterminant.
    """
    c = list(c)
    if len(c) != 8:
        raise ValueError(f"three-qubit state needs 8 amplitudes, got {len(c)}")
    tag = AlgebraTag.DEG0
    return FTSVector(tag, c[0], J.diag(tag, c[4], c[2], c[1]), J.diag(tag, c[3], c[5], c[6]), c[7])


def _ket(*labels) -> list:
    c = [0] * 8
    for lab in labels:
        c[int(lab, 2)] += 1
    return c


# (name, amplitudes, expected label) for the six SLOCC orbits of three qubits
THREE_QUBIT_NORMAL_FORMS = (
    ("sep", _ket("000"), "Separable"),
    ("bisep-a", _ket("000", "011"), "Biseparable(A|BC)"),
    ("bisep-b", _ket("000", "101"), "Biseparable(B|AC)"),
    ("bisep-c", _ket("000", "110"), "Biseparable(C|AB)"),
    ("w", _ket("001", "010", "100"), "W"),
    ("ghz", _ket("000", "111"), "GHZ"),
)


def three_qubit_amplitudes(x: FTSVector) -> list:
    if x.tag is not AlgebraTag.DEG0:
        raise ValueError("three-qubit amplitudes exist only for Deg0 vectors")
    a1, a2, a3 = x.A.diag
    b1, b2, b3 = x.B.diag
    return [x.alpha, a3, a2, b1, a1, b2, b3, x.beta]


def _flattening_rank_one(c, party: int) -> bool:
    """Is the 2x4 flattening separating ``party`` from the rest of rank <= 1?"""
    rows = [[0] * 4, [0] * 4]
    for amp, idx in zip(c, _QUBIT_BASIS):
        rest = [idx[k] for k in range(3) if k != party]
        rows[idx[party]][2 * rest[0] + rest[1]] = amp
    return all(rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i] == 0
               for i in range(4) for j in range(i + 1, 4))


def _normalized(x: FTSVector) -> FTSVector:
    # Projective: rescale to integer coordinates so evaluation stays in ints.
    return from_coords(x.tag, clear_denominators(x.coords()))


def classify_fts(x: FTSVector) -> StrataLabel:
    if x.is_zero():
        return NULL
    y = _normalized(x)
    if quartic(y) != 0:
        return GHZ
    if any(g != 0 for g in gradient(y)):
        return W
    if any(v != 0 for row in reduced_hessian(y) for v in row):
        if x.tag is AlgebraTag.DEG_MINUS1:
            raise AssertionError("three bosonic qubits have no biseparable stratum")
        if x.tag is AlgebraTag.DEG0:
            amps = three_qubit_amplitudes(y)
            for party, name in _PARTITIONS.items():
                if _flattening_rank_one(amps, party):
                    return StrataLabel("Biseparable", name)
        return BISEPARABLE
    return SEPARABLE


# Plucker coordinates of three-planes in C^6, lexicographic over 1-based triples
WEDGE3_INDEX = list(combinations(range(1, 7), 3))
_WEDGE3_POS = {t: i for i, t in enumerate(WEDGE3_INDEX)}


def _single(r: int, l: int) -> tuple:
    """Triple with row ``r`` of the identity block replaced by column ``3 + l``."""
    return tuple(sorted([k for k in (1, 2, 3) if k != r] + [3 + l]))


def _double(s: int, k: int) -> tuple:
    """Triple keeping identity column ``s`` and the two P-columns other than ``k``."""
    l, m = (t for t in (1, 2, 3) if t != k)
    return (s, 3 + l, 3 + m)


def embed_wedge3(c) -> FTSVector:
    """Plucker coordinates of a vector in Lambda^3 C^6 as a CplusC FTS vector.

    The chart ``rowspace(I | M)`` has ``x123 = 1``, single replacements
    ``(-1)^(r+1) M[r][l]``, double replacements ``(-1)^(k+1) adj(M)[k][s]``
    and ``x456 = det M``. ``A`` and ``B`` are read through the 3x3 matrix
    dictionary of J3(C+C), so the Plucker chart of the FTS is exactly the
    classical one.
    """
    c = list(c)
    if len(c) != 20:
        raise ValueError(f"Lambda^3 C^6 vector needs 20 coordinates, got {len(c)}")
    x = dict(zip(WEDGE3_INDEX, c))
    m = [[(-1) ** (r + 1) * x[_single(r, l)] for l in (1, 2, 3)] for r in (1, 2, 3)]
    adj = [[(-1) ** (k + 1) * x[_double(s, k)] for s in (1, 2, 3)] for k in (1, 2, 3)]
    return FTSVector(AlgebraTag.CPLUSC, x[(1, 2, 3)], J.from_matrix3(m), J.from_matrix3(adj),
                     x[(4, 5, 6)])


def wedge3_coords(v: FTSVector) -> list:
    """Inverse of :func:`embed_wedge3`."""
    if v.tag is not AlgebraTag.CPLUSC:
        raise ValueError("wedge coordinates exist only for CplusC vectors")
    m = J.to_matrix3(v.A)
    adj = J.to_matrix3(v.B)
    x = {(1, 2, 3): v.alpha, (4, 5, 6): v.beta}
    for r in (1, 2, 3):
        for l in (1, 2, 3):
            x[_single(r, l)] = (-1) ** (r + 1) * m[r - 1][l - 1]
    for k in (1, 2, 3):
        for s in (1, 2, 3):
            x[_double(s, k)] = (-1) ** (k + 1) * adj[k - 1][s - 1]
    return [x[t] for t in WEDGE3_INDEX]


def lift_cc(x: FTSVector) -> FTSVector:
    """FTS(CC) sits inside FTS(CplusC) along the diagonal ``t -> (t, t)``."""
    if x.tag is not AlgebraTag.CC:
        raise ValueError("expected a CC vector")
    return FTSVector(AlgebraTag.CPLUSC, x.alpha, _lift_j(x.A), _lift_j(x.B), x.beta)


def _lift_j(m: JordanMat) -> JordanMat:
    t = AlgebraTag.CPLUSC
    return JordanMat(t, m.diag, tuple(CompElem(t, (e.coords[0], e.coords[0])) for e in m.off))


def project_cc(x: FTSVector) -> FTSVector:
    """Inverse of :func:`lift_cc`; fails off the symplectic (diagonal) subspace."""
    if x.tag is not AlgebraTag.CPLUSC:
        raise ValueError("expected a CplusC vector")

    def down(m: JordanMat) -> JordanMat:
        off = []
        for e in m.off:
            if e.coords[0] != e.coords[1]:
                raise ValueError("vector is not in the omega-traceless subspace")
            off.append(CompElem(AlgebraTag.CC, (e.coords[0],)))
        return JordanMat(AlgebraTag.CC, m.diag, tuple(off))

    return FTSVector(AlgebraTag.CC, x.alpha, down(x.A), down(x.B), x.beta)


def tangent_sample(tag: AlgebraTag, P: JordanMat, Q: JordanMat, s=1, t=1) -> FTSVector:
    """``s * plucker(P) + t * d plucker_P[Q]``: a point of the tangential variety."""
    return plucker(tag, P) * s + plucker_differential(P, Q) * t


def construct_class(tag: AlgebraTag, label, rng: random.Random) -> FTSVector:
    """One unverified draw from the stratum recipe (no rejection step).

    Separable: a chart point. GHZ: two chart points in general position.
    W: a tangent vector. Biseparable: two chart points whose parameters
    differ by a Jordan-rank-2 element (a non-generic pair).
    """
    label = parse_label(label)
    if label.kind not in ("Separable", "Biseparable", "W", "GHZ"):
        raise ValueError(f"cannot sample stratum {label}")
    if label.kind == "Biseparable" and tag is AlgebraTag.DEG_MINUS1:
        raise ValueError("three bosonic qubits have no biseparable stratum")
    P = J.random_jordan(tag, rng)
    if label.kind == "Separable":
        x = plucker(tag, P)
    elif label.kind == "GHZ":
        x = plucker(tag, P) + plucker(tag, J.random_jordan(tag, rng)) * rand_nonzero(rng)
    elif label.kind == "W":
        x = tangent_sample(tag, P, J.random_jordan(tag, rng), 1, rand_nonzero(rng))
    else:
        D = J.random_rank(tag, 2, rng)
        x = plucker(tag, P) + plucker(tag, P + D) * rand_nonzero(rng)
    return x * rand_nonzero(rng)


def sample_class(tag: AlgebraTag, label, rng: random.Random) -> FTSVector:
    """:func:`construct_class`, resampled until the draw is not degenerate."""
    label = parse_label(label)
    for attempt in range(MAX_RESAMPLES):
        x = construct_class(tag, label, rng)
        if classify_fts(x).kind == label.kind:
            return x
        log.info("resampling %s sample for %s (attempt %d)", label, tag.value, attempt + 1)
    raise RuntimeError(f"no {label} sample for {tag.value} after {MAX_RESAMPLES} attempts")

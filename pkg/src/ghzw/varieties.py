"""Parametrized varieties and generic-rank dimension counts.

Every separable variety in the catalog comes with a polynomial affine chart
and its closed-form Jacobian. Dimensions are computed at random integer
points with exact ranks:

* secant variety (Terracini): span of the two affine cone tangent spaces
  ``<chart(p), d chart(p)>`` at independent points, minus one;
* tangential variety: rank of the Jacobian of
  ``(p, q, s, t) -> s chart(p) + t d chart(p)[q]``, minus one.
"""

from __future__ import annotations

import enum
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable, Sequence

from . import composition as ca
from . import fts as F
from . import jordan as J
from . import so_series as SO
from .composition import AlgebraTag, CompElem
from .exact import det, exact, rank

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 3
MAX_RESAMPLES = 20
# Chart points are drawn from a wider range than the classifier samples:
# with [-9, 9] two points of a P^1 factor coincide one time in nineteen,
# which is a non-generic pair no single-point rank test can detect.
POINT_RANGE = 10 ** 4


@dataclass(frozen=True)
class ParamVariety:
    name: str
    label: str
    domain_dim: int
    ambient_dim: int
    chart: Callable[[Sequence], list]
    jacobian: Callable[[Sequence], list]
    degree: int
    table: str | None = None
    note: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def jacobian_columns(self, p) -> list[list]:
        cols = self.jacobian(p)
        if len(cols) != self.domain_dim:
            raise AssertionError(f"{self.name}: jacobian has {len(cols)} columns")
        return cols


class Dichotomy(enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"


class DimensionError(RuntimeError):
    pass


# ---------------------------------------------------------------- charts

def fts_variety(tag: AlgebraTag, name: str, label: str, note: str = "") -> ParamVariety:
    d = J.jordan_dim(tag)

    def chart(p):
        return F.plucker(tag, J.from_coords(tag, p)).coords()

    def jac(p):
        P = J.from_coords(tag, p)
        return [F.plucker_differential(P, J.from_coords(tag, [int(i == k) for i in range(d)])).coords()
                for k in range(d)]

    return ParamVariety(name, label, d, 2 * d + 1, chart, jac, 3, "1", note, {"tag": tag})


def _kron(vectors):
    out = [1]
    for v in vectors:
        out = [a * b for a in out for b in v]
    return out


def segre_variety(dims: Sequence[int], name: str, label: str, table=None, note="") -> ParamVariety:
    """Product of projective spaces P^(d-1) for ``d`` in ``dims`` (vector-space dimensions)."""
    dims = list(dims)
    offsets = [sum(d - 1 for d in dims[:i]) for i in range(len(dims))]
    n = sum(d - 1 for d in dims)
    ambient = 1
    for d in dims:
        ambient *= d

    def factors(p):
        return [[1] + list(p[o:o + d - 1]) for o, d in zip(offsets, dims)]

    def chart(p):
        return _kron(factors(p))

    def jac(p):
        fs = factors(p)
        cols = []
        for f, (o, d) in enumerate(zip(offsets, dims)):
            for k in range(d - 1):
                unit = [int(i == k + 1) for i in range(d)]
                cols.append(_kron(fs[:f] + [unit] + fs[f + 1:]))
        return cols

    return ParamVariety(name, label, n, ambient - 1, chart, jac, len(dims), table, note)


def veronese_variety(n: int, d: int, name: str, label: str, table=None, note="") -> ParamVariety:
    """``v_d(P^n)``: all degree-``d`` monomials in ``(1, x_1, .., x_n)``."""
    monos = list(combinations_with_replacement(range(n + 1), d))

    def chart(p):
        x = [1] + list(p)
        out = []
        for m in monos:
            t = 1
            for i in m:
                t = t * x[i]
            out.append(t)
        return out

    def jac(p):
        x = [1] + list(p)
        cols = []
        for k in range(1, n + 1):
            col = []
            for m in monos:
                e = m.count(k)
                if not e:
                    col.append(0)
                    continue
                t = e
                skipped = False
                for i in m:
                    if i == k and not skipped:
                        skipped = True
                        continue
                    t = t * x[i]
                col.append(t)
            cols.append(col)
        return cols

    return ParamVariety(name, label, n, len(monos) - 1, chart, jac, d, table, note)


def isotropic_product_variety(m: int, name: str | None = None, label: str | None = None,
                              note: str = "") -> ParamVariety:
    """P^1 x Q^(m-2) in P(C^2 x C^m): the qubit times an isotropic vector."""

    def chart(p):
        s, rest = p[0], list(p[1:])
        w = SO.isotropic_point(rest)
        return [c for c in w] + [s * c for c in w]

    def jac(p):
        s, rest = p[0], list(p[1:])
        w = SO.isotropic_point(rest)
        padded = [0, 0] + rest
        cols = [[0] * m + list(w)]
        for k in range(m - 2):
            e = [0] * m
            e[k + 2] = 1
            dw = [0, -SO.qform(padded, e)] + [int(i == k) for i in range(m - 2)]
            cols.append(list(dw) + [s * c for c in dw])
        return cols

    name = name or f"so-{m}"
    label = label or f"P1xQ{m - 2}"
    return ParamVariety(name, label, m - 1, 2 * m - 1, chart, jac, 3, "1", note, {"m": m})


def _minor_cols(k: int, n: int):
    return list(combinations(range(n), k))


def grassmannian_variety(k: int, n: int, name: str | None = None, label: str | None = None,
                         table=None, note="") -> ParamVariety:
    """G(k, n) through the chart ``rowspace(I_k | P)`` and all k x k minors."""
    subsets = _minor_cols(k, n)
    cols_p = n - k

    def full(p):
        return [[int(i == j) for j in range(k)] + list(p[i * cols_p:(i + 1) * cols_p]) for i in range(k)]

    def chart(p):
        m = full(p)
        return [det([[m[r][c] for c in S] for r in range(k)]) for S in subsets]

    def jac(p):
        m = full(p)
        out = []
        for a in range(k):
            for b in range(cols_p):
                col = []
                for S in subsets:
                    c = k + b
                    if c not in S:
                        col.append(0)
                        continue
                    pos = S.index(c)
                    rows = [r for r in range(k) if r != a]
                    cs = [s for s in S if s != c]
                    minor = det([[m[r][s] for s in cs] for r in rows]) if rows else 1
                    col.append((-1) ** (a + pos) * minor)
                out.append(col)
        return out

    name = name or f"grass-{k}-{n}"
    label = label or f"G({k},{n})"
    return ParamVariety(name, label, k * (n - k), len(subsets) - 1, chart, jac, k, table, note)


def severi_variety(tag: AlgebraTag, name: str, label: str, note: str = "") -> ParamVariety:
    """Rank-one chart ``u u*`` with ``u = (1, p, q)`` in J3(A)."""
    d = tag.dim

    def split(p):
        return CompElem(tag, tuple(p[:d])), CompElem(tag, tuple(p[d:]))

    def chart(p):
        return J.coords(J.rank_one_chart(tag, *split(p)))

    def jac(p):
        P, Q = split(p)
        zero = ca.zero(tag)
        cols = []
        for k in range(d):
            h = CompElem(tag, tuple(int(i == k) for i in range(d)))
            cols.append(J.coords(J.make(tag, 0, ca.norm_pair(P, h), 0,
                                        ca.mul(h, ca.conj(Q)), zero, ca.conj(h))))
        for k in range(d):
            h = CompElem(tag, tuple(int(i == k) for i in range(d)))
            cols.append(J.coords(J.make(tag, 0, 0, ca.norm_pair(Q, h),
                                        ca.mul(P, ca.conj(h)), h, zero)))
        return cols

    return ParamVariety(name, label, 2 * d, 3 * d + 2, chart, jac, 2, "2", note, {"tag": tag})


# --------------------------------------------------------------- catalog

TABLE1_SO_SIZES = (3, 5, 6, 7, 9)


def catalog(so_sizes: Sequence[int] = TABLE1_SO_SIZES) -> list[ParamVariety]:
    T = AlgebraTag
    out = [
        fts_variety(T.DEG_MINUS1, "fts-bosonic", "v3(P1) [LG_-1(3,6)]", "three bosonic qubits"),
        fts_variety(T.DEG0, "fts-qubits", "P1xP1xP1 [LG_0(3,6)]", "three qubits"),
        fts_variety(T.CC, "fts-complex", "LG(3,6)", "three fermions, symplectic condition"),
        fts_variety(T.CPLUSC, "fts-split", "G(3,6)", "three fermions, six states"),
        fts_variety(T.M2C, "fts-quaternion", "S6", "spinor variety, Fock space"),
        fts_variety(T.OCTC, "fts-octonion", "E7/P1", "tripartite seven-qubit system"),
        segre_variety([2, 2, 2], "segre-2-2-2", "P1xP1xP1", "1", "three qubits, Segre chart"),
        segre_variety([3, 3], "segre-3-3", "P2xP2", "2", "two qutrits"),
        segre_variety([3, 4], "segre-3-4", "P2xP3", "2", "one qutrit and one 4-qudit"),
        veronese_variety(2, 2, "v2-p2", "v2(P2)", "2", "two bosons, three states"),
        veronese_variety(1, 3, "v3-p1", "v3(P1)", "1", "three bosonic qubits"),
    ]
    for m in so_sizes:
        out.append(isotropic_product_variety(m, note=f"SL2 x SO({m})"))
    out += [
        grassmannian_variety(2, 5, table=None, note="Lambda^2 C^5 (literal Table-2 reading)"),
        grassmannian_variety(2, 6, table="2", note="Lambda^2 C^6 (dimensionally corrected row)"),
        grassmannian_variety(2, 7, table="2", note="two fermions, seven states"),
        grassmannian_variety(3, 6, table="1", note="Lambda^3 C^6, Plucker minors"),
        severi_variety(T.CC, "severi-complex", "v2(P2) [J3(C) rank one]"),
        severi_variety(T.CPLUSC, "severi-split", "P2xP2 [J3(C+C) rank one]"),
        severi_variety(T.M2C, "severi-quaternion", "G(2,6) [J3(M2C) rank one]"),
        severi_variety(T.OCTC, "severi-octonion", "E6/P1 [J3(O) rank one]"),
    ]
    return out


def get(name: str) -> ParamVariety:
    for v in catalog():
        if v.name == name:
            return v
    if name.startswith("so-"):
        return isotropic_product_variety(int(name[3:]))
    raise KeyError(f"unknown variety {name!r}")


def names() -> list[str]:
    return [v.name for v in catalog()]


# ------------------------------------------------------------ dimensions

def _trial_rng(seed, name: str, trial: int, kind: str) -> random.Random:
    return random.Random(f"{seed}:{kind}:{name}:{trial}")


def random_point(rng: random.Random, n: int) -> list[int]:
    return [rng.randint(-POINT_RANGE, POINT_RANGE) for _ in range(n)]


def cone_tangent(X: ParamVariety, p) -> list[list]:
    return [X.chart(p)] + X.jacobian_columns(p)


def _generic_point(X: ParamVariety, rng: random.Random, stats: dict):
    for _ in range(MAX_RESAMPLES):
        p = random_point(rng, X.domain_dim)
        t = cone_tangent(X, p)
        if rank(t) == X.domain_dim + 1:
            return p, t
        stats["resamples"] = stats.get("resamples", 0) + 1
        log.info("%s: degenerate chart point, resampling", X.name)
    raise DimensionError(f"{X.name}: no smooth chart point after {MAX_RESAMPLES} draws")


def secant_dim(X: ParamVariety, trials: int = DEFAULT_TRIALS, seed=0, stats: dict | None = None) -> int:
    """Projective dimension of the secant variety by Terracini's lemma."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    stats = {} if stats is None else stats
    best = -1
    for trial in range(trials):
        rng = _trial_rng(seed, X.name, trial, "secant")
        _, t1 = _generic_point(X, rng, stats)
        _, t2 = _generic_point(X, rng, stats)
        best = max(best, rank(t1 + t2) - 1)
    return best


def _derivative_weights(deg: int) -> list[Fraction]:
    """Weights ``w_i`` with ``f'(0) = sum w_i f(i)`` for polynomials of degree <= deg."""
    nodes = list(range(deg + 1))
    weights = []
    for i in nodes:
        # derivative at 0 of the Lagrange basis polynomial L_i
        others = [j for j in nodes if j != i]
        denom = Fraction(1)
        for j in others:
            denom *= i - j
        total = Fraction(0)
        for skip in others:
            term = Fraction(1)
            for j in others:
                if j != skip:
                    term *= -j
            total += term
        weights.append(total / denom)
    return weights


def jacobian_derivative(X: ParamVariety, p, q) -> list[list]:
    """Columns of ``d/de J(p + e q)`` at ``e = 0`` (exact for polynomial charts)."""
    weights = _derivative_weights(max(X.degree - 1, 1))
    out = None
    for i, w in enumerate(weights):
        cols = X.jacobian_columns([a + i * b for a, b in zip(p, q)])
        if out is None:
            out = [[w * v for v in col] for col in cols]
        else:
            out = [[o + w * v for o, v in zip(ocol, col)] for ocol, col in zip(out, cols)]
    return [[exact(v) for v in col] for col in out]


def tangential_jacobian(X: ParamVariety, p, q, s, t) -> list[list]:
    jp = X.jacobian_columns(p)
    djq = jacobian_derivative(X, p, q)
    jq = [sum((col[i] * qi for col, qi in zip(jp, q)), 0) for i in range(X.ambient_dim + 1)]
    cols = []
    for k in range(X.domain_dim):
        cols.append([s * a + t * b for a, b in zip(jp[k], djq[k])])
    for k in range(X.domain_dim):
        cols.append([t * a for a in jp[k]])
    cols.append(X.chart(p))
    cols.append(jq)
    return cols


def tangential_dim(X: ParamVariety, trials: int = DEFAULT_TRIALS, seed=0, stats: dict | None = None) -> int:
    """Projective dimension of the tangential variety."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    stats = {} if stats is None else stats
    best = -1
    for trial in range(trials):
        rng = _trial_rng(seed, X.name, trial, "tangential")
        p, _ = _generic_point(X, rng, stats)
        q = random_point(rng, X.domain_dim)
        s = t = 0
        while s == 0 or t == 0:
            s, t = rng.randint(-POINT_RANGE, POINT_RANGE), rng.randint(-POINT_RANGE, POINT_RANGE)
        best = max(best, rank(tangential_jacobian(X, p, q, s, t)) - 1)
    return best


@dataclass(frozen=True)
class DimensionReport:
    name: str
    label: str
    domain_dim: int
    ambient_dim: int
    secant: int
    tangential: int
    case: Dichotomy
    table: str | None = None

    def as_row(self) -> list:
        return [self.name, self.label, self.domain_dim, self.ambient_dim, self.secant,
                self.tangential, self.case.value]


def classify_dims(n: int, ambient: int, secant: int, tangential: int) -> Dichotomy:
    if tangential == secant:
        return Dichotomy.CASE2
    if (tangential, secant) == (min(2 * n, ambient), min(2 * n + 1, ambient)):
        return Dichotomy.CASE1
    raise DimensionError(f"dimensions fit neither case: n={n}, ambient={ambient}, "
                         f"secant={secant}, tangential={tangential}")


def dimensions(X: ParamVariety, trials: int = DEFAULT_TRIALS, seed=0) -> DimensionReport:
    sec = secant_dim(X, trials, seed)
    tan = tangential_dim(X, trials, seed)
    case = classify_dims(X.domain_dim, X.ambient_dim, sec, tan)
    return DimensionReport(X.name, X.label, X.domain_dim, X.ambient_dim, sec, tan, case, X.table)


def dichotomy(X: ParamVariety, trials: int = DEFAULT_TRIALS, seed=0) -> Dichotomy:
    return dimensions(X, trials, seed).case

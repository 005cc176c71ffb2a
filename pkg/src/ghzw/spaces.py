"""Named Hilbert spaces: descriptors, coordinate bases and per-family dispatch.

A space is identified by a :class:`SpaceDescriptor` (family, parameter,
basis). Coordinates are affine coefficient lists; the basis fixes their order:

* ``fts``      alpha, A (diag then off-diagonals, algebra coordinate order), B likewise, beta
* ``qubits``   three-qubit amplitudes c000 .. c111 in binary order (Deg0 only)
* ``wedge``    Plucker coordinates of Lambda^3 C^6 in lexicographic order (CplusC only)
* ``split``    u then v for ``|0>|u> + |1>|v>`` in split coordinates (so-series)
* ``jordan``   J3(A) coordinates (severi)
* ``matrix``   row-major matrix entries (two qutrits as a 3x3 matrix, or 3x4)
* ``upper``    strict upper triangle of a skew matrix, row-major
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import fts as F
from . import jordan as J
from . import oracles as O
from . import rank_classifier as RC
from . import so_series as SO
from .composition import AlgebraTag
from .exact import exact, rand_invertible, rand_matrix, rand_vector, rank
from .fts import StrataLabel, parse_label, rank_label

FAMILIES = ("fts", "so-series", "severi", "matrix3x4", "skew")
BASES = {
    "fts": ("fts", "qubits", "wedge"),
    "so-series": ("split",),
    "severi": ("jordan", "matrix", "skew"),
    "matrix3x4": ("matrix",),
    "skew": ("upper",),
}
MAX_RESAMPLES = 50


class SpaceError(ValueError):
    pass


@dataclass(frozen=True)
class SpaceDescriptor:
    family: str
    algebra: AlgebraTag | None = None
    m: int | None = None
    n: int | None = None
    basis: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpaceError(f"unknown family {self.family!r}")
        if self.basis is None:
            object.__setattr__(self, "basis", BASES[self.family][0])
        if self.basis not in BASES[self.family]:
            raise SpaceError(f"family {self.family} has no basis {self.basis!r}")
        fam, tag = self.family, self.algebra
        if fam in ("fts", "severi") and not isinstance(tag, AlgebraTag):
            raise SpaceError(f"family {fam} needs an algebra")
        if fam not in ("fts", "severi") and tag is not None:
            raise SpaceError(f"family {fam} takes no algebra")
        if fam == "severi" and tag not in RC.SEVERI_TAGS:
            raise SpaceError(f"no Table-2 row for algebra {tag.value}")
        if fam == "so-series":
            if not isinstance(self.m, int) or self.m < 3:
                raise SpaceError("so-series needs an integer m >= 3")
        elif self.m is not None:
            raise SpaceError(f"family {fam} takes no m")
        if fam == "skew":
            if self.n not in RC.SKEW_SIZES:
                raise SpaceError(f"skew family needs n in {RC.SKEW_SIZES}")
        elif self.n is not None:
            raise SpaceError(f"family {fam} takes no n")
        needs = {("fts", "qubits"): AlgebraTag.DEG0, ("fts", "wedge"): AlgebraTag.CPLUSC,
                 ("severi", "matrix"): AlgebraTag.CPLUSC, ("severi", "skew"): AlgebraTag.M2C}
        want = needs.get((fam, self.basis))
        if want is not None and tag is not want:
            raise SpaceError(f"basis {self.basis} requires algebra {want.value}")

    @property
    def coefficient_count(self) -> int:
        fam, b = self.family, self.basis
        if fam == "fts":
            return {"qubits": 8, "wedge": 20}.get(b, F.fts_dim(self.algebra))
        if fam == "so-series":
            return 2 * self.m
        if fam == "severi":
            return {"matrix": 9, "skew": 15}.get(b, J.jordan_dim(self.algebra))
        if fam == "matrix3x4":
            return 12
        return self.n * (self.n - 1) // 2

    @property
    def table(self) -> str:
        return "1" if self.family in ("fts", "so-series") else "2"

    @property
    def name(self) -> str:
        for key, d in _REGISTRY.items():
            if d == self:
                return key
        if self.family == "so-series":
            return f"so-{self.m}"
        raise SpaceError(f"unregistered space {self}")

    def to_json(self) -> dict:
        out = {"family": self.family}
        if self.algebra is not None:
            out["algebra"] = self.algebra.value
        if self.m is not None:
            out["m"] = self.m
        if self.n is not None:
            out["n"] = self.n
        out["basis"] = self.basis
        return out


T = AlgebraTag
_REGISTRY = {
    "fts-bosonic": SpaceDescriptor("fts", T.DEG_MINUS1),
    "fts-qubits": SpaceDescriptor("fts", T.DEG0),
    "fts-complex": SpaceDescriptor("fts", T.CC),
    "fts-split": SpaceDescriptor("fts", T.CPLUSC),
    "fts-quaternion": SpaceDescriptor("fts", T.M2C),
    "fts-octonion": SpaceDescriptor("fts", T.OCTC),
    "qubits": SpaceDescriptor("fts", T.DEG0, basis="qubits"),
    "wedge3": SpaceDescriptor("fts", T.CPLUSC, basis="wedge"),
    "so-3": SpaceDescriptor("so-series", m=3),
    "so-4": SpaceDescriptor("so-series", m=4),
    "so-5": SpaceDescriptor("so-series", m=5),
    "so-6": SpaceDescriptor("so-series", m=6),
    "so-7": SpaceDescriptor("so-series", m=7),
    "so-9": SpaceDescriptor("so-series", m=9),
    "severi-complex": SpaceDescriptor("severi", T.CC),
    "severi-split": SpaceDescriptor("severi", T.CPLUSC),
    "severi-quaternion": SpaceDescriptor("severi", T.M2C),
    "severi-octonion": SpaceDescriptor("severi", T.OCTC),
    "two-qutrits": SpaceDescriptor("severi", T.CPLUSC, basis="matrix"),
    "wedge2-6": SpaceDescriptor("severi", T.M2C, basis="skew"),
    "matrix3x4": SpaceDescriptor("matrix3x4"),
    "skew-5": SpaceDescriptor("skew", n=5),
    "skew-7": SpaceDescriptor("skew", n=7),
}
del T


def names() -> list[str]:
    return list(_REGISTRY)


def get(name: str) -> SpaceDescriptor:
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name.startswith("so-") and name[3:].isdigit():
        return SpaceDescriptor("so-series", m=int(name[3:]))
    raise SpaceError(f"unknown space {name!r}; known: {', '.join(names())}")


# ------------------------------------------------------------ coordinates

def decode(d: SpaceDescriptor, coeffs):
    """Coefficient list -> state value (FTSVector, QubitQuditState or Table2State)."""
    c = [exact(v) for v in coeffs]
    if len(c) != d.coefficient_count:
        raise SpaceError(f"{d.name} needs {d.coefficient_count} coefficients, got {len(c)}")
    if d.family == "fts":
        if d.basis == "qubits":
            return F.embed_three_qubit(c)
        if d.basis == "wedge":
            return F.embed_wedge3(c)
        return F.from_coords(d.algebra, c)
    if d.family == "so-series":
        return SO.QubitQuditState.from_coords(c, d.m)
    if d.family == "severi":
        if d.basis == "matrix":
            m = J.from_matrix3([c[0:3], c[3:6], c[6:9]])
        elif d.basis == "skew":
            m = RC.skew6_to_jordan(RC.skew_from_upper(c, 6))
        else:
            m = J.from_coords(d.algebra, c)
        return RC.severi(m)
    if d.family == "matrix3x4":
        return RC.matrix3x4([c[0:4], c[4:8], c[8:12]])
    return RC.skew(RC.skew_from_upper(c, d.n))


def encode(d: SpaceDescriptor, value) -> list:
    if d.family == "fts":
        if d.basis == "qubits":
            out = F.three_qubit_amplitudes(value)
        elif d.basis == "wedge":
            out = F.wedge3_coords(value)
        else:
            out = value.coords()
    elif d.family == "so-series":
        out = value.coords()
    elif d.family == "severi":
        if d.basis == "matrix":
            out = [v for row in J.to_matrix3(value.payload) for v in row]
        elif d.basis == "skew":
            out = RC.skew_upper(RC.jordan_to_skew6(value.payload))
        else:
            out = J.coords(value.payload)
    elif d.family == "matrix3x4":
        out = [v for row in value.payload for v in row]
    else:
        out = RC.skew_upper(value.payload)
    return [exact(v) for v in out]


# --------------------------------------------------------- classification

def classify(d: SpaceDescriptor, value) -> StrataLabel:
    if d.family == "fts":
        return F.classify_fts(value)
    if d.family == "so-series":
        return SO.classify_so(value)
    return RC.classify_table2(value)


def invariants(d: SpaceDescriptor, value) -> dict:
    """Invariant values reported next to the label."""
    if d.family == "fts":
        y = F.from_coords(value.tag, [exact(v) for v in value.coords()])
        grad = F.gradient(y)
        hess = F.reduced_hessian(y)
        return {"q": exact(F.quartic(y)),
                "grad_nonzero": sum(1 for g in grad if g != 0),
                "hessian_nonzero": sum(1 for row in hess for v in row if v != 0)}
    if d.family == "so-series":
        return {"gram_det": SO.gram_quartic(value),
                "gram_rank": rank(value.gram()),
                "span_rank": rank([value.u, value.v])}
    if d.family == "severi":
        return {"rank": J.jordan_rank(value.payload), "N": exact(J.cubic_norm(value.payload))}
    return {"rank": rank(value.payload)}


def labels(d: SpaceDescriptor) -> list[StrataLabel]:
    """Orbit labels a sampler can produce on this space (the zero vector excluded)."""
    if d.family == "fts":
        if d.algebra is AlgebraTag.DEG_MINUS1:
            return [F.SEPARABLE, F.W, F.GHZ]
        return list(F.GENUINE_ORDER)
    if d.family == "so-series":
        return list(F.GENUINE_ORDER)
    if d.family == "severi":
        return [rank_label(k) for k in (1, 2, 3)]
    if d.family == "matrix3x4":
        return [rank_label(k) for k in (1, 2, 3)]
    return [rank_label(k) for k in range(2, d.n, 2)]


def _construct(d: SpaceDescriptor, label: StrataLabel, rng: random.Random):
    if d.family == "fts":
        return F.construct_class(d.algebra, label, rng)
    if d.family == "so-series":
        return SO.construct_class(d.m, label, rng)
    if label.kind != "Rank":
        raise SpaceError(f"{d.name} is classified by rank; ask for Rank(k)")
    k = label.rank
    if d.family == "severi":
        if k not in (1, 2, 3):
            raise SpaceError("Jordan rank is 1, 2 or 3")
        return RC.severi(J.random_rank(d.algebra, k, rng))
    if d.family == "matrix3x4":
        if k not in (1, 2, 3):
            raise SpaceError("a 3x4 matrix has rank 1, 2 or 3")
        a, b = rand_matrix(rng, 3, k), rand_matrix(rng, k, 4)
        return RC.matrix3x4([[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(4)] for i in range(3)])
    if k % 2 or not 2 <= k < d.n:
        raise SpaceError(f"skew {d.n}x{d.n} ranks are even and below {d.n}")
    n = d.n
    m = [[0] * n for _ in range(n)]
    for _ in range(k // 2):
        u, v = rand_vector(rng, n), rand_vector(rng, n)
        for i in range(n):
            for j in range(n):
                m[i][j] += u[i] * v[j] - u[j] * v[i]
    return RC.skew(m)


def sample(d: SpaceDescriptor, label, rng: random.Random):
    """A state of the requested stratum (degenerate draws are redrawn)."""
    label = parse_label(label)
    if label.kind not in {l.kind for l in labels(d)}:
        raise SpaceError(f"{d.name} has no stratum {label}")
    for _ in range(MAX_RESAMPLES):
        value = _construct(d, label, rng)
        got = classify(d, value)
        if got.kind == label.kind and (label.kind != "Rank" or got.rank == label.rank):
            return value
    raise RuntimeError(f"no {label} sample on {d.name} after {MAX_RESAMPLES} draws")


# ------------------------------------------------------------ group actions

ACTION_SPACES = ("qubits", "wedge3", "fts-complex", "so-3", "so-5", "so-7", "so-9")


def random_group_action(d: SpaceDescriptor, value, rng: random.Random):
    """Apply a random element of the SLOCC group to a state in concrete coordinates."""
    if d.family == "fts" and d.basis == "qubits":
        c = F.three_qubit_amplitudes(value)
        g = [O.random_sl2(rng) for _ in range(3)]
        return F.embed_three_qubit(O.act_three_qubit(c, *g))
    if d.family == "fts" and d.basis == "wedge":
        g = rand_invertible(rng, 6)
        return F.embed_wedge3(O.apply(O.lambda3(g), F.wedge3_coords(value)))
    if d.family == "fts" and d.algebra is AlgebraTag.CC:
        g = O.random_symplectic(rng)
        lifted = F.wedge3_coords(F.lift_cc(value))
        return F.project_cc(F.embed_wedge3(O.apply(O.lambda3(g), lifted)))
    if d.family == "so-series":
        return SO.act(value, O.random_sl2(rng), SO.random_orthogonal(rng, d.m))
    raise SpaceError(f"no concrete group action implemented for {d.name}")


def scale(d: SpaceDescriptor, value, s):
    c = [exact(v * s) for v in encode(d, value)]
    return decode(d, c)

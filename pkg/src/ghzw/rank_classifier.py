"""Systems with two entanglement types and no W class, classified by rank.

Variants:

* ``Severi(tag)``  J3(A) for A in CC, CplusC, M2C, OctC, classified by
  Jordan rank. These realize Sym^2 C^3, C^3 x C^3 (two qutrits),
  Lambda^2 C^6 and the 27-dimensional E6 module.
* ``Matrix3x4``    C^3 x C^4, ordinary matrix rank.
* ``Skew(n)``      Lambda^2 C^n for n in {5, 7}, rank of the skew matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import composition as ca
from . import jordan as J
from .composition import AlgebraTag, CompElem
from .exact import rank
from .fts import StrataLabel, rank_label
from .jordan import JordanMat

SEVERI_TAGS = (AlgebraTag.CC, AlgebraTag.CPLUSC, AlgebraTag.M2C, AlgebraTag.OCTC)
SKEW_SIZES = (5, 7)


@dataclass(frozen=True)
class Table2State:
    variant: str
    payload: object
    tag: AlgebraTag | None = None
    n: int | None = None

    def __post_init__(self):
        if self.variant == "severi":
            if self.tag not in SEVERI_TAGS:
                raise ValueError(f"no Severi variety for algebra {self.tag}")
            if not isinstance(self.payload, JordanMat) or self.payload.tag is not self.tag:
                raise ValueError("Severi payload must be a JordanMat of the same tag")
        elif self.variant == "matrix3x4":
            if len(self.payload) != 3 or any(len(r) != 4 for r in self.payload):
                raise ValueError("Matrix3x4 payload must be 3x4")
        elif self.variant == "skew":
            n = self.n
            if n not in SKEW_SIZES:
                raise ValueError(f"skew size must be one of {SKEW_SIZES}")
            m = self.payload
            if len(m) != n or any(len(r) != n for r in m):
                raise ValueError(f"skew payload must be {n}x{n}")
            for i in range(n):
                for j in range(n):
                    if m[i][j] != -m[j][i]:
                        raise ValueError(f"payload is not antisymmetric at ({i}, {j})")
        else:
            raise ValueError(f"unknown Table-2 variant {self.variant!r}")


def severi(m: JordanMat) -> Table2State:
    return Table2State("severi", m, tag=m.tag)


def matrix3x4(m) -> Table2State:
    return Table2State("matrix3x4", [list(r) for r in m])


def skew(m) -> Table2State:
    m = [list(r) for r in m]
    return Table2State("skew", m, n=len(m))


def classify_table2(s: Table2State) -> StrataLabel:
    """``Rank(k)``: the lowest nonzero rank is separable, the next the secant stratum."""
    if s.variant == "severi":
        return rank_label(J.jordan_rank(s.payload))
    return rank_label(rank(s.payload))


def skew_from_upper(values, n: int) -> list[list]:
    """Skew matrix from its strict upper triangle in row-major (lexicographic) order."""
    values = list(values)
    if len(values) != n * (n - 1) // 2:
        raise ValueError(f"Lambda^2 C^{n} needs {n * (n - 1) // 2} coordinates, got {len(values)}")
    m = [[0] * n for _ in range(n)]
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = values[k]
            m[j][i] = -values[k]
            k += 1
    return m


def skew_upper(m) -> list:
    n = len(m)
    return [m[i][j] for i in range(n) for j in range(i + 1, n)]


def pfaffian(m):
    """Pfaffian by expansion along the first row (fine for n <= 8)."""
    n = len(m)
    if n % 2:
        return 0
    if n == 0:
        return 1
    out = 0
    rest = list(range(1, n))
    for k, j in enumerate(rest):
        if m[0][j] == 0:
            continue
        keep = [i for i in rest if i != j]
        sub = [[m[a][b] for b in keep] for a in keep]
        out = out + (-1) ** k * m[0][j] * pfaffian(sub)
    return out


# J3(M2C) <-> Lambda^2 C^6: expand the Hermitian matrix into 2x2 blocks
# (scalars a -> a*I, off-diagonal x -> x, conj(x) -> adj(x)) and multiply
# on the right by diag(eps, eps, eps), eps = [[0, 1], [-1, 0]].
_EPS = ((0, 1), (-1, 0))


def _block(e):
    return ((e[0], e[1]), (e[2], e[3]))


def _times_eps(b):
    return tuple(tuple(sum(b[i][k] * _EPS[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def jordan_to_skew6(m: JordanMat) -> list[list]:
    if m.tag is not AlgebraTag.M2C:
        raise ValueError("the Lambda^2 C^6 dictionary is defined for M2C only")
    a, b, c = m.diag
    x, y, z = m.off
    blocks = [[None] * 3 for _ in range(3)]
    for i, d in enumerate((a, b, c)):
        blocks[i][i] = ((d, 0), (0, d))
    blocks[0][1], blocks[1][0] = _block(z.coords), _block(ca.conj(z).coords)
    blocks[1][2], blocks[2][1] = _block(x.coords), _block(ca.conj(x).coords)
    blocks[2][0], blocks[0][2] = _block(y.coords), _block(ca.conj(y).coords)
    out = [[0] * 6 for _ in range(6)]
    for I in range(3):
        for K in range(3):
            bk = _times_eps(blocks[I][K])
            for i in range(2):
                for k in range(2):
                    out[2 * I + i][2 * K + k] = bk[i][k]
    return out


def skew6_to_jordan(s) -> JordanMat:
    """Inverse of :func:`jordan_to_skew6` (the input must lie in its image, i.e. any skew 6x6)."""
    tag = AlgebraTag.M2C
    # right-multiplying by eps^-1 = -eps undoes the twist
    def block(I, K):
        b = tuple(tuple(s[2 * I + i][2 * K + k] for k in range(2)) for i in range(2))
        u = tuple(tuple(-sum(b[i][k] * _EPS[k][j] for k in range(2)) for j in range(2)) for i in range(2))
        return (u[0][0], u[0][1], u[1][0], u[1][1])
    diag = []
    for I in range(3):
        d = block(I, I)
        if d[1] != 0 or d[2] != 0 or d[0] != d[3]:
            raise ValueError("matrix is not skew-symmetric")
        diag.append(d[0])
    z, x, y = block(0, 1), block(1, 2), block(2, 0)
    out = J.make(tag, *diag, CompElem(tag, x), CompElem(tag, y), CompElem(tag, z))
    if jordan_to_skew6(out) != [list(r) for r in s]:
        raise ValueError("matrix is not skew-symmetric")
    return out

"""Cubic Jordan algebra J3(A) of Hermitian 3x3 matrices over A.

A :class:`JordanMat` stores ``diag = (a, b, c)`` and ``off = (x, y, z)`` for
the Hermitian matrix::

    [[a,       z,       conj(y)],
     [conj(z), b,       x      ],
     [y,       conj(x), c      ]]

For the degenerate tags the off-diagonal slots are zero; ``DegMinus1``
additionally forces ``a == b == c`` (scalar multiples of the identity).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import composition as ca
from .composition import AlgebraTag, CompElem
from .exact import SAMPLE_RANGE


@dataclass(frozen=True)
class JordanMat:
    tag: AlgebraTag
    diag: tuple
    off: tuple

    def __post_init__(self):
        if len(self.diag) != 3 or len(self.off) != 3:
            raise ValueError("JordanMat needs three diagonal and three off-diagonal entries")
        for x in self.off:
            if x.tag is not self.tag:
                raise ValueError("off-diagonal entry has the wrong algebra tag")
        if self.tag.degenerate and not all(x.is_zero() for x in self.off):
            raise ValueError(f"{self.tag.value} matrices are diagonal")
        if self.tag is AlgebraTag.DEG_MINUS1:
            a, b, c = self.diag
            if not (a == b and b == c):
                raise ValueError("DegMinus1 matrices are scalar multiples of the identity")

    def __add__(self, other: "JordanMat") -> "JordanMat":
        _check_tags(self, other)
        return JordanMat(self.tag, tuple(p + q for p, q in zip(self.diag, other.diag)),
                         tuple(p + q for p, q in zip(self.off, other.off)))

    def __sub__(self, other: "JordanMat") -> "JordanMat":
        _check_tags(self, other)
        return JordanMat(self.tag, tuple(p - q for p, q in zip(self.diag, other.diag)),
                         tuple(p - q for p, q in zip(self.off, other.off)))

    def __neg__(self) -> "JordanMat":
        return JordanMat(self.tag, tuple(-p for p in self.diag), tuple(-p for p in self.off))

    def __mul__(self, s) -> "JordanMat":
        if isinstance(s, (JordanMat, CompElem)):
            return NotImplemented
        return JordanMat(self.tag, tuple(p * s for p in self.diag), tuple(p * s for p in self.off))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(p == 0 for p in self.diag) and all(x.is_zero() for x in self.off)


def _check_tags(p: JordanMat, q: JordanMat) -> None:
    if p.tag is not q.tag:
        raise ValueError(f"algebra tag mismatch: {p.tag.value} vs {q.tag.value}")


def make(tag: AlgebraTag, a, b, c, x=None, y=None, z=None) -> JordanMat:
    zero = ca.zero(tag)
    return JordanMat(tag, (a, b, c), (x or zero, y or zero, z or zero))


def zero(tag: AlgebraTag) -> JordanMat:
    return make(tag, 0, 0, 0)


def identity(tag: AlgebraTag) -> JordanMat:
    return make(tag, 1, 1, 1)


def diag(tag: AlgebraTag, a, b, c) -> JordanMat:
    return make(tag, a, b, c)


def jordan_dim(tag: AlgebraTag) -> int:
    if tag is AlgebraTag.DEG_MINUS1:
        return 1
    return 3 + 3 * tag.off_dim


def coords(m: JordanMat) -> list:
    """Flat coordinates: ``a, b, c`` then the coordinates of ``x, y, z``."""
    if m.tag is AlgebraTag.DEG_MINUS1:
        return [m.diag[0]]
    out = list(m.diag)
    if m.tag.off_dim:
        for x in m.off:
            out.extend(x.coords)
    return out


def from_coords(tag: AlgebraTag, values) -> JordanMat:
    values = list(values)
    if len(values) != jordan_dim(tag):
        raise ValueError(f"J3({tag.value}) needs {jordan_dim(tag)} coordinates, got {len(values)}")
    if tag is AlgebraTag.DEG_MINUS1:
        return make(tag, values[0], values[0], values[0])
    if tag is AlgebraTag.DEG0:
        return make(tag, *values)
    d = tag.dim
    off = [CompElem(tag, tuple(values[3 + k * d: 3 + (k + 1) * d])) for k in range(3)]
    return make(tag, values[0], values[1], values[2], *off)


def cubic_norm(m: JordanMat):
    a, b, c = m.diag
    x, y, z = m.off
    out = a * b * c
    if m.tag.off_dim:
        out = (out - a * ca.norm(x) - b * ca.norm(y) - c * ca.norm(z)
               + ca.re_trace(ca.mul(ca.mul(x, y), z)))
    return out


def sharp(m: JordanMat) -> JordanMat:
    """Adjoint: the quadratic map with ``sharp(sharp(A)) == N(A) * A``."""
    a, b, c = m.diag
    x, y, z = m.off
    if not m.tag.off_dim:
        return make(m.tag, b * c, c * a, a * b)
    return JordanMat(
        m.tag,
        (b * c - ca.norm(x), c * a - ca.norm(y), a * b - ca.norm(z)),
        (ca.conj(ca.mul(y, z)) - x * a,
         ca.conj(ca.mul(z, x)) - y * b,
         ca.conj(ca.mul(x, y)) - z * c),
    )


def cross(p: JordanMat, q: JordanMat) -> JordanMat:
    _check_tags(p, q)
    return sharp(p + q) - sharp(p) - sharp(q)


def trace_pair(p: JordanMat, q: JordanMat):
    _check_tags(p, q)
    out = sum((s * t for s, t in zip(p.diag, q.diag)), 0)
    if p.tag.off_dim:
        for x, y in zip(p.off, q.off):
            out = out + ca.norm_pair(x, y)
    return out


def jordan_rank(m: JordanMat) -> int:
    if m.is_zero():
        return 0
    if sharp(m).is_zero():
        return 1
    if cubic_norm(m) == 0:
        return 2
    return 3


def rank_one_chart(tag: AlgebraTag, p: CompElem | None = None, q: CompElem | None = None) -> JordanMat:
    """The rank-one element ``u u*`` for ``u = (1, p, q)``.

    ``Deg0`` only has the pivot ``diag(1, 0, 0)`` here; ``DegMinus1`` has no
    rank-one elements at all.
    """
    if tag is AlgebraTag.DEG_MINUS1:
        raise ValueError("J3(DegMinus1) contains no rank-one elements")
    if tag is AlgebraTag.DEG0:
        return diag(tag, 1, 0, 0)
    p = p if p is not None else ca.zero(tag)
    q = q if q is not None else ca.zero(tag)
    return make(tag, 1, ca.norm(p), ca.norm(q), ca.mul(p, ca.conj(q)), q, ca.conj(p))


def rotate(m: JordanMat, k: int = 1) -> JordanMat:
    """Cyclic relabeling 1 -> 2 -> 3 of the matrix indices (an automorphism)."""
    for _ in range(k % 3):
        a, b, c = m.diag
        x, y, z = m.off
        m = JordanMat(m.tag, (b, c, a), (y, z, x))
    return m


def random_jordan(tag: AlgebraTag, rng: random.Random) -> JordanMat:
    return from_coords(tag, [rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE)
                             for _ in range(jordan_dim(tag))])


def random_rank_one(tag: AlgebraTag, rng: random.Random) -> JordanMat:
    """Nonzero multiple of a rotated chart point; always Jordan rank 1."""
    s = 0
    while s == 0:
        s = rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE)
    if tag is AlgebraTag.DEG0:
        base = diag(tag, 1, 0, 0)
    else:
        base = rank_one_chart(tag, ca.random_elem(tag, rng), ca.random_elem(tag, rng))
    return rotate(base, rng.randrange(3)) * s


def random_rank(tag: AlgebraTag, k: int, rng: random.Random, max_tries: int = 50) -> JordanMat:
    """Random element of Jordan rank exactly ``k``."""
    if k == 0:
        return zero(tag)
    for _ in range(max_tries):
        if k == 3:
            m = random_jordan(tag, rng)
        else:
            m = random_rank_one(tag, rng)
            for _ in range(k - 1):
                m = m + random_rank_one(tag, rng)
        if jordan_rank(m) == k:
            return m
    raise ValueError(f"J3({tag.value}) has no elements of rank {k}")


def to_matrix3(m: JordanMat) -> list[list]:
    """J3(C+C) -> 3x3 complex matrices: first component of every entry.

    Under this dictionary ``cubic_norm`` is the determinant and ``sharp`` is
    the adjugate.
    """
    if m.tag is not AlgebraTag.CPLUSC:
        raise ValueError("the 3x3 matrix dictionary is defined for CplusC only")
    a, b, c = m.diag
    x, y, z = (e.coords for e in m.off)
    return [[a, z[0], y[1]],
            [z[1], b, x[0]],
            [y[0], x[1], c]]


def from_matrix3(mat) -> JordanMat:
    tag = AlgebraTag.CPLUSC
    (a, z0, y1), (z1, b, x0), (y0, x1, c) = mat
    return make(tag, a, b, c, CompElem(tag, (x0, x1)), CompElem(tag, (y0, y1)),
                CompElem(tag, (z0, z1)))

"""Complexified composition algebras and their two degenerate slots.

Coordinates are duck-typed: anything supporting ``+``, ``-``, ``*`` works,
which lets the same tables run on exact scalars and on symbolic polynomials.

Coordinate conventions
----------------------
CC      one coordinate, trivial involution
CplusC  ``(a, b)``, componentwise product, involution swaps
M2C     ``(m00, m01, m10, m11)``, matrix product, involution = adjugate
OctC    ``(a, b)`` with ``a, b`` in M2C, Cayley-Dickson doubling
        ``(a, b)(c, d) = (ac + lam*conj(d) b, d a + b conj(c))`` with lam = -1
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .exact import SAMPLE_RANGE

CD_LAMBDA = -1


class AlgebraTag(enum.Enum):
    DEG0 = "Deg0"
    DEG_MINUS1 = "DegMinus1"
    CC = "CC"
    CPLUSC = "CplusC"
    M2C = "M2C"
    OCTC = "OctC"

    @property
    def dim(self) -> int:
        return _DIMS[self]

    @property
    def degenerate(self) -> bool:
        return self in (AlgebraTag.DEG0, AlgebraTag.DEG_MINUS1)

    @property
    def off_dim(self) -> int:
        """Coordinates per off-diagonal Jordan slot (0 for the degenerate tags)."""
        return 0 if self.degenerate else self.dim

    @classmethod
    def parse(cls, name: "str | AlgebraTag") -> "AlgebraTag":
        if isinstance(name, AlgebraTag):
            return name
        key = str(name).strip().lower().replace("_", "").replace("-", "")
        for tag in cls:
            if tag.value.lower() == key or tag.name.lower().replace("_", "") == key:
                return tag
        raise ValueError(f"unknown algebra tag {name!r}")


_DIMS = {
    AlgebraTag.DEG0: 0,
    AlgebraTag.DEG_MINUS1: 1,
    AlgebraTag.CC: 1,
    AlgebraTag.CPLUSC: 2,
    AlgebraTag.M2C: 4,
    AlgebraTag.OCTC: 8,
}


@dataclass(frozen=True)
class CompElem:
    tag: AlgebraTag
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.tag.dim:
            raise ValueError(f"{self.tag.value} element needs {self.tag.dim} coordinates, "
                             f"got {len(self.coords)}")

    def __add__(self, other: "CompElem") -> "CompElem":
        _check_tags(self, other)
        return CompElem(self.tag, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CompElem") -> "CompElem":
        _check_tags(self, other)
        return CompElem(self.tag, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CompElem":
        return CompElem(self.tag, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, CompElem):
            return mul(self, other)
        return CompElem(self.tag, tuple(a * other for a in self.coords))

    def __rmul__(self, other):
        return CompElem(self.tag, tuple(other * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


def _check_tags(x: CompElem, y: CompElem) -> None:
    if x.tag is not y.tag:
        raise ValueError(f"algebra tag mismatch: {x.tag.value} vs {y.tag.value}")


def zero(tag: AlgebraTag) -> CompElem:
    return CompElem(tag, (0,) * tag.dim)


def one(tag: AlgebraTag) -> CompElem:
    return scalar(tag, 1)


def scalar(tag: AlgebraTag, s) -> CompElem:
    """``s`` times the unit element."""
    if tag is AlgebraTag.DEG0:
        return zero(tag)
    if tag in (AlgebraTag.CC, AlgebraTag.DEG_MINUS1):
        return CompElem(tag, (s,))
    if tag is AlgebraTag.CPLUSC:
        return CompElem(tag, (s, s))
    if tag is AlgebraTag.M2C:
        return CompElem(tag, (s, 0, 0, s))
    return CompElem(tag, (s, 0, 0, s, 0, 0, 0, 0))


def _m2_mul(a, b):
    return (a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3])


def _m2_adj(a):
    return (a[3], -a[1], -a[2], a[0])


def _m2_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mul(x: CompElem, y: CompElem) -> CompElem:
    _check_tags(x, y)
    tag = x.tag
    a, b = x.coords, y.coords
    if tag is AlgebraTag.DEG0:
        return x
    if tag in (AlgebraTag.CC, AlgebraTag.DEG_MINUS1):
        return CompElem(tag, (a[0] * b[0],))
    if tag is AlgebraTag.CPLUSC:
        return CompElem(tag, (a[0] * b[0], a[1] * b[1]))
    if tag is AlgebraTag.M2C:
        return CompElem(tag, _m2_mul(a, b))
    p, q, r, s = a[:4], a[4:], b[:4], b[4:]
    first = _m2_add(_m2_mul(p, r), tuple(CD_LAMBDA * t for t in _m2_mul(_m2_adj(s), q)))
    second = _m2_add(_m2_mul(s, p), _m2_mul(q, _m2_adj(r)))
    return CompElem(tag, first + second)


def conj(x: CompElem) -> CompElem:
    tag, a = x.tag, x.coords
    if tag in (AlgebraTag.DEG0, AlgebraTag.CC, AlgebraTag.DEG_MINUS1):
        return x
    if tag is AlgebraTag.CPLUSC:
        return CompElem(tag, (a[1], a[0]))
    if tag is AlgebraTag.M2C:
        return CompElem(tag, _m2_adj(a))
    return CompElem(tag, _m2_adj(a[:4]) + tuple(-t for t in a[4:]))


def norm(x: CompElem):
    """``x * conj(x)``, read off as a scalar."""
    tag, a = x.tag, x.coords
    if tag is AlgebraTag.DEG0:
        return 0
    if tag in (AlgebraTag.CC, AlgebraTag.DEG_MINUS1):
        return a[0] * a[0]
    if tag is AlgebraTag.CPLUSC:
        return a[0] * a[1]
    if tag is AlgebraTag.M2C:
        return a[0] * a[3] - a[1] * a[2]
    return (a[0] * a[3] - a[1] * a[2]) - CD_LAMBDA * (a[4] * a[7] - a[5] * a[6])


def re_trace(x: CompElem):
    """``x + conj(x)``, read off as a scalar."""
    tag, a = x.tag, x.coords
    if tag is AlgebraTag.DEG0:
        return 0
    if tag in (AlgebraTag.CC, AlgebraTag.DEG_MINUS1):
        return 2 * a[0]
    if tag is AlgebraTag.CPLUSC:
        return a[0] + a[1]
    return a[0] + a[3]


def norm_pair(x: CompElem, y: CompElem):
    """Polarized norm ``re_trace(x * conj(y))``."""
    return re_trace(mul(x, conj(y)))


def random_elem(tag: AlgebraTag, rng: random.Random, lo: int = -SAMPLE_RANGE,
                hi: int = SAMPLE_RANGE) -> CompElem:
    return CompElem(tag, tuple(rng.randint(lo, hi) for _ in range(tag.dim)))

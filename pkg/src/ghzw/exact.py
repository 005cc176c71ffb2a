"""Exact scalars over Q(i) and rank computations.

Real values travel as plain ``int``/``Fraction`` objects; :class:`Scalar` is
only needed when an imaginary part is present. Every routine in the package
accepts any mix of the three.
"""

from __future__ import annotations

import logging
import math
import random
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

log = logging.getLogger(__name__)

SAMPLE_RANGE = 9


class Scalar:
    """Gaussian rational ``re + im*i`` with exact ``Fraction`` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def _split(other):
        if isinstance(other, Scalar):
            return other.re, other.im
        if isinstance(other, Rational):
            return other, 0
        return None

    def __add__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return Scalar(self.re + parts[0], self.im + parts[1])

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return Scalar(self.re - parts[0], self.im - parts[1])

    def __rsub__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return Scalar(parts[0] - self.re, parts[1] - self.im)

    def __mul__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        a, b = parts
        return Scalar(self.re * a - self.im * b, self.re * b + self.im * a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        a, b = parts
        d = a * a + b * b
        if d == 0:
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar((self.re * a + self.im * b) / d, (self.im * a - self.re * b) / d)

    def __rtruediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return Scalar(*parts) / self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self.re == parts[0] and self.im == parts[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"Scalar({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


def exact(v):
    """Normalize ``v`` to ``int``/``Fraction`` when real, else :class:`Scalar`.

    Floats are converted through their shortest decimal repr, so ``0.1``
    becomes ``1/10`` rather than the binary expansion.
    """
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, Scalar):
        return exact(v.re) if v.im == 0 else v
    if isinstance(v, Rational):
        return exact(Fraction(v.numerator, v.denominator))
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError(f"cannot convert {v!r} to an exact scalar")
        return exact(Fraction(repr(v)))
    if isinstance(v, complex):
        return exact(Scalar(exact(v.real), exact(v.imag)))
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return exact(float(v))
    raise TypeError(f"unsupported scalar type {type(v).__name__}")


def is_zero(v) -> bool:
    return v == 0


def div(a, b):
    """Exact quotient; never falls back to float division."""
    if isinstance(a, Scalar) or isinstance(b, Scalar):
        return exact(Scalar(*_as_parts(a)) / b)
    if b == 0:
        raise ZeroDivisionError("exact division by zero")
    return exact(Fraction(a) / Fraction(b))


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _as_parts(v):
    if isinstance(v, Scalar):
        return v.re, v.im
    v = exact(v)
    if isinstance(v, Scalar):
        return v.re, v.im
    return Fraction(v), Fraction(0)


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Realify (if needed) and clear denominators row by row.

    A complex matrix R + iI has rank r iff [[R, -I], [I, R]] has rank 2r.
    """
    parts = [[_as_parts(v) for v in row] for row in rows]
    complex_ = any(p[1] != 0 for row in parts for p in row)
    if complex_:
        real = []
        for row in parts:
            real.append([p[0] for p in row] + [-p[1] for p in row])
        for row in parts:
            real.append([p[1] for p in row] + [p[0] for p in row])
    else:
        real = [[p[0] for p in row] for row in parts]
    out = []
    for row in real:
        den = 1
        for v in row:
            den = _lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def _bareiss_rank(m: list[list[int]]) -> int:
    """Fraction-free elimination; ``m`` is consumed."""
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            if f == 0:
                if p != prev:
                    for j in range(c + 1, ncols):
                        row[j] = row[j] * p // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (row[j] * p - f * pr[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def _float_rank(rows, tol: float) -> int:
    a = np.array([[complex(float(_as_parts(v)[0]), float(_as_parts(v)[1])) for v in row]
                  for row in rows], dtype=complex)
    if a.size == 0:
        return 0
    scale = np.abs(a).max(axis=1)
    scale[scale == 0] = 1.0
    a = a / scale[:, None]
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r + int(np.argmax(np.abs(a[r:, c])))
        if abs(a[piv, c]) <= tol:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r + 1:] -= np.outer(a[r + 1:, c] / a[r, c], a[r])
        r += 1
    return r


def rank(m, tol: float | None = None) -> int:
    """Rank of a matrix given as a sequence of rows.

    Exact (Bareiss over the integers after clearing denominators) unless
    ``tol`` is given, in which case a scaled floating-point elimination
    counts pivots with magnitude above ``tol``.
    """
    rows = [list(row) for row in m]
    if not rows or not rows[0]:
        return 0
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("ragged matrix")
    if tol is not None:
        return _float_rank(rows, tol)
    ints = _integer_rows(rows)
    r = _bareiss_rank(ints)
    return r // 2 if len(ints) == 2 * len(rows) else r


def span_dim(vs: Iterable[Sequence], tol: float | None = None) -> int:
    """Dimension of the linear span of equal-length vectors."""
    vs = [list(v) for v in vs]
    if not vs:
        return 0
    n = len(vs[0])
    for i, v in enumerate(vs):
        if len(v) != n:
            raise ValueError(f"vector {i} has length {len(v)}, expected {n}")
    return rank(vs, tol=tol)


def transpose(m):
    return [list(col) for col in zip(*m)]


def det(m) -> object:
    """Exact determinant by fraction-free elimination over the entries' field."""
    a = [[exact(v) for v in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return exact(sign * a[n - 1][n - 1]) if n else 1


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), 0) for row in a]


def inverse(m):
    """Exact inverse by Gauss-Jordan over Q(i)."""
    n = len(m)
    a = [[exact(v) for v in row] + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [div(v, p) for v in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [exact(x - f * y) for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rand_int(rng: random.Random, lo: int = -SAMPLE_RANGE, hi: int = SAMPLE_RANGE) -> int:
    return rng.randint(lo, hi)


def rand_nonzero(rng: random.Random) -> int:
    while True:
        v = rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE)
        if v:
            return v


def rand_vector(rng: random.Random, n: int) -> list[int]:
    return [rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE) for _ in range(n)]


def rand_matrix(rng: random.Random, rows: int, cols: int) -> list[list[int]]:
    return [rand_vector(rng, cols) for _ in range(rows)]


def rand_invertible(rng: random.Random, n: int, max_tries: int = 100):
    for _ in range(max_tries):
        m = rand_matrix(rng, n, n)
        if det(m) != 0:
            return m
        log.debug("resampling singular %dx%d matrix", n, n)
    raise RuntimeError("could not sample an invertible matrix")


def clear_denominators(values: Sequence) -> list:
    """Scale a projective point so every coordinate is a (Gaussian) integer."""
    vals = [exact(v) for v in values]
    den = 1
    for v in vals:
        re, im = _as_parts(v)
        den = _lcm(den, re.denominator)
        den = _lcm(den, im.denominator)
    return [exact(v * den) for v in vals]

"""Minimal sparse multivariate polynomials with exact coefficients.

A monomial is a sorted tuple of variable indices with repetition, so
``x0^2 x3`` is ``(0, 0, 3)``. Enough arithmetic to push the algebra code
through symbolically and differentiate the result.
"""

from __future__ import annotations

from collections import Counter
from numbers import Rational

from .exact import Scalar


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def var(cls, i: int) -> "Poly":
        return cls({(i,): 1})

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): c})

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (Rational, Scalar)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (Rational, Scalar)):
            if other == 0:
                return Poly()
            return Poly({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _merge(k1, k2)
                out[k] = out.get(k, 0) + v1 * v2
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        parts = []
        for k, v in sorted(self.terms.items()):
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in sorted(Counter(k).items()))
            parts.append(f"{v}*{mono}" if mono else str(v))
        return "Poly(" + " + ".join(parts) + ")"

    @property
    def degree(self) -> int:
        return max((len(k) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(k) for k in self.terms}) <= 1

    def variables(self) -> set:
        return {i for k in self.terms for i in k}

    def diff(self, i: int) -> "Poly":
        out: dict = {}
        for k, v in self.terms.items():
            e = k.count(i)
            if e:
                pos = k.index(i)
                key = k[:pos] + k[pos + 1:]
                out[key] = out.get(key, 0) + v * e
        return Poly(out)

    def substitute(self, images: dict) -> "Poly":
        """Replace each variable index by a Poly (or scalar) image."""
        out = Poly()
        for k, v in self.terms.items():
            term = Poly.const(v)
            for i in k:
                term = term * images[i]
            out = out + term
        return out

    def compile(self) -> list:
        """``[(coeff, indices), ...]`` for :func:`evaluate_compiled`."""
        return [(v, k) for k, v in self.terms.items()]

    def __call__(self, values):
        return evaluate_compiled(self.compile(), values)


def evaluate_compiled(terms, values):
    total = 0
    for c, idx in terms:
        t = c
        for i in idx:
            t = t * values[i]
        total = total + t
    return total


def variables(n: int) -> list[Poly]:
    return [Poly.var(i) for i in range(n)]



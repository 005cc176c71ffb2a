"""Independent reference implementations used to cross-check the main code.

Nothing here touches the Jordan or FTS machinery: each oracle is written
directly from its classical definition.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from .exact import div, exact, rand_int, rand_invertible, rand_nonzero


def hyperdeterminant(c) -> object:
    """Cayley's hyperdeterminant of the 2x2x2 array ``c[a][b][c]`` (or 8 amplitudes in binary order)."""
    c = list(c)
    if len(c) == 2:
        c = [c[a][b][k] for a in (0, 1) for b in (0, 1) for k in (0, 1)]
    if len(c) != 8:
        raise ValueError("hyperdeterminant needs a 2x2x2 array")
    a000, a001, a010, a011, a100, a101, a110, a111 = c
    return exact(
        a000 ** 2 * a111 ** 2 + a001 ** 2 * a110 ** 2 + a010 ** 2 * a101 ** 2 + a100 ** 2 * a011 ** 2
        - 2 * (a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111
               + a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101)
        + 4 * (a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111))


def leibniz_det(m) -> object:
    """Determinant by the permutation expansion."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term = term * m[i][perm[i]]
            if term == 0:
                break
        total = total + term
    return exact(total)


def minor_rank(m) -> int:
    """Largest size of a nonzero minor (small matrices only)."""
    rows, cols = len(m), len(m[0]) if m else 0
    for k in range(min(rows, cols), 0, -1):
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                if leibniz_det([[m[i][j] for j in c] for i in r]) != 0:
                    return k
    return 0


def numeric_rank(m, tol: float = 1e-9) -> int:
    a = np.array([[complex(v) if not hasattr(v, "re") else complex(float(v.re), float(v.im))
                   for v in row] for row in m], dtype=complex)
    return int(np.linalg.matrix_rank(a, tol=tol * max(1.0, float(np.abs(a).max(initial=0.0)))))


# ---------------------------------------------------------------- three qubits

def act_three_qubit(c, g1, g2, g3) -> list:
    """``(g1 x g2 x g3) c`` on amplitudes in binary order."""
    out = []
    for a in (0, 1):
        for b in (0, 1):
            for k in (0, 1):
                s = 0
                for i in (0, 1):
                    for j in (0, 1):
                        for l in (0, 1):
                            s = s + g1[a][i] * g2[b][j] * g3[k][l] * c[4 * i + 2 * j + l]
                out.append(exact(s))
    return out


# ----------------------------------------------------------------- Lambda^3 C^6

TRIPLES = list(combinations(range(6), 3))


def wedge3(u, v, w) -> list:
    """Plucker coordinates of ``u ^ v ^ w`` in lexicographic order."""
    return [leibniz_det([[u[i], u[j], u[k]], [v[i], v[j], v[k]], [w[i], w[j], w[k]]])
            for i, j, k in TRIPLES]


def lambda3(g) -> list[list]:
    """The 20x20 matrix of ``Lambda^3 g``: entry ``(I, J)`` is the minor ``det g[I, J]``."""
    return [[leibniz_det([[g[i][j] for j in J] for i in I]) for J in TRIPLES] for I in TRIPLES]


def apply(m, x) -> list:
    return [exact(sum((a * b for a, b in zip(row, x)), 0)) for row in m]


def symplectic_form6() -> list[list]:
    return [[(1 if j == i + 3 else -1 if i == j + 3 else 0) for j in range(6)] for i in range(6)]


def random_symplectic(rng: random.Random, steps: int = 3) -> list[list]:
    """Product of block generators of Sp6 for ``[[0, I], [-I, 0]]``."""
    def ident():
        return [[int(i == j) for j in range(6)] for i in range(6)]

    def mm(a, b):
        return [[exact(sum((a[i][k] * b[k][j] for k in range(6)), 0)) for j in range(6)] for i in range(6)]

    def sym3():
        s = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i, 3):
                s[i][j] = s[j][i] = rand_int(rng, -3, 3)
        return s

    g = ident()
    for _ in range(steps):
        a = rand_invertible(rng, 3)
        a_inv_t = _inverse3_transpose(a)
        block = ident()
        for i in range(3):
            for j in range(3):
                block[i][j] = a[i][j]
                block[i + 3][j + 3] = a_inv_t[i][j]
        upper, lower = ident(), ident()
        s, t = sym3(), sym3()
        for i in range(3):
            for j in range(3):
                upper[i][j + 3] = s[i][j]
                lower[i + 3][j] = t[i][j]
        g = mm(mm(mm(block, upper), lower), g)
    return g


def _inverse3_transpose(a):
    d = leibniz_det(a)
    cof = [[(-1) ** (i + j) * leibniz_det([[a[r][c] for c in range(3) if c != j]
                                           for r in range(3) if r != i])
            for j in range(3)] for i in range(3)]
    return [[div(cof[i][j], d) for j in range(3)] for i in range(3)]


def is_symplectic(g) -> bool:
    om = symplectic_form6()
    gt = [list(r) for r in zip(*g)]
    lhs = [[sum((gt[i][k] * om[k][j] for k in range(6)), 0) for j in range(6)] for i in range(6)]
    lhs = [[sum((lhs[i][k] * g[k][j] for k in range(6)), 0) for j in range(6)] for i in range(6)]
    return lhs == om


def random_sl2(rng: random.Random) -> list[list]:
    g = [[rand_nonzero(rng), rand_int(rng)], [rand_int(rng), rand_nonzero(rng)]]
    while g[0][0] * g[1][1] - g[0][1] * g[1][0] == 0:
        g[1][1] = rand_nonzero(rng)
    return g


# ---------------------------------------------------------- numerical gradient

def richardson_gradient(f, x, h: float = 1e-2) -> np.ndarray:
    """Central differences with one Richardson step (error O(h^4))."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    for i in range(len(x)):
        def d(step):
            e = np.zeros_like(x)
            e[i] = step
            return (f(x + e) - f(x - e)) / (2 * step)
        out[i] = (4 * d(h / 2) - d(h)) / 3
    return out

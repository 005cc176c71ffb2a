"""Regenerate the example state files in ``states/``.

One file per three-qubit normal form, one GHZ-type representative per
Table-1 row and one secant-type (rank two) representative per Table-2 row.
Every file is written in canonical form and classified on the way out.
"""

import argparse
import pathlib

from ghzw import fts as F
from ghzw import jordan as J
from ghzw import spaces as S
from ghzw import stateio


def unit(n, *hot):
    v = [0] * n
    for i in hot:
        v[i] = 1
    return v


def table1_states():
    # FTS vectors alpha = beta = 1 are the |000> + |111> analogues
    for name in ("fts-bosonic", "fts-complex", "fts-quaternion", "fts-octonion"):
        d = S.get(name)
        n = d.coefficient_count
        yield f"table1-{name}", d, unit(n, 0, n - 1)
    # e123 + e456 in Lambda^3 C^6
    yield "table1-wedge3", S.get("wedge3"), unit(20, 0, 19)
    # |0>|e0> + |1>|e1> with Q(e0, e1) = 1
    for m in (3, 5, 6, 7, 9):
        yield f"table1-so-{m}", S.get(f"so-{m}"), unit(2 * m, 0, m + 1)


def table2_states():
    yield "table2-two-qutrits", S.get("two-qutrits"), unit(9, 0, 4)
    yield "table2-severi-complex", S.get("severi-complex"), J.coords(J.diag(S.get("severi-complex").algebra, 1, 1, 0))
    yield "table2-wedge2-6", S.get("wedge2-6"), unit(15, 0, 9)
    yield "table2-severi-octonion", S.get("severi-octonion"), J.coords(J.diag(S.get("severi-octonion").algebra, 1, 1, 0))
    yield "table2-matrix3x4", S.get("matrix3x4"), unit(12, 0, 5)
    yield "table2-skew-7", S.get("skew-7"), unit(21, 0, 11)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "states"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(exist_ok=True)
    qubits = S.get("qubits")
    items = [(("ghz3" if n == "ghz" else n + "3"), qubits, c) for n, c, _ in F.THREE_QUBIT_NORMAL_FORMS]
    items += list(table1_states()) + list(table2_states())
    for stem, d, coeffs in items:
        value = S.decode(d, coeffs)
        data = stateio.emit(d, value)
        (out / f"{stem}.json").write_bytes(data)
        print(f"{stem + '.json':32s} {S.classify(d, value)}")


if __name__ == "__main__":
    main()

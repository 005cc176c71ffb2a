"""The two classification tables, recomputed row by row.

Table 1: smooth orbits X with tau(X) a hypersurface and sigma(X) the whole
space (W and GHZ both present). Table 2: sigma(X) = tau(X) is a proper
subvariety (two entanglement types, no W class).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from . import varieties as V


@dataclass(frozen=True)
class TableRow:
    group: str
    space: str
    orbit: str
    ambient: int
    charts: tuple
    expected_secant: int
    note: str = ""


TABLE1 = (
    TableRow("SL2", "Sym^3 C^2", "v3(P1)", 3, ("fts-bosonic", "v3-p1"), 3),
    TableRow("SL2 x SO(3)", "C^2 x Sym^2 C^2", "P1 x v2(P1)", 5, ("so-3",), 5),
    TableRow("SL2 x SO(4)", "C^2 x C^2 x C^2", "P1 x P1 x P1", 7, ("fts-qubits", "segre-2-2-2"), 7),
    TableRow("SL2 x SO(5)", "C^2 x Lambda^<2> C^4", "P1 x LG(2,4)", 9, ("so-5",), 9),
    TableRow("SL2 x SO(6)", "C^2 x Lambda^2 C^4", "P1 x G(2,4)", 11, ("so-6",), 11),
    TableRow("SL2 x SO(7)", "C^2 x C^7", "P1 x Q^5", 13, ("so-7",), 13),
    TableRow("SL2 x SO(9)", "C^2 x C^9", "P1 x Q^7", 17, ("so-9",), 17),
    TableRow("Sp6", "Lambda^<3> C^6", "LG(3,6)", 13, ("fts-complex",), 13),
    TableRow("SL6", "Lambda^3 C^6", "G(3,6)", 19, ("fts-split", "grass-3-6"), 19),
    TableRow("Spin12", "Delta_12", "S6", 31, ("fts-quaternion",), 31),
    TableRow("E7", "V_56", "E7/P1", 55, ("fts-octonion",), 55),
)

CORRECTED = "corrected, see notes"

TABLE2 = (
    TableRow("SL3", "Sym^2 C^3", "v2(P2)", 5, ("v2-p2", "severi-complex"), 4, CORRECTED),
    TableRow("SL3 x SL3", "C^3 x C^3", "P2 x P2", 8, ("segre-3-3", "severi-split"), 7),
    TableRow("SL6", "Lambda^2 C^6", "G(2,6)", 14, ("grass-2-6", "severi-quaternion"), 13, CORRECTED),
    TableRow("E6", "V_27", "E6/P1", 26, ("severi-octonion",), 25),
    TableRow("SL3 x SL4", "C^3 x C^4", "P2 x P3", 11, ("segre-3-4",), 9),
    TableRow("SL7", "Lambda^2 C^7", "G(2,7)", 20, ("grass-2-7",), 17),
)

# The literal row "Lambda^2 C^5, G(2,5) in P^14" is reported but not judged:
# Lambda^2 C^5 is P^9 and G(2,5) has no proper secant variety there.
LITERAL_G25 = "grass-2-5"

HEADER = ["row", "chart", "n", "ambient", "sigma", "tau", "case", "status", "note"]


def _dims(name: str, trials: int, seed) -> tuple:
    X = V.get(name)
    sec = V.secant_dim(X, trials, seed)
    tan = V.tangential_dim(X, trials, seed)
    try:
        case = V.classify_dims(X.domain_dim, X.ambient_dim, sec, tan).value
    except V.DimensionError:
        case = "none"
    return X, sec, tan, case


def table1_rows(trials: int = V.DEFAULT_TRIALS, seed=0) -> list[list]:
    out = []
    for row in TABLE1:
        for chart in row.charts:
            X, sec, tan, case = _dims(chart, trials, seed)
            ok = (X.ambient_dim == row.ambient and sec == row.ambient
                  and tan == row.ambient - 1 and case == "Case1")
            out.append([f"{row.orbit} in P^{row.ambient}", chart, X.domain_dim, X.ambient_dim,
                        sec, tan, case, "PASS" if ok else "FAIL", row.note])
    return out


def table2_rows(trials: int = V.DEFAULT_TRIALS, seed=0, literal: bool = True) -> list[list]:
    out = []
    for row in TABLE2:
        for chart in row.charts:
            X, sec, tan, case = _dims(chart, trials, seed)
            ok = (X.ambient_dim == row.ambient and case == "Case2"
                  and sec == row.expected_secant < row.ambient)
            out.append([f"{row.orbit} in P^{row.ambient}", chart, X.domain_dim, X.ambient_dim,
                        sec, tan, case, "PASS" if ok else "FAIL", row.note])
    if literal:
        X, sec, tan, case = _dims(LITERAL_G25, trials, seed)
        out.append(["G(2,5) in P^9 (literal Lambda^2 C^5)", LITERAL_G25, X.domain_dim, X.ambient_dim,
                    sec, tan, case, "INFO", "sigma fills the space; not a two-type system"])
    return out


def dims_rows(names, trials: int = V.DEFAULT_TRIALS, seed=0) -> list[list]:
    out = []
    for name in names:
        X, sec, tan, case = _dims(name, trials, seed)
        out.append([X.name, X.label, X.domain_dim, X.ambient_dim, sec, tan, case])
    return out


DIMS_HEADER = ["name", "label", "n", "ambient", "sigma", "tau", "case"]


def render(header: list, rows: list[list], fmt: str = "plain") -> str:
    cells = [[str(c) for c in r] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(cells)
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(r) + " |" for r in cells]
        return "\n".join(lines) + "\n"
    if fmt != "plain":
        raise ValueError(f"unknown format {fmt!r}")
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"

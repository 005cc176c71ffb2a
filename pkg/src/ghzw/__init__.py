"""Exact classification of entanglement classes through secant and tangential varieties.

Main entry points:

* :mod:`ghzw.fts`        Freudenthal triple systems, the quartic and the four-orbit classifier
* :mod:`ghzw.so_series`  one qubit times an isotropic qudit
* :mod:`ghzw.rank_classifier`  Table-2 systems classified by rank
* :mod:`ghzw.varieties`  charts and secant/tangential dimensions
* :mod:`ghzw.e6map`      the quartic map from G(3,6) to the E6 adjoint variety
* :mod:`ghzw.stateio`    JSON state files
"""

from .composition import AlgebraTag
from .fts import FTSVector, StrataLabel, classify_fts, quartic
from .jordan import JordanMat

__all__ = ["AlgebraTag", "FTSVector", "JordanMat", "StrataLabel", "classify_fts", "quartic"]
__version__ = "0.1.0"

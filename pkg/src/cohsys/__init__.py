"""Numerical non-emptiness criteria for moduli of coherent systems on curves."""

from cohsys.arith import SystemType, SegreStratum
from cohsys.criteria import Outcome, Theorem, Verdict, Witness, verdict
from cohsys.walls import SubType, WallSet, wall_candidates

__version__ = "0.1.0"

__all__ = [
    "Outcome",
    "SegreStratum",
    "SubType",
    "SystemType",
    "Theorem",
    "Verdict",
    "WallSet",
    "Witness",
    "verdict",
    "wall_candidates",
    "__version__",
]

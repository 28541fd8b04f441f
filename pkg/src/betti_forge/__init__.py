"""Exact Boij-Soderberg decompositions of graded Betti tables, with closed
forms for Ferrers ideals, their quotients and two-strand Gorenstein rings."""

from .decompose import (
    Decomposition,
    SelfDualPairing,
    check_integrality,
    greedy_decompose,
    recompose,
    self_dual_pairing,
)
from .diagrams import (
    BettiTable,
    DegreeSequence,
    PureDiagram,
    dual_sequence,
    pure_diagram,
    sequence_leq,
    shift_sequence,
    table_add,
    table_scale,
    table_stats,
)
from .errors import (
    BettiForgeError,
    InvalidOSequenceError,
    InvalidParametersError,
    InvalidSequenceError,
    NotInConeError,
    NotOrderIdealError,
    NotSelfDualError,
    ParseError,
)

__version__ = "0.1.0"

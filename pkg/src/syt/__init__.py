"""Exact descent-number and major-index distributions of standard Young
tableaux: closed forms, memoized recursions, a brute-force enumeration
oracle, and cross-verification between all of them."""

from . import cli, formulas, oracle, qpoly, recurrences, verify
from .oracle import DEFAULT_MAX_CELLS, SizeCapExceeded, standard_tableaux
from .qpoly import ExactDivisionError, QPolynomial, q_int
from .tableaux import (
    Cell,
    DescentStats,
    Shape,
    ShapeError,
    Tableau,
    TableauError,
    UnsupportedShapeError,
    conjugate,
    descent_stats,
    hook_length,
    hook_lengths,
    is_standard,
    partitions_of,
    syt_count,
)
from .tables import CountTable, RefinedKey

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "CountTable",
    "DEFAULT_MAX_CELLS",
    "DescentStats",
    "ExactDivisionError",
    "QPolynomial",
    "RefinedKey",
    "Shape",
    "ShapeError",
    "SizeCapExceeded",
    "Tableau",
    "TableauError",
    "UnsupportedShapeError",
    "cli",
    "conjugate",
    "descent_stats",
    "formulas",
    "hook_length",
    "hook_lengths",
    "is_standard",
    "oracle",
    "partitions_of",
    "q_int",
    "qpoly",
    "recurrences",
    "standard_tableaux",
    "syt_count",
    "verify",
]

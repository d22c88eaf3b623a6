"""Partitions, Young diagrams, and standard Young tableaux.

Shapes are integer partitions stored row-first, tableaux are row-major
fillings by 1..n, and every count is an exact Python integer. Rows and
columns are indexed from 1 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class ShapeError(ValueError):
    """Malformed partition, or a cell outside its shape."""


class TableauError(ValueError):
    """A filling that violates a tableau operation's preconditions."""


class UnsupportedShapeError(ValueError):
    """The operation is only defined for specific shape classes."""


class Cell(NamedTuple):
    """1-based (row, column) position in a Young diagram."""

    row: int
    col: int


@dataclass(frozen=True)
class Shape:
    """Integer partition: weakly decreasing positive row lengths.

    ``Shape(())`` is the empty shape with zero cells; it has exactly one
    (empty) standard tableau, which keeps recursion bases uniform.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ShapeError(f"row lengths must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ShapeError(f"row lengths must be weakly decreasing, got {parts}")

    @classmethod
    def from_string(cls, text: str) -> "Shape":
        """Parse the shape grammar INT(,INT)*, e.g. ``"4,2,1"``."""
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ShapeError(
                f"cannot parse shape {text!r}: expected comma-separated weakly"
                " decreasing positive integers, e.g. '4,2,1'"
            ) from None
        return cls(parts)

    @property
    def n(self) -> int:
        """Total number of cells."""
        return sum(self.parts)

    @property
    def num_rows(self) -> int:
        return len(self.parts)

    def row_length(self, row: int) -> int:
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def col_length(self, col: int) -> int:
        """Number of cells in the 1-based column (a conjugate part)."""
        return sum(1 for p in self.parts if p >= col)

    def cells(self) -> Iterator[Cell]:
        """All cells, row-major."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield Cell(i, j)

    def contains(self, cell) -> bool:
        row, col = cell
        return 1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)


def is_hook(shape: Shape) -> bool:
    """True for shapes (n, 1, ..., 1), including a single row or column."""
    parts = shape.parts
    return len(parts) >= 1 and all(p == 1 for p in parts[1:])


def is_two_row(shape: Shape) -> bool:
    return len(shape.parts) == 2


def is_three_row_one(shape: Shape) -> bool:
    """True for shapes (n, m, 1): three rows, one cell in the third."""
    return len(shape.parts) == 3 and shape.parts[2] == 1


def conjugate(shape: Shape) -> Shape:
    """Transpose of the diagram: column lengths become row lengths."""
    if not shape.parts:
        return shape
    return Shape(tuple(shape.col_length(j) for j in range(1, shape.parts[0] + 1)))


def hook_length(shape: Shape, cell) -> int:
    """Cells to the right of, below, and including the given cell."""
    if not shape.contains(cell):
        raise ShapeError(f"cell {tuple(cell)} lies outside shape ({shape})")
    row, col = cell
    return shape.parts[row - 1] + shape.col_length(col) - row - col + 1


def hook_lengths(shape: Shape) -> list[int]:
    """Hook lengths of every cell, row-major."""
    ncols = shape.parts[0] if shape.parts else 0
    cols = [shape.col_length(j) for j in range(1, ncols + 1)]
    return [shape.parts[i - 1] + cols[j - 1] - i - j + 1 for i, j in shape.cells()]


def syt_count(shape: Shape) -> int:
    """Number of standard tableaux of the shape, by the hook-length count.

    n! is always divisible by the hook product; a remainder means a bug, so
    the division is checked rather than trusted.
    """
    num = math.factorial(shape.n)
    den = math.prod(hook_lengths(shape))
    if num % den:
        raise AssertionError(f"hook product {den} does not divide {shape.n}! -- bug")
    return num // den


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Shape]:
    """All partitions of n as shapes, largest first part first."""
    if n < 0:
        return
    if n == 0:
        yield Shape(())
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Shape((first, *rest.parts))


class Tableau:
    """A filling of a shape by 1..n, stored row-major.

    Construction checks that the rows form a partition shape and that the
    entries are a bijection onto 1..n. Whether the filling is *standard*
    (rows and columns strictly increasing) is a separate property, so
    non-standard fillings can be represented and rejected explicitly.
    """

    __slots__ = ("shape", "rows")

    def __init__(self, rows: Sequence[Sequence[int]] = ()):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        try:
            shape = Shape(tuple(len(row) for row in rows))
        except ShapeError as exc:
            raise TableauError(str(exc)) from None
        n = shape.n
        if sorted(v for row in rows for v in row) != list(range(1, n + 1)):
            raise TableauError(f"entries must be a bijection onto 1..{n}")
        self.shape = shape
        self.rows = rows

    @classmethod
    def from_string(cls, text: str) -> "Tableau":
        """Parse rows separated by "/" with space-separated entries,
        e.g. ``"1 3 6 7 / 2 4 8 / 5 / 9"``."""
        try:
            rows = [[int(tok) for tok in chunk.split()] for chunk in text.split("/")]
        except ValueError:
            raise TableauError(f"cannot parse tableau {text!r}") from None
        return cls(rows)

    def entry(self, cell) -> int:
        if not self.shape.contains(cell):
            raise ShapeError(f"cell {tuple(cell)} lies outside shape ({self.shape})")
        row, col = cell
        return self.rows[row - 1][col - 1]

    def row_of(self, value: int) -> int:
        """1-based row holding the value."""
        for i, row in enumerate(self.rows, start=1):
            if value in row:
                return i
        raise TableauError(f"{value} not present in tableau")

    def transpose(self) -> "Tableau":
        """Reflect across the main diagonal (conjugate the shape)."""
        cols = conjugate(self.shape).parts
        return Tableau(tuple(
            tuple(self.rows[i][j] for i in range(cols[j])) for j in range(len(cols))
        ))

    def reading_word(self) -> tuple[int, ...]:
        """Entries read row by row, left to right."""
        return tuple(v for row in self.rows for v in row)

    def __str__(self):
        return " / ".join(" ".join(str(v) for v in row) for row in self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]!r})"

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


def is_standard(t: Tableau) -> bool:
    """True iff rows increase left to right and columns increase downward."""
    rows = t.rows
    for row in rows:
        for j in range(len(row) - 1):
            if row[j] >= row[j + 1]:
                return False
    for i in range(len(rows) - 1):
        upper, lower = rows[i], rows[i + 1]
        for j in range(len(lower)):
            if upper[j] >= lower[j]:
                return False
    return True


@dataclass(frozen=True)
class DescentStats:
    """Descent set of a standard tableau with its two summary statistics."""

    descent_set: frozenset[int]
    des: int
    maj: int

    @classmethod
    def from_set(cls, descents) -> "DescentStats":
        dset = frozenset(descents)
        return cls(dset, len(dset), sum(dset))


def descent_stats(t: Tableau) -> DescentStats:
    """Descents of a standard tableau.

    An entry i is a descent when i+1 sits in a strictly lower row; the
    descent number counts them and the major index sums them.
    """
    if not is_standard(t):
        raise TableauError("descent statistics are only defined for standard tableaux")
    row_of = {}
    for i, row in enumerate(t.rows, start=1):
        for v in row:
            row_of[v] = i
    n = t.shape.n
    return DescentStats.from_set(i for i in range(1, n) if row_of[i + 1] > row_of[i])

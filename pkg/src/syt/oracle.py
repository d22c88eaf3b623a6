"""Exhaustive generation of standard tableaux: the ground-truth oracle.

Everything here walks the complete set of tableaux of a shape, so all
entry points are guarded by a configurable cell cap (default 16).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from .qpoly import QPolynomial
from .tableaux import Shape, Tableau, UnsupportedShapeError, descent_stats
from .tables import CountTable, RefinedKey

DEFAULT_MAX_CELLS = 16


class SizeCapExceeded(ValueError):
    """Enumeration refused: the shape exceeds the cell cap."""

    def __init__(self, shape: Shape, max_cells: int):
        super().__init__(
            f"shape ({shape}) has {shape.n} cells, above the enumeration cap"
            f" of {max_cells}; pass a larger max_cells to override"
        )
        self.shape = shape
        self.max_cells = max_cells


def standard_tableaux(shape: Shape, *, max_cells: int = DEFAULT_MAX_CELLS) -> Iterator[Tableau]:
    """Yield every standard tableau of the shape exactly once.

    The order is canonical: ascending lexicographic order of the
    row-reading word. Each call builds an independent stream, and
    consumers may stop early.
    """
    if shape.n > max_cells:
        raise SizeCapExceeded(shape, max_cells)
    return _fill(shape)


def _fill(shape: Shape) -> Iterator[Tableau]:
    # Backtracks over cells in row-major order, trying unused values in
    # ascending order, which yields reading words in lexicographic order.
    # A cell's entry is bounded below by the rectangle weakly above-left
    # of it and above by the room needed weakly below-right; these static
    # bounds prune almost every dead branch.
    parts = shape.parts
    n = shape.n
    if n == 0:
        yield Tableau(())
        return
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]
    lo_bound = []
    hi_bound = []
    for i, j in cells:
        lo_bound.append((i + 1) * (j + 1))
        below_right = sum(p - j for p in parts[i:] if p > j)
        hi_bound.append(n + 1 - below_right)
    grid = [[0] * p for p in parts]
    used = [False] * (n + 1)

    def fill(t: int) -> Iterator[Tableau]:
        if t == n:
            yield Tableau([tuple(row) for row in grid])
            return
        i, j = cells[t]
        floor = grid[i][j - 1] if j else 0
        if i and grid[i - 1][j] > floor:
            floor = grid[i - 1][j]
        for v in range(max(floor + 1, lo_bound[t]), hi_bound[t] + 1):
            if not used[v]:
                used[v] = True
                grid[i][j] = v
                yield from fill(t + 1)
                used[v] = False

    yield from fill(0)


def descent_distribution(shape: Shape, *, max_cells: int = DEFAULT_MAX_CELLS) -> CountTable:
    """Counts of tableaux by descent number, by exhaustion."""
    counts = Counter(
        descent_stats(t).des for t in standard_tableaux(shape, max_cells=max_cells)
    )
    return CountTable(shape, {RefinedKey(d): c for d, c in counts.items()})


def refined_distribution(shape: Shape, *, max_cells: int = DEFAULT_MAX_CELLS) -> CountTable:
    """Counts keyed by (d, k) for two-row shapes, or (d, k, c) for three-row
    shapes with a single cell in the third row.

    k is the entry at the end of the first row and c the entry in the
    third-row cell. Marginalizing over the refinements reproduces
    ``descent_distribution`` exactly.
    """
    parts = shape.parts
    if len(parts) == 2:
        def keyer(t: Tableau) -> RefinedKey:
            return RefinedKey(descent_stats(t).des, t.rows[0][-1])
    elif len(parts) == 3 and parts[2] == 1:
        def keyer(t: Tableau) -> RefinedKey:
            return RefinedKey(descent_stats(t).des, t.rows[0][-1], t.rows[2][0])
    else:
        raise UnsupportedShapeError(
            f"refined counts cover two-row shapes and (n,m,1) shapes, not ({shape})"
        )
    counts = Counter(keyer(t) for t in standard_tableaux(shape, max_cells=max_cells))
    return CountTable(shape, counts)


def major_index_gf(shape: Shape, *, max_cells: int = DEFAULT_MAX_CELLS) -> QPolynomial:
    """Generating function of the major index, by exhaustion."""
    counts = Counter(
        descent_stats(t).maj for t in standard_tableaux(shape, max_cells=max_cells)
    )
    coeffs = [0] * (max(counts) + 1)
    for maj, c in counts.items():
        coeffs[maj] = c
    return QPolynomial(coeffs)

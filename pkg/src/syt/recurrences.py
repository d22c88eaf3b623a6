"""Memoized solvers for the column-expansion recursions.

Appending a column to a two-row square, or cells to the row ends of an
(n, m, 1) shape, turns counts at size n into short sums of counts at size
n - 1. The solvers here evaluate those recursions top-down with a shared
write-once memo table that can be saved and restored as JSON.
"""

from __future__ import annotations

import json

from .tableaux import Shape
from .tables import CountTable, RefinedKey

SQUARE = "two-row-square"
THREE_ROW = "three-row"


class MemoWriteConflict(ValueError):
    """A memo key was rewritten with a different value."""


class MemoTable:
    """Write-once memo map shared by the recursive solvers.

    Keys pair a family tag with a parameter tuple: (two-row-square, n, d, k)
    or (three-row, n, m, d, k, c). Out-of-window parameters are never
    stored; their value is 0 by convention.
    """

    def __init__(self, data=None):
        self._data: dict[tuple, int] = dict(data or {})

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value: int):
        old = self._data.setdefault(key, value)
        if old != value:
            raise MemoWriteConflict(
                f"memo key {key} already holds {old}, refusing {value}"
            )

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def dump(self, path) -> None:
        """Write the table as a JSON map 'family:params' -> decimal string."""
        doc = {
            f"{key[0]}:{','.join(str(p) for p in key[1:])}": str(value)
            for key, value in sorted(self._data.items())
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=0, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "MemoTable":
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        data = {}
        for key_text, value_text in doc.items():
            family, _, params = key_text.partition(":")
            if family not in (SQUARE, THREE_ROW):
                raise ValueError(f"unknown memo family {family!r}")
            data[(family, *(int(p) for p in params.split(",")))] = int(value_text)
        return cls(data)


class _NullMemo:
    """Memoization disabled: every lookup misses, nothing is stored."""

    def get(self, key):
        return None

    def put(self, key, value):
        pass

    def __len__(self):
        return 0


def _resolve(memo):
    if memo is False:
        return _NullMemo()
    if memo is None:
        return MemoTable()
    return memo


def square_refined_count(n: int, d: int, k: int, memo=None) -> int:
    """Tableaux of (n, n) with d descents and k ending row 1, by recursion.

    Peeling the last column maps the count to counts for (n-1, n-1): the
    appended column either preserves k-1 as the old row-1 end (same d) or
    covers an old end a < k-1 (one more descent). The base is the single
    tableau of (1, 1). Matches the closed form on the whole window;
    out-of-window parameters give 0.

    ``memo`` may be a shared MemoTable, None for a private table, or False
    to disable memoization for differential testing.
    """
    return _square(n, d, k, _resolve(memo))


def _square(n, d, k, memo):
    if n < 1 or not 1 <= d <= n or not n <= k <= 2 * n - 1:
        return 0
    if n == 1:
        return 1
    key = (SQUARE, n, d, k)
    got = memo.get(key)
    if got is not None:
        return got
    total = _square(n - 1, d, k - 1, memo)
    for a in range(n - 1, min(k - 2, 2 * n - 3) + 1):
        total += _square(n - 1, d - 1, a, memo)
    memo.put(key, total)
    return total


def admissible(n: int, m: int, d: int, k: int, c: int) -> bool:
    """Necessary conditions for a nonzero (n, m, 1) count."""
    return (
        1 <= m <= n
        and n <= k <= n + m + 1
        and 3 <= c <= n + m + 1
        and 2 <= d <= m + 1
        and c != k
    )


def three_row_count(n: int, m: int, d: int, k: int, c: int, memo=None) -> int:
    """Tableaux of shape (n, m, 1) with d descents, k at the end of the
    first row and c in the third-row cell.

    For m < n the first row is one cell longer than at size n - 1, and the
    recursion splits on where k sits relative to c and to the maximal
    entry (four cases). The m = n family has its own recursion (see
    ``three_row_square_count``), which supplies the base values. Anything
    outside the feasibility window gives 0.
    """
    return _three(n, m, d, k, c, _resolve(memo))


def three_row_square_count(n: int, d: int, k: int, c: int, memo=None) -> int:
    """Tableaux of shape (n, n, 1) with the given statistics, by recursion.

    Six cases on (k, c), dispatched in listing order with the first match
    winning; the k = 2n and c = k+1 guards overlap at (2n, 2n+1), where
    both bodies agree (checked by the verify sweep). The base is the
    single column tableau at n = 1. For m = n the column bound forces
    k <= 2n, so k = 2n+1 matches no case and falls through to 0.
    """
    return _three_square(n, d, k, c, _resolve(memo))


def _three(n, m, d, k, c, memo):
    if m == n:
        return _three_square(n, d, k, c, memo)
    if not admissible(n, m, d, k, c):
        return 0
    key = (THREE_ROW, n, m, d, k, c)
    got = memo.get(key)
    if got is not None:
        return got
    lo = n - 1       # k-window of the (n-1, m, 1) family is [n-1, n+m]
    hi = n + m
    if k < c - 1:
        total = _three(n - 1, m, d, k - 1, c - 1, memo)
        for a in range(lo, min(k - 2, hi) + 1):
            total += _three(n - 1, m, d - 1, a, c - 1, memo)
    elif k == c - 1:
        total = 0
        for a in range(lo, min(k - 1, hi) + 1):
            total += _three(n - 1, m, d, a, c - 1, memo)
    elif k < n + m + 1:     # c < k by the dispatch above
        total = _three(n - 1, m, d, k - 1, c, memo)
        for a in range(lo, min(k - 2, hi) + 1):
            total += _three(n - 1, m, d - 1, a, c, memo)
    else:                   # k = n + m + 1: the maximal entry ends row 1
        total = 0
        for a in range(lo, hi + 1):
            total += _three(n - 1, m, d, a, c, memo)
    memo.put(key, total)
    return total


def _three_square_cases(n, d, k, c, memo):
    # Case bodies of the (n, n, 1) recursion, paired with their guards and
    # evaluated lazily so plain dispatch only computes the first match.
    def asum(dd, cc, a_max):
        total = 0
        for a in range(n - 1, min(a_max, 2 * n - 2) + 1):
            total += _three_square(n - 1, dd, a, cc, memo)
        return total

    cases = []
    if k == 2 * n:
        cases.append(("k=2n", lambda: asum(d - 1, c, k - 1)))
    if c == k + 1:
        cases.append(("c=k+1", lambda: asum(d, c - 1, k - 1)))
    if k == 2 * n - 1 and c == 2 * n + 1:
        cases.append(("k=2n-1,c=2n+1", lambda: asum(d - 1, c - 2, k - 1)))
    if c == 2 * n + 1 and k not in (2 * n - 1, 2 * n):
        cases.append(("c=2n+1", lambda: (
            _three_square(n - 1, d, k - 1, c - 2, memo) + asum(d - 1, c - 2, k - 2))))
    if k + 1 < c < 2 * n + 1:
        cases.append(("k+1<c<2n+1", lambda: (
            _three_square(n - 1, d, k - 1, c - 1, memo) + asum(d - 1, c - 1, k - 2))))
    if c < k < 2 * n:
        cases.append(("c<k<2n", lambda: (
            _three_square(n - 1, d, k - 1, c, memo) + asum(d - 1, c, k - 2))))
    return cases


def _three_square(n, d, k, c, memo):
    if n < 1 or not admissible(n, n, d, k, c):
        return 0
    if n == 1:
        return 1 if (d, k, c) == (2, 1, 3) else 0
    key = (THREE_ROW, n, n, d, k, c)
    got = memo.get(key)
    if got is not None:
        return got
    cases = _three_square_cases(n, d, k, c, memo)
    value = cases[0][1]() if cases else 0
    memo.put(key, value)
    return value


def three_row_square_cases(n: int, d: int, k: int, c: int, memo=None) -> list[tuple[str, int]]:
    """Evaluate every matching case of the (n, n, 1) recursion.

    Used by the verify sweep to confirm that overlapping guards agree;
    plain dispatch takes the first entry.
    """
    if n < 2 or not admissible(n, n, d, k, c):
        return []
    resolved = _resolve(memo)
    return [(name, body()) for name, body in _three_square_cases(n, d, k, c, resolved)]


def three_row_window(n: int, m: int):
    """All (d, k, c) triples passing the necessary conditions for (n, m, 1)."""
    for d in range(2, m + 2):
        for k in range(n, n + m + 2):
            for c in range(3, n + m + 2):
                if c != k:
                    yield d, k, c


def three_row_distribution(n: int, m: int, memo=None) -> CountTable:
    """Descent distribution of shape (n, m, 1), summing the refined
    recursion over all admissible (k, c)."""
    if not 1 <= m <= n:
        raise ValueError(f"shapes (n, m, 1) need n >= m >= 1, got ({n}, {m})")
    resolved = _resolve(memo)
    totals: dict[int, int] = {}
    for d, k, c in three_row_window(n, m):
        count = _three(n, m, d, k, c, resolved)
        if count:
            totals[d] = totals.get(d, 0) + count
    return CountTable(Shape((n, m, 1)), {RefinedKey(d): v for d, v in totals.items()})

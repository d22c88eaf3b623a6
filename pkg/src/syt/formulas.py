"""Closed-form descent counts: hook shapes, two-row shapes, and the
reduction identities for three-row shapes with a single third-row cell.

Counts carrying a leading rational factor are evaluated in exact rational
arithmetic and checked to be integers, instead of being rearranged into an
all-integer product; a non-integer value signals a bug or an out-of-domain
application.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .tableaux import Shape
from .tables import CountTable, RefinedKey


def binomial(a: int, b: int) -> int:
    """C(a, b), zero whenever a < 0, b < 0 or b > a."""
    return comb(a, b) if 0 <= b <= a else 0


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _exact_int(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise AssertionError(f"{context} produced non-integer {value} -- bug")
    return int(value)


def hook_distribution(n: int, m: int) -> CountTable:
    """Descent distribution of the hook shape (n, 1^m).

    The m first-column entries below the corner determine the tableau and
    each forces one descent, so all C(n+m-1, m) tableaux have exactly m
    descents.
    """
    if n < 1 or m < 0:
        raise ValueError(f"hook shapes need n >= 1 and m >= 0, got ({n}, {m})")
    shape = Shape((n,) + (1,) * m)
    return CountTable(shape, {RefinedKey(m): comb(n + m - 1, m)})


def square_refined_count(n: int, d: int, k: int) -> int:
    """Tableaux of shape (n, n) with d descents and k at the end of row 1.

    Zero outside the window n >= 1, 1 <= d <= n, n <= k < 2n.
    """
    if n < 1 or not 1 <= d <= n or not n <= k < 2 * n:
        return 0
    if d == 1:
        return 1 if k == n else 0
    if k < n + d - 1:
        return 0
    value = (Fraction(2 * n - k, d - 1)
             * binomial(k - n - 1, d - 2) * binomial(n - 1, d - 2))
    return _exact_int(value, f"square refined count ({n}, {d}, {k})")


def square_descent_count(n: int, d: int) -> int:
    """Tableaux of shape (n, n) with d descents: the Narayana number.

    Summing over d from 1 to n gives the Catalan number of n.
    """
    if n < 1 or not 1 <= d <= n:
        return 0
    value = Fraction(binomial(n - 1, d - 1) * binomial(n, d - 1), d)
    return _exact_int(value, f"Narayana count ({n}, {d})")


def two_row_refined_count(n: int, m: int, d: int, k: int) -> int:
    """Tableaux of shape (n, m) with d descents and k ending the first row.

    Appending entries larger than everything in row 2 identifies (n, m)
    tableaux with (n, n) ones; the descent number shifts by one exactly
    when k = n + m, so counts transfer from the equal-rows case.
    """
    if not 1 <= m <= n or not n <= k <= n + m:
        return 0
    if k == n + m:
        return square_refined_count(n, d + 1, k)
    return square_refined_count(n, d, k)


def two_row_descent_count(n: int, m: int, d: int) -> int:
    """Tableaux of shape (n, m) with d descents; zero unless 1 <= d <= m <= n."""
    if not 1 <= d <= m <= n:
        return 0
    value = (Fraction(n - m + 1, d)
             * binomial(m - 1, d - 1) * binomial(n, d - 1))
    return _exact_int(value, f"two-row descent count ({n}, {m}, {d})")


def two_row_distribution(n: int, m: int) -> CountTable:
    """Full descent distribution of the two-row shape (n, m)."""
    if not 1 <= m <= n:
        raise ValueError(f"two-row shapes need n >= m >= 1, got ({n}, {m})")
    return CountTable(Shape((n, m)), {
        RefinedKey(d): two_row_descent_count(n, m, d) for d in range(1, m + 1)
    })


class _NotCovered:
    """Outcome of the three-row reduction when no deletion argument applies."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotCovered"

    def __bool__(self):
        return False


NOT_COVERED = _NotCovered()


def three_row_reduction_branches(n: int, m: int, d: int, k: int, c: int) -> list[tuple[str, int]]:
    """Every applicable reduction branch for shape (n, m, 1), with values.

    Branch guards can overlap (a maximal c also satisfies k = c-1 or
    k < c-1); callers choose precedence, and the verify sweep checks that
    overlapping branches agree.
    """
    branches = []
    if c == n + m + 1:
        branches.append(("c-maximal", two_row_refined_count(n, m, d - 1, k)))
    if k == c - 1:
        branches.append(("k=c-1", square_refined_count(n, d, k)))
    if k < c - 1:
        branches.append(("k<c-1", square_refined_count(n, d - 1, k)))
    return branches


def three_row_reduction(n: int, m: int, d: int, k: int, c: int):
    """Count for shape (n, m, 1) with d descents, k ending the first row
    and c in the third-row cell, by deleting cells down to two rows.

    Removing a maximal c costs one descent and leaves an (n, m) tableau;
    for k < c one can first shorten the second row until c is maximal,
    landing in an (n, n) count. No deletion argument covers k > c, for
    which the distinguished NOT_COVERED value is returned. Parameters
    outside the feasibility window give 0.
    """
    if not 1 <= m <= n:
        raise ValueError(f"shapes (n, m, 1) need n >= m >= 1, got ({n}, {m})")
    if k == c:
        raise ValueError("k and c occupy different cells, so k != c")
    if k > c:
        return NOT_COVERED
    return three_row_reduction_branches(n, m, d, k, c)[0][1]

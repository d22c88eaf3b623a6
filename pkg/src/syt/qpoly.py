"""Exact polynomials in q with integer coefficients, and the hook-length
product form of the major-index generating function."""

from __future__ import annotations

from typing import Iterable

from .tableaux import Shape, hook_lengths


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a remainder or a fractional coefficient."""


class QPolynomial:
    """Polynomial in q, coefficients indexed by exponent.

    Trailing zero coefficients are stripped at construction, so equality is
    plain sequence comparison and the zero polynomial is the empty tuple
    (degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise ValueError(f"exponent must be non-negative, got {exponent}")
        return cls((0,) * exponent + (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return QPolynomial(out)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return QPolynomial(out)

    def exact_divide(self, other: "QPolynomial") -> "QPolynomial":
        """Quotient q with self = other * q, or raise if none exists."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return QPolynomial()
        if self.degree < other.degree:
            raise ExactDivisionError(f"{self!r} is not divisible by {other!r}")
        rem = list(self.coeffs)
        div = other.coeffs
        dlead = div[-1]
        ddeg = len(div) - 1
        quot = [0] * (len(rem) - ddeg)
        for i in range(len(rem) - 1, ddeg - 1, -1):
            r = rem[i]
            if r == 0:
                continue
            if r % dlead:
                raise ExactDivisionError(f"{self!r} is not divisible by {other!r}")
            q = r // dlead
            quot[i - ddeg] = q
            for j, dc in enumerate(div):
                rem[i - ddeg + j] -= q * dc
        if any(rem):
            raise ExactDivisionError(f"{self!r} is not divisible by {other!r}")
        return QPolynomial(quot)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point (exact)."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def to_decimal_strings(self) -> list[str]:
        """Coefficients as decimal strings, constant term first."""
        return [str(c) for c in self.coeffs]

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            power = "q" if e == 1 else f"q^{e}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}{power}")
        return " + ".join(terms).replace("+ -", "- ")


def q_int(m: int) -> QPolynomial:
    """The q-analog of m: 1 + q + ... + q^(m-1), so q_int(m)(1) == m."""
    if m < 1:
        raise ValueError(f"q-integers are defined for m >= 1, got {m}")
    return QPolynomial((1,) * m)


def major_index_gf(shape: Shape) -> QPolynomial:
    """Major-index generating function of a shape via hook lengths.

    Multiplies the q-integers of 1..n, divides by the q-integer of each
    hook length, and shifts by q to the staircase exponent
    sum(i * parts[i], i from 0). Division proceeds one hook at a time;
    that may transiently fail even though the final quotient is a
    polynomial, in which case the whole denominator product is divided
    out in one step.
    """
    parts = shape.parts
    num = QPolynomial.one()
    for k in range(2, shape.n + 1):
        num = num * q_int(k)
    hooks = sorted((h for h in hook_lengths(shape) if h > 1), reverse=True)
    poly = num
    try:
        for h in hooks:
            poly = poly.exact_divide(q_int(h))
    except ExactDivisionError:
        den = QPolynomial.one()
        for h in hooks:
            den = den * q_int(h)
        try:
            poly = num.exact_divide(den)
        except ExactDivisionError:
            raise AssertionError(
                f"hook q-integers do not divide the q-factorial for shape ({shape}) -- bug"
            ) from None
    if any(c < 0 for c in poly.coeffs):
        raise AssertionError(
            f"negative coefficient in major-index gf for shape ({shape}) -- bug"
        )
    shift = sum(i * p for i, p in enumerate(parts))
    return poly * QPolynomial.monomial(shift)

"""Sparse multivariate polynomials with exact rational coefficients.

Terms map exponent tuples to nonzero Fractions.  The variable count is
fixed per polynomial and all arithmetic demands matching counts, which
keeps exponent tuples aligned without a symbol table.  Only the small
feature set needed by the unipotent-flow pipeline lives here: ring
arithmetic, substitution, evaluation, and enough univariate structure
(derivative, gcd, distinct-root counting) to classify zero sets.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Poly",
    "Rat",
    "as_fraction",
    "univariate_gcd",
    "distinct_root_count",
    "rational_square_root",
    "solve_linear",
]

Rat = int | Fraction


def as_fraction(value: Rat) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """A sparse polynomial over the rationals in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for expo, coeff in terms.items():
                coeff = as_fraction(coeff)
                if coeff:
                    if len(expo) != nvars:
                        raise ValueError("exponent tuple length mismatch")
                    self.terms[tuple(expo)] = coeff

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: Rat) -> "Poly":
        value = as_fraction(value)
        if not value:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, nvars: int, index: int, coeff: Rat = 1) -> "Poly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        expo = tuple(1 if j == index else 0 for j in range(nvars))
        return cls(nvars, {expo: as_fraction(coeff)})

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(expo) for expo in self.terms)

    def constant_value(self) -> Fraction:
        """The constant term (the whole value if the polynomial is constant)."""
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def variables_used(self) -> tuple[int, ...]:
        used = set()
        for expo in self.terms:
            for i, e in enumerate(expo):
                if e:
                    used.add(i)
        return tuple(sorted(used))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(expo) for expo in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(expo[index] for expo in self.terms)

    def coeff_in_var(self, index: int, power: int) -> "Poly":
        """Collect terms with the given power of one variable, that power removed."""
        out: dict[tuple[int, ...], Fraction] = {}
        for expo, coeff in self.terms.items():
            if expo[index] == power:
                reduced = list(expo)
                reduced[index] = 0
                out[tuple(reduced)] = coeff
        return Poly(self.nvars, out)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "Poly | Rat") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            total = out.get(expo, Fraction(0)) + coeff
            if total:
                out[expo] = total
            else:
                out.pop(expo, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {expo: -coeff for expo, coeff in self.terms.items()})

    def __sub__(self, other: "Poly | Rat") -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other: Rat) -> "Poly":
        return Poly.const(self.nvars, other) - self

    def __mul__(self, other: "Poly | Rat") -> "Poly":
        if not isinstance(other, Poly):
            scalar = as_fraction(other)
            if not scalar:
                return Poly(self.nvars)
            return Poly(self.nvars, {expo: coeff * scalar for expo, coeff in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                total = out.get(expo, Fraction(0)) + c1 * c2
                if total:
                    out[expo] = total
                else:
                    out.pop(expo, None)
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, index: int, replacement: "Poly | Rat") -> "Poly":
        """Replace one variable by a polynomial (or constant) in the same ring."""
        if not isinstance(replacement, Poly):
            replacement = Poly.const(self.nvars, replacement)
        self._check(replacement)
        top = self.degree_in(index)
        if top <= 0 and not self.terms:
            return Poly(self.nvars)
        # Horner evaluation in the chosen variable.
        result = Poly(self.nvars)
        for power in range(max(top, 0), -1, -1):
            result = result * replacement + self.coeff_in_var(index, power)
        return result

    def evaluate(self, point: tuple[Rat, ...]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point length mismatch")
        values = [as_fraction(v) for v in point]
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, expo):
                if e:
                    term *= v**e
            total += term
        return total

    # -- univariate helpers --------------------------------------------------

    def univariate_coeffs(self, index: int) -> list[Fraction]:
        """Coefficient list [c0, c1, ...] if the polynomial uses only one variable."""
        used = self.variables_used()
        if used not in ((), (index,)):
            raise ValueError("polynomial is not univariate in the requested variable")
        degree = max(self.degree_in(index), 0)
        coeffs = [Fraction(0)] * (degree + 1)
        for expo, coeff in self.terms.items():
            coeffs[expo[index]] = coeff
        return coeffs

    def derivative(self, index: int) -> "Poly":
        out: dict[tuple[int, ...], Fraction] = {}
        for expo, coeff in self.terms.items():
            e = expo[index]
            if e:
                reduced = list(expo)
                reduced[index] = e - 1
                key = tuple(reduced)
                out[key] = out.get(key, Fraction(0)) + coeff * e
        return Poly(self.nvars, out)

    # -- display -------------------------------------------------------------

    def format(self, names: tuple[str, ...] | None = None) -> str:
        """Deterministic human-readable rendering, graded-lex term order."""
        if names is None:
            names = tuple(f"z{i + 1}" for i in range(self.nvars))
        if len(names) != self.nvars:
            raise ValueError("name count mismatch")
        if not self.terms:
            return "0"
        pieces = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            coeff = self.terms[expo]
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(expo)
                if e
            ]
            if not factors:
                body = str(coeff)
            elif coeff == 1:
                body = "*".join(factors)
            elif coeff == -1:
                body = "-" + "*".join(factors)
            else:
                body = "*".join([str(coeff), *factors])
            pieces.append(body)
        text = pieces[0]
        for piece in pieces[1:]:
            text += piece if piece.startswith("-") else "+" + piece
        return text

    def __repr__(self) -> str:
        return f"Poly({self.format()})"


def _univariate_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Polynomial division on coefficient lists (ascending order)."""
    num = list(num)
    dn = len(den) - 1
    while den and not den[-1]:
        den.pop()
        dn -= 1
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    quot = [Fraction(0)] * max(len(num) - dn, 0)
    while len(num) - 1 >= dn and any(num):
        while num and not num[-1]:
            num.pop()
        if len(num) - 1 < dn:
            break
        shift = len(num) - 1 - dn
        factor = num[-1] / den[-1]
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
    while num and not num[-1]:
        num.pop()
    return quot, num


def univariate_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of two univariate coefficient lists (ascending order)."""
    a = [as_fraction(c) for c in a]
    b = [as_fraction(c) for c in b]
    while b and any(b):
        _, r = _univariate_divmod(a, b)
        a, b = b, r
    while a and not a[-1]:
        a.pop()
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def distinct_root_count(coeffs: list[Fraction]) -> int:
    """Number of distinct complex roots of a nonzero univariate polynomial."""
    coeffs = [as_fraction(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise ValueError("the zero polynomial has no root count")
    degree = len(coeffs) - 1
    if degree == 0:
        return 0
    deriv = [c * i for i, c in enumerate(coeffs)][1:]
    common = univariate_gcd(coeffs, deriv)
    return degree - (len(common) - 1)


def rational_square_root(value: Fraction) -> Fraction | None:
    """The exact nonnegative square root of a rational, or None."""
    value = as_fraction(value)
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    sn, sd = math.isqrt(num), math.isqrt(den)
    if sn * sn == num and sd * sd == den:
        return Fraction(sn, sd)
    return None


def solve_linear(matrix: list[list[Rat]], rhs: list[Rat]) -> list[Fraction]:
    """Solve a square exact linear system by Gaussian elimination.

    Raises ValueError when the matrix is singular.
    """
    n = len(matrix)
    rows = [[as_fraction(c) for c in row] + [as_fraction(r)] for row, r in zip(matrix, rhs)]
    if any(len(row) != n + 1 for row in rows):
        raise ValueError("matrix must be square and match the right-hand side")
    for col in range(n):
        pivot = next((k for k in range(col, n) if rows[k][col]), None)
        if pivot is None:
            raise ValueError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [c / lead for c in rows[col]]
        for k in range(n):
            if k != col and rows[k][col]:
                factor = rows[k][col]
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[col])]
    return [rows[k][n] for k in range(n)]

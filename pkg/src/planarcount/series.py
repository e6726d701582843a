"""Truncated power series with exact rational coefficients.

Just enough arithmetic for determinants of matrices of modified Bessel
series: addition, multiplication modulo x^(M+1), and exact coefficient
access.  All coefficients are `fractions.Fraction`, so values are always in
lowest terms with positive denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial


@dataclass(frozen=True)
class RationalSeries:
    """Map degree -> coefficient, truncated above degree `truncation`."""

    truncation: int
    coefficients: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if self.truncation < 0:
            raise ValueError("truncation degree must be >= 0")
        degrees = [deg for deg, _ in self.coefficients]
        if len(set(degrees)) != len(degrees):
            raise ValueError("duplicate degrees")
        if any(deg < 0 or deg > self.truncation for deg in degrees):
            raise ValueError("degrees must lie in [0, truncation]")

    @classmethod
    def from_dict(cls, coeffs: dict, truncation: int) -> "RationalSeries":
        items = tuple(
            sorted((deg, Fraction(c)) for deg, c in coeffs.items() if c != 0)
        )
        return cls(truncation=truncation, coefficients=items)

    @classmethod
    def zero(cls, truncation: int) -> "RationalSeries":
        return cls(truncation=truncation, coefficients=())

    @classmethod
    def one(cls, truncation: int) -> "RationalSeries":
        return cls.from_dict({0: Fraction(1)}, truncation)

    def coefficient(self, degree: int) -> Fraction:
        for deg, c in self.coefficients:
            if deg == degree:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coefficients)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        m = min(self.truncation, other.truncation)
        out = {deg: c for deg, c in self.coefficients if deg <= m}
        for deg, c in other.coefficients:
            if deg <= m:
                out[deg] = out.get(deg, Fraction(0)) + c
        return RationalSeries.from_dict(out, m)

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(
            truncation=self.truncation,
            coefficients=tuple((deg, -c) for deg, c in self.coefficients),
        )

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + (-other)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        m = min(self.truncation, other.truncation)
        out: dict[int, Fraction] = {}
        for d1, c1 in self.coefficients:
            if d1 > m:
                continue
            for d2, c2 in other.coefficients:
                deg = d1 + d2
                if deg > m:
                    continue
                out[deg] = out.get(deg, Fraction(0)) + c1 * c2
        return RationalSeries.from_dict(out, m)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for deg, c in self.coefficients:
            if deg == 0:
                parts.append(str(c))
            elif deg == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{deg}")
        return " + ".join(parts)


def bessel_series(nu: int, truncation: int) -> RationalSeries:
    """Truncation of the modified Bessel function I_nu evaluated at 2x:
    sum over j >= 0 of x^(2j+nu) / (j! (j+nu)!)."""
    if nu < 0:
        raise ValueError("order must be >= 0")
    coeffs = {}
    j = 0
    while 2 * j + nu <= truncation:
        coeffs[2 * j + nu] = Fraction(1, factorial(j) * factorial(j + nu))
        j += 1
    return RationalSeries.from_dict(coeffs, truncation)


def series_determinant(matrix: list[list[RationalSeries]]) -> RationalSeries:
    """Determinant by cofactor expansion along the first row; division-free,
    fine for the tiny matrices used here."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("matrix must be square")
    if size == 0:
        raise ValueError("empty matrix")
    if size == 1:
        return matrix[0][0]
    total = None
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = matrix[0][j] * series_determinant(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total

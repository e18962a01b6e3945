"""Exact univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError


class IntPolynomial:
    """Polynomial with exact rational coefficients, stored low to high.

    Coefficient lists are normalized so the trailing coefficient is nonzero;
    the zero polynomial has an empty list.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, m) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integer():
            raise ValidationError(f"polynomial {self} has non-integer coefficients")
        return tuple(c.numerator for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPolynomial(0)"
        terms = " + ".join(
            f"{c}*x^{k}" if k else str(c) for k, c in enumerate(self.coeffs)
        )
        return f"IntPolynomial({terms})"


def interpolate(points: Sequence[tuple[int, Fraction]]) -> IntPolynomial:
    """Lagrange interpolation through distinct sample points, done exactly."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValidationError("interpolation nodes must be distinct")
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        # numerator polynomial prod_{j != i} (x - x_j), built coefficient-wise
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= Fraction(xj) * basis[k + 1]
            denom *= Fraction(xi) - Fraction(xj)
        scale = Fraction(yi) / denom
        for k in range(len(basis)):
            coeffs[k] += scale * basis[k]
    return IntPolynomial(coeffs)

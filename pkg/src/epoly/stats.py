"""Ehrhart h*-polynomials, gamma expansions, and d-vectors."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb, factorial

from .errors import ValidationError, VerificationError
from .geometry import PolytopeKind, ehrhart
from .polynomial import IntPolynomial
from .poset import Poset, linear_extensions
from .triangulation import FlagVectors

VIA_GAMMA = "via_gamma"
VIA_PEAKS = "via_peaks"


def hstar_from_ehrhart(L: IntPolynomial, d: int) -> IntPolynomial:
    """Numerator of sum_m L(m) x^m over (1-x)^(d+1).

    Expanding the geometric series gives h*_j as the alternating binomial
    sum of L(j), ..., L(j-d-1).  The result must have nonnegative integer
    coefficients summing to the normalized volume; anything else signals a
    broken count upstream.
    """
    if L.degree != d:
        raise ValidationError(f"degree {L.degree} polynomial for dimension {d}")
    if L(0) != 1:
        raise ValidationError("counting polynomial must take value 1 at 0")
    coeffs = []
    for j in range(d + 1):
        acc = sum(
            ((-1) ** i * comb(d + 1, i)) * L(j - i) for i in range(j + 1)
        )
        if acc.denominator != 1 or acc < 0:
            raise VerificationError(f"h* coefficient {j} came out as {acc}")
        coeffs.append(acc)
    total = sum(coeffs, Fraction(0))
    if total != factorial(d) * L.coefficient(d):
        raise VerificationError("h* coefficients do not sum to the volume")
    return IntPolynomial(coeffs)


def gamma_polynomial(h: IntPolynomial, d: int) -> IntPolynomial:
    """Coefficients of h in the basis x^i (1+x)^(d-2i).

    Only palindromic h (coefficient i equal to coefficient d-i) expand this
    way; the expansion is found by eliminating coefficients from the bottom.
    """
    if h.degree > d:
        raise ValidationError(f"degree {h.degree} exceeds dimension {d}")
    if any(h.coefficient(i) != h.coefficient(d - i) for i in range(d + 1)):
        raise ValidationError("polynomial is not palindromic")
    rem = [h.coefficient(i) for i in range(d + 1)]
    gammas = []
    for i in range(d // 2 + 1):
        g = rem[i]
        gammas.append(g)
        for k in range(d - 2 * i + 1):
            rem[i + k] -= g * comb(d - 2 * i, k)
    if any(rem):
        raise VerificationError("gamma elimination left a nonzero remainder")
    return IntPolynomial(gammas)


def d_vector(P: Poset, route: str) -> tuple[int, ...]:
    """The d-vector of P, of length floor(d/2)+1.

    via_gamma divides the gamma coefficients of h*(eO(P)) by powers of 2;
    via_peaks scales the left-peak distribution of the linear extensions by
    the same powers.  The two routes agreeing is a theorem, and a test.
    """
    n = P.d // 2 + 1
    if route == VIA_GAMMA:
        h = hstar_from_ehrhart(ehrhart(PolytopeKind.ENRICHED_ORDER, P), P.d)
        g = gamma_polynomial(h, P.d)
        out = []
        for i in range(n):
            q = Fraction(g.coefficient(i), 1 << i)
            if q.denominator != 1 or q < 0:
                raise VerificationError(
                    f"gamma coefficient {i} is not divisible by 2^{i}"
                )
            out.append(int(q))
        return tuple(out)
    if route == VIA_PEAKS:
        dist = Counter(ext.left_peaks for ext in linear_extensions(P))
        return tuple((1 << i) * dist.get(i, 0) for i in range(n))
    raise ValidationError(f"unknown d-vector route {route!r}")


def h_polynomial_from_flags(F: FlagVectors) -> IntPolynomial:
    """h-polynomial of the order complex: h_i sums h_S over |S| = i."""
    coeffs = [0] * (F.d + 1)
    for S, val in F.h.items():
        coeffs[len(S)] += val
    return IntPolynomial(coeffs)

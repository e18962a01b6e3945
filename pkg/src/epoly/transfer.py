"""Chain functionals and the transfer maps between poset polytopes."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ValidationError
from .points import PointFn, Signature
from .poset import PChain, Poset


def _chain_elems(f: PointFn, C) -> tuple[int, ...]:
    elems = C.elems if isinstance(C, PChain) else tuple(C)
    if not elems:
        raise ValidationError("chain functionals need a nonempty chain")
    for v in elems:
        if not 0 <= v < f.poset.d:
            raise ValidationError(f"chain element {v} outside the poset")
    return elems


def chain_functionals(f: PointFn, C) -> tuple[Fraction, Fraction, Fraction]:
    """Evaluate S, T+ and T- of f on a chain v1 > v2 > ... > vr.

    S sums |f(v_i)|.  T+ is -f(v1) - 2 f(v2) - ... - 2^(r-2) f(v_{r-1})
    + 2^(r-1) f(vr), and T- flips the sign of the last term; a singleton
    chain gives T+ = f(v) and T- = -f(v).
    """
    elems = _chain_elems(f, C)
    r = len(elems)
    s = sum((abs(f.values[v]) for v in elems), Fraction(0))
    body = sum(
        ((-(1 << i)) * f.values[elems[i]] for i in range(r - 1)), Fraction(0)
    )
    last = (1 << (r - 1)) * f.values[elems[r - 1]]
    return s, body + last, body - last


def _descent_tables(P: Poset, absvals: Sequence[Fraction]):
    """Best saturated-descent sums: below[v] for chains topped at v running
    to a minimal element, and strict[v] for the region strictly under v."""
    below = [Fraction(0)] * P.d
    strict = [Fraction(0)] * P.d
    for v in P.canonical_extension:
        best = Fraction(0)
        for w in P.lower_covers[v]:
            if below[w] > best:
                best = below[w]
        strict[v] = best
        below[v] = absvals[v] + best
    return below, strict


def max_chain_sum(g: PointFn, region: str = "all", element=None) -> Fraction:
    """Maximum of S(g; C) over maximal chains of P, P_{<=v}, or P_{<v}.

    An empty region contributes 0.
    """
    P = g.poset
    absvals = [abs(x) for x in g.values]
    below, strict = _descent_tables(P, absvals)
    if region == "all":
        return max((below[v] for v in P.maximals), default=Fraction(0))
    v = P.as_index(element)
    if region == "below":
        return below[v]
    if region == "strictly_below":
        return strict[v]
    raise ValidationError(f"unknown region {region!r}")


def stanley_phi(f: PointFn) -> PointFn:
    """Transfer map: keep minimal values, elsewhere subtract the largest
    value on a lower cover."""
    P = f.poset
    out = list(f.values)
    for v in range(P.d):
        lows = P.lower_covers[v]
        if lows:
            out[v] = f.values[v] - max(f.values[w] for w in lows)
    return PointFn(P, out)


def enriched_phi(f: PointFn) -> PointFn:
    """Enriched transfer map, evaluated by dynamic programming.

    Along a linear extension, g(v) = f(v) minus the best chain sum of |g|
    over maximal chains strictly under v (0 when v is minimal).
    """
    P = f.poset
    out: list[Fraction] = [Fraction(0)] * P.d
    below = [Fraction(0)] * P.d
    for v in P.canonical_extension:
        best = Fraction(0)
        for w in P.lower_covers[v]:
            if below[w] > best:
                best = below[w]
        out[v] = f.values[v] - best
        below[v] = abs(out[v]) + best
    return PointFn(P, out)


def enriched_psi(g: PointFn) -> PointFn:
    """Inverse enriched transfer map: add back the best chain sum of |g|
    over maximal chains strictly under each element."""
    P = g.poset
    absvals = [abs(x) for x in g.values]
    _, strict = _descent_tables(P, absvals)
    return PointFn(P, [g.values[v] + strict[v] for v in range(P.d)])


def stanley_psi(g: PointFn) -> PointFn:
    """Inverse transfer map on nonnegative points; coincides with the
    enriched inverse there."""
    if any(x < 0 for x in g.values):
        raise ValidationError("inverse transfer needs a nonnegative point")
    return enriched_psi(g)


def reflect(phi: Signature, g: PointFn) -> PointFn:
    """Reflection R_phi: negate the coordinates where phi is -1."""
    if phi.poset != g.poset:
        raise ValidationError("signature lives on a different poset")
    return PointFn(
        g.poset,
        [-x if s == -1 else x for s, x in zip(phi.values, g.values)],
    )


def check_left_enriched(h: PointFn, m: int | None = None) -> None:
    """Validate the left enriched partition conditions, raising on failure.

    Along every strict comparability v < w the absolute values must not
    decrease, ties force h(w) >= 0, and with m given |h| must stay <= m.
    Both conditions propagate along covers, so covers are what is checked.
    """
    if not h.is_integral():
        raise ValidationError("left enriched partitions are integer valued")
    P = h.poset
    for a, b in P.covers:
        if abs(h.values[a]) > abs(h.values[b]):
            raise ValidationError(
                f"|h| decreases along {P.elements[a]} < {P.elements[b]}"
            )
        if abs(h.values[a]) == abs(h.values[b]) and h.values[b] < 0:
            raise ValidationError(
                f"tie along {P.elements[a]} < {P.elements[b]} needs "
                f"h({P.elements[b]}) >= 0"
            )
    if m is not None and any(abs(x) > m for x in h.values):
        raise ValidationError(f"|h| exceeds the bound {m}")


def is_left_enriched(h: PointFn, m: int | None = None) -> bool:
    try:
        check_left_enriched(h, m)
    except ValidationError:
        return False
    return True


def _cover_abs_max(h: PointFn, v: int) -> Fraction:
    return max(abs(h.values[w]) for w in h.poset.lower_covers[v])


def pi_map(h: PointFn, m: int) -> PointFn:
    """Bijection onto the integer points of the dilated enriched chain
    polytope: shift each non-minimal value toward zero by the largest
    absolute value on a lower cover."""
    check_left_enriched(h, m)
    P = h.poset
    out = list(h.values)
    for v in range(P.d):
        if P.lower_covers[v]:
            step = _cover_abs_max(h, v)
            out[v] = h.values[v] - step if h.values[v] >= 0 else h.values[v] + step
    return PointFn(P, out)


def theta_map(h: PointFn, m: int) -> PointFn:
    """Bijection onto the integer points of the dilated enriched order
    polytope: negative non-minimal values gain twice the largest absolute
    value on a lower cover, everything else is kept."""
    check_left_enriched(h, m)
    P = h.poset
    out = list(h.values)
    for v in range(P.d):
        if P.lower_covers[v] and h.values[v] < 0:
            out[v] = h.values[v] + 2 * _cover_abs_max(h, v)
    return PointFn(P, out)

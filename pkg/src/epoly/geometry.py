"""Exact geometry of the four poset polytopes.

Membership and vertex computations run in rational arithmetic throughout;
lattice enumeration compiles each polytope into an integer inequality
system and hands it to the box-scan backends.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import scan
from .errors import ValidationError, VerificationError
from .points import (
    PointFn,
    enumerate_signed_antichains,
    enumerate_signed_filters,
    support_preceq,
)
from .polynomial import IntPolynomial, interpolate
from .poset import Poset, antichains, order_filters
from .simplex_lp import equality_feasible
from .transfer import chain_functionals


class PolytopeKind(Enum):
    ORDER = "o"
    CHAIN = "c"
    ENRICHED_ORDER = "eo"
    ENRICHED_CHAIN = "ec"

    @classmethod
    def parse(cls, code: str) -> "PolytopeKind":
        for kind in cls:
            if kind.value == code:
                return kind
        raise ValidationError(f"unknown polytope kind {code!r}")

    @property
    def enriched(self) -> bool:
        return self in (PolytopeKind.ENRICHED_ORDER, PolytopeKind.ENRICHED_CHAIN)


def membership(kind: PolytopeKind, x: PointFn, m) -> bool:
    """Exact test for x in the m-th dilate of the given polytope.

    Every defining functional is homogeneous, so dilation just scales the
    right-hand sides from 1 to m.
    """
    m = Fraction(m)
    if m < 0:
        raise ValidationError("negative dilate")
    P = x.poset
    if kind is PolytopeKind.ENRICHED_ORDER:
        for C in P.saturated_chains_topped_at_max:
            if chain_functionals(x, C)[1] > m:
                return False
        return all(chain_functionals(x, C)[2] <= m for C in P.maximal_chains)
    if kind is PolytopeKind.ENRICHED_CHAIN:
        return all(chain_functionals(x, C)[0] <= m for C in P.maximal_chains)
    if kind is PolytopeKind.ORDER:
        if any(q < 0 or q > m for q in x.values):
            return False
        return all(x.values[a] <= x.values[b] for a, b in P.covers)
    if kind is PolytopeKind.CHAIN:
        if any(q < 0 for q in x.values):
            return False
        return all(
            sum(x.values[v] for v in C) <= m for C in P.maximal_chains
        )
    raise ValidationError(f"unknown polytope kind {kind!r}")


def _t_row(d: int, elems: Sequence[int], last_sign: int) -> list[int]:
    # elems run top-down; the weight doubles down the chain and the bottom
    # element carries the full 2^(r-1) with the requested sign.
    row = [0] * d
    r = len(elems)
    for i in range(r - 1):
        row[elems[i]] = -(1 << i)
    row[elems[r - 1]] = last_sign * (1 << (r - 1))
    return row


@lru_cache(maxsize=None)
def _scan_system(P: Poset, kind: PolytopeKind):
    d = P.d
    A: list[list[int]] = []
    b: list[int] = []
    B: list[list[int]] = []
    c: list[int] = []
    if kind is PolytopeKind.ENRICHED_ORDER:
        for C in P.saturated_chains_topped_at_max:
            A.append(_t_row(d, C, +1))
            b.append(1)
        for C in P.maximal_chains:
            A.append(_t_row(d, C, -1))
            b.append(1)
    elif kind in (PolytopeKind.ENRICHED_CHAIN, PolytopeKind.CHAIN):
        for C in P.maximal_chains:
            row = [0] * d
            for v in C:
                row[v] = 1
            B.append(row)
            c.append(1)
    elif kind is PolytopeKind.ORDER:
        for a, w in P.covers:
            row = [0] * d
            row[a] = 1
            row[w] = -1
            A.append(row)
            b.append(0)
    else:
        raise ValidationError(f"unknown polytope kind {kind!r}")
    return (
        np.array(A, dtype=np.int64).reshape(len(A), d),
        np.array(b, dtype=np.int64),
        np.array(B, dtype=np.int64).reshape(len(B), d),
        np.array(c, dtype=np.int64),
    )


def _check_dilate(m) -> int:
    if not isinstance(m, int) or isinstance(m, bool):
        raise ValidationError("dilate must be an integer")
    if m < 0:
        raise ValidationError("negative dilate")
    return m


def _run_scan(kind: PolytopeKind, P: Poset, m: int, fill: bool, backend):
    A, b, B, c = _scan_system(P, kind)
    lo = -m if kind.enriched else 0
    return scan.scan_linear(P.d, lo, m, A, b * m, B, c * m, fill=fill, backend=backend)


def lattice_points(
    kind: PolytopeKind, P: Poset, m: int, backend: str | None = None
) -> list[PointFn]:
    """All integer points of the m-th dilate, in box odometer order."""
    m = _check_dilate(m)
    _, rows = _run_scan(kind, P, m, True, backend)
    return [PointFn(P, [int(t) for t in row]) for row in rows]


def count_lattice_points(
    kind: PolytopeKind, P: Poset, m: int, backend: str | None = None
) -> int:
    m = _check_dilate(m)
    count, _ = _run_scan(kind, P, m, False, backend)
    return count


def enumerate_left_enriched(
    P: Poset, m: int, backend: str | None = None
) -> list[PointFn]:
    """All h: P -> Z with |h| <= m, |h| weakly increasing, and ties
    resolved upward to nonnegative values."""
    m = _check_dilate(m)
    _, rows = scan.scan_lepp(P.d, m, P.covers, fill=True, backend=backend)
    return [PointFn(P, [int(t) for t in row]) for row in rows]


def count_left_enriched(P: Poset, m: int, backend: str | None = None) -> int:
    m = _check_dilate(m)
    count, _ = scan.scan_lepp(P.d, m, P.covers, fill=False, backend=backend)
    return count


def hull_membership(x: PointFn, generators: Sequence[PointFn]) -> bool:
    """Decide whether x is a convex combination of the generators."""
    gens = list(generators)
    if not gens:
        raise ValidationError("hull test needs at least one generator")
    d = len(x)
    if any(len(g) != d for g in gens):
        raise ValidationError("generator dimension mismatch")
    rows = [[g.values[i] for g in gens] for i in range(d)]
    rows.append([Fraction(1)] * len(gens))
    rhs = [x.values[i] for i in range(d)]
    rhs.append(Fraction(1))
    return equality_feasible(rows, rhs)


def _hull_generators(kind: PolytopeKind, P: Poset) -> list[PointFn]:
    if kind is PolytopeKind.ENRICHED_ORDER:
        return list(enumerate_signed_filters(P))
    if kind is PolytopeKind.ENRICHED_CHAIN:
        return list(enumerate_signed_antichains(P))
    vals = (
        order_filters(P) if kind is PolytopeKind.ORDER else antichains(P)
    )
    out = []
    for S in vals:
        values = [0] * P.d
        for v in S:
            values[v] = 1
        out.append(PointFn(P, values))
    return out


def vertices(kind: PolytopeKind, P: Poset) -> tuple[PointFn, ...]:
    """Vertex set of the polytope, cross-checked against the LP oracle.

    The enriched polytopes have one vertex per maximal element of eF(P)
    resp. eA(P) under the support-extension order; the classical ones keep
    every indicator generator. Each answer is verified point by point: a
    vertex must fall outside the hull of the remaining generators and a
    non-vertex inside it.
    """
    gens = _hull_generators(kind, P)
    if kind.enriched:
        verts = [
            f
            for f in gens
            if not any(g is not f and support_preceq(f, g) for g in gens)
        ]
    else:
        verts = list(gens)
    chosen = set(verts)
    for g in gens:
        others = [h for h in gens if h is not g]
        inside = hull_membership(g, others) if others else False
        if inside == (g in chosen):
            raise VerificationError(
                "vertex computation disagrees with the hull oracle"
            )
    return tuple(verts)


def ehrhart(kind: PolytopeKind, P: Poset, backend: str | None = None) -> IntPolynomial:
    """Lattice-point counting polynomial of the polytope.

    Interpolated from the counts at m = 0..d and checked against a fresh
    count at m = d+1; a mismatch means an enumeration bug somewhere.
    """
    d = P.d
    counts = [count_lattice_points(kind, P, m, backend=backend) for m in range(d + 1)]
    L = interpolate([(m, Fraction(counts[m])) for m in range(d + 1)])
    if L(d + 1) != count_lattice_points(kind, P, d + 1, backend=backend):
        raise VerificationError("interpolated count disagrees at the holdout dilate")
    return L

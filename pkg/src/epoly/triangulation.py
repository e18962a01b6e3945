"""Triangulations of the four polytopes and their facet inequality systems.

Every facet is a unimodular simplex indexed by a linear extension plus a
sign vector (all-ones for the classical polytopes).  The same ladder of
functionals 0 <= val_1 <= ... <= val_d <= 1 cuts out the facet on either
side of the transfer map; only the coefficient tables differ.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError, check_budget
from .geometry import PolytopeKind, ehrhart, membership
from .points import EChain, PointFn, Signature, efilter_less, enumerate_signed_filters
from .poset import LinearExtension, Poset, count_left_peaks, linear_extensions
from .transfer import enriched_phi, stanley_phi

CHAIN_SIDE = "chain_side"
ORDER_SIDE = "order_side"


def _frac_rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _frac_det(rows: list[list[Fraction]]) -> Fraction:
    rows = [list(r) for r in rows]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return det


def _int_det(M: Sequence[Sequence[int]]) -> int:
    # Bareiss fraction-free elimination; all intermediate values stay
    # integral.
    n = len(M)
    if n == 0:
        return 1
    a = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class Simplex:
    """A set of affinely independent points."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[PointFn]):
        verts = tuple(vertices)
        if not verts:
            raise ValidationError("a simplex needs at least one vertex")
        base = verts[0]
        for v in verts[1:]:
            if v.poset != base.poset:
                raise ValidationError("simplex vertices live on different posets")
        edges = [
            [v.values[i] - base.values[i] for i in range(len(base))]
            for v in verts[1:]
        ]
        if edges and _frac_rank(edges) != len(edges):
            raise ValidationError("simplex vertices are affinely dependent")
        self.vertices = verts

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def __eq__(self, other):
        return isinstance(other, Simplex) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Simplex({list(self.vertices)!r})"


def unimodular_volume(S: Simplex) -> Fraction:
    """Normalized volume of a full-dimensional simplex: |det| of the edge
    vectors out of the first vertex.  Unimodular means the result is 1."""
    base = S.vertices[0]
    d = len(base)
    if len(S.vertices) != d + 1:
        raise ValidationError(
            f"need {d + 1} vertices for a full-dimensional simplex, got {len(S.vertices)}"
        )
    edges = [
        [v.values[i] - base.values[i] for i in range(d)] for v in S.vertices[1:]
    ]
    det = _frac_det(edges)
    if det == 0:
        raise ValidationError("simplex vertices are affinely dependent")
    return abs(det)


@dataclass(frozen=True)
class FacetData:
    """Combinatorial data of one triangulation facet.

    extension lists the poset smallest-first; filters[i] = {v_i, ..., v_d}
    are its tail filters; chains[i] is the saturated chain ending at v_i,
    stored bottom-up; sign is the facet's sign vector (all ones for the
    classical triangulations).
    """

    poset: Poset
    extension: LinearExtension
    filters: tuple[tuple[int, ...], ...]
    chains: tuple[tuple[int, ...], ...]
    sign: Signature

    @cached_property
    def chain_rows(self) -> tuple[tuple[int, ...], ...]:
        d = self.poset.d
        rows = []
        for C in self.chains:
            row = [0] * d
            for v in C:
                row[v] = self.sign.values[v]
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def order_rows(self) -> tuple[tuple[int, ...], ...]:
        d = self.poset.d
        eps = self.sign.values
        rows = []
        for C in self.chains:
            row = [0] * d
            r = len(C)
            for pos in range(r):
                coeff = eps[C[pos]]
                for j in range(pos + 1, r):
                    coeff *= 1 - eps[C[j]]
                row[C[pos]] = coeff
            rows.append(tuple(row))
        return tuple(rows)

    def rows(self, side: str) -> tuple[tuple[int, ...], ...]:
        if side == CHAIN_SIDE:
            return self.chain_rows
        if side == ORDER_SIDE:
            return self.order_rows
        raise ValidationError(f"unknown facet side {side!r}")


def _facet_from_extension(P: Poset, order: Sequence[int], eps: Sequence[int]) -> FacetData:
    d = P.d
    labels = P.natural_labels
    ext = LinearExtension(tuple(order), count_left_peaks([labels[v] for v in order]))
    filters = tuple(tuple(sorted(order[i:])) for i in range(d))
    chains: list[tuple[int, ...]] = []
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        lower = P.lower_covers[v]
        if not lower:
            chains.append((v,))
            continue
        j = max(pos[w] for w in lower)
        chains.append(chains[j] + (v,))
    return FacetData(P, ext, filters, tuple(chains), Signature(P, tuple(eps)))


def facet_data(K: EChain) -> FacetData:
    """Extract the linear extension, tail filters, chains and sign vector
    of a maximal chain in eF(P)."""
    P = K.poset
    d = P.d
    if len(K.links) != d + 1 or K.links[-1].support():
        raise ValidationError(
            "facet data needs a maximal chain: d+1 links down to the zero map"
        )
    order = []
    for upper, lower in zip(K.links, K.links[1:]):
        gone = set(upper.support()) - set(lower.support())
        if len(gone) != 1:
            raise ValidationError("support chain must shrink one element at a time")
        order.append(gone.pop())
    eps = K.sgn.values
    if any(s == 0 for s in eps):
        raise ValidationError("maximal chain signature must be total")
    return _facet_from_extension(P, order, eps)


def _chi(P: Poset, subset: Iterable[int]) -> PointFn:
    values = [0] * P.d
    for v in subset:
        values[v] = 1
    return PointFn(P, values)


def stanley_simplices(P: Poset, C: Sequence[Iterable]) -> tuple[Simplex, Simplex]:
    """Simplices S_C and T_C of a strictly decreasing chain C of order
    filters; the empty filter contributes the zero vertex."""
    filters = [tuple(sorted(P.as_index(v) for v in F)) for F in C]
    if not filters:
        raise ValidationError("empty filter chain")
    for F in filters:
        fset = set(F)
        for v in F:
            for w in P.upper_covers[v]:
                if w not in fset:
                    raise ValidationError("chain member is not an order filter")
    for upper, lower in zip(filters, filters[1:]):
        if not set(lower) < set(upper):
            raise ValidationError("filters are not strictly decreasing")
    links = [_chi(P, F) for F in filters]
    return Simplex(links), Simplex([stanley_phi(f) for f in links])


def enriched_simplices(K: EChain) -> tuple[Simplex, Simplex]:
    """Simplices S^(e)_K = conv(K) and T^(e)_K = conv(enriched_phi(K))."""
    S = Simplex(K.links)
    T = Simplex([enriched_phi(f) for f in K.links])
    return S, T


def facet_functionals(F: FacetData, x: PointFn, side: str) -> list[Fraction]:
    """The d ladder values of x on the facet.

    x lies in the facet (of the dilate by m) exactly when
    0 <= val_1 <= ... <= val_d <= m.
    """
    if x.poset != F.poset:
        raise ValidationError("point lives on a different poset")
    return [
        sum((c * x.values[i] for i, c in enumerate(row) if c), Fraction(0))
        for row in F.rows(side)
    ]


def _in_ladder(vals: Sequence[Fraction], m=1) -> bool:
    prev = Fraction(0)
    for v in vals:
        if v < prev:
            return False
        prev = v
    return prev <= m


def _ladder_has_tie(vals: Sequence[Fraction], m=1) -> bool:
    prev = Fraction(0)
    for v in vals:
        if v == prev:
            return True
        prev = v
    return prev == m


@dataclass(frozen=True)
class FlagVectors:
    """Chain counts of a graded poset by rank set and their
    inclusion-exclusion transform."""

    d: int
    f: dict
    h: dict
    h_vector: tuple[int, ...]


def flag_vectors(P: Poset) -> FlagVectors:
    """Flag f- and h-vectors of the graded poset eF(P) minus the zero map,
    ranked by support size."""
    check_budget(1 << P.d, "flag vector computation")
    pts = [f for f in enumerate_signed_filters(P) if f.support()]
    by_rank: dict[int, list[int]] = {r: [] for r in range(1, P.d + 1)}
    for i, f in enumerate(pts):
        by_rank[len(f.support())].append(i)
    less = [[False] * len(pts) for _ in pts]
    for i, f in enumerate(pts):
        for j, g in enumerate(pts):
            if i != j and len(f.support()) < len(g.support()):
                less[i][j] = efilter_less(f, g)
    f_table: dict[tuple[int, ...], int] = {(): 1}
    ranks = list(range(1, P.d + 1))
    for k in range(1, P.d + 1):
        for S in combinations(ranks, k):
            weight = {i: 1 for i in by_rank[S[0]]}
            for r in S[1:]:
                nxt = {}
                for j in by_rank[r]:
                    total = sum(w for i, w in weight.items() if less[i][j])
                    if total:
                        nxt[j] = total
                weight = nxt
            f_table[S] = sum(weight.values())
    h_table: dict[tuple[int, ...], int] = {}
    for S in f_table:
        acc = 0
        for k in range(len(S) + 1):
            for T in combinations(S, k):
                acc += (-1) ** (len(S) - len(T)) * f_table[T]
        h_table[S] = acc
    h_vec = [0] * (P.d + 1)
    for S, val in h_table.items():
        h_vec[len(S)] += val
    return FlagVectors(P.d, f_table, h_table, tuple(h_vec))


def triangulation_facets(kind: PolytopeKind, P: Poset):
    """Facets of the triangulation with their simplex vertex lists.

    Returns (side, facets, verts): the ladder side the polytope's facets
    use, one FacetData per maximal simplex, and the matching vertex tuples.
    """
    side = ORDER_SIDE if kind in (PolytopeKind.ORDER, PolytopeKind.ENRICHED_ORDER) else CHAIN_SIDE
    facets: list[FacetData] = []
    verts: list[tuple[PointFn, ...]] = []
    if kind.enriched:
        from .points import maximal_echains

        for K in maximal_echains(P):
            facets.append(facet_data(K))
            if side == ORDER_SIDE:
                verts.append(tuple(PointFn(P, f.values) for f in K.links))
            else:
                verts.append(tuple(enriched_phi(f) for f in K.links))
    else:
        for ext in linear_extensions(P):
            facets.append(_facet_from_extension(P, ext.order, (1,) * P.d))
            links = [_chi(P, ext.order[i:]) for i in range(P.d)]
            links.append(_chi(P, ()))
            if side == ORDER_SIDE:
                verts.append(tuple(links))
            else:
                verts.append(tuple(stanley_phi(f) for f in links))
    return side, facets, verts


def _ineq_rows(F: FacetData, side: str) -> list[tuple[tuple[int, ...], int]]:
    # The ladder as <= rows: -val_1 <= 0, val_i - val_{i+1} <= 0, val_d <= 1.
    rows = F.rows(side)
    d = len(rows)
    out = []
    if d == 0:
        return out
    out.append((tuple(-c for c in rows[0]), 0))
    for i in range(d - 1):
        out.append((tuple(a - b for a, b in zip(rows[i], rows[i + 1])), 0))
    out.append((rows[d - 1], 1))
    return out


def _system_vertices(rows: list[tuple[tuple[int, ...], int]], d: int):
    """All vertices of {x : rows} by enumerating d-subsets of tight rows."""
    found = set()
    for subset in combinations(range(len(rows)), d):
        M = [rows[i][0] for i in subset]
        det = _int_det(M)
        if det == 0:
            continue
        nums = []
        for col in range(d):
            Mc = [
                [rows[i][0][j] if j != col else rows[i][1] for j in range(d)]
                for i in subset
            ]
            nums.append(_int_det(Mc))
        if det < 0:
            det = -det
            nums = [-n for n in nums]
        if all(
            sum(c * n for c, n in zip(row, nums)) <= rhs * det for row, rhs in rows
        ):
            found.add(tuple(Fraction(n, det) for n in nums))
    return found


def _batch_det(M: np.ndarray) -> np.ndarray:
    # Unrolled up to 4x4, cofactor recursion beyond; vectorized over the batch.
    n = M.shape[1]
    if n == 0:
        return np.ones(M.shape[0], dtype=np.int64)
    if n == 1:
        return M[:, 0, 0].copy()
    if n == 2:
        return M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]
    if n == 3:
        a, b, c = M[:, 0, 0], M[:, 0, 1], M[:, 0, 2]
        d_, e, f = M[:, 1, 0], M[:, 1, 1], M[:, 1, 2]
        g, h, i = M[:, 2, 0], M[:, 2, 1], M[:, 2, 2]
        return a * (e * i - f * h) - b * (d_ * i - f * g) + c * (d_ * h - e * g)
    if n == 4:
        # Laplace expansion along the top two rows against the bottom two.
        def m2(r, s, i, j):
            return M[:, r, i] * M[:, s, j] - M[:, r, j] * M[:, s, i]

        return (
            m2(0, 1, 0, 1) * m2(2, 3, 2, 3)
            - m2(0, 1, 0, 2) * m2(2, 3, 1, 3)
            + m2(0, 1, 0, 3) * m2(2, 3, 1, 2)
            + m2(0, 1, 1, 2) * m2(2, 3, 0, 3)
            - m2(0, 1, 1, 3) * m2(2, 3, 0, 2)
            + m2(0, 1, 2, 3) * m2(2, 3, 0, 1)
        )
    acc = np.zeros(M.shape[0], dtype=np.int64)
    sign = 1
    for k in range(n):
        keep = [c for c in range(n) if c != k]
        acc += sign * M[:, 0, k] * _batch_det(M[:, 1:][:, :, keep])
        sign = -sign
    return acc


def _int64_headroom(d: int, entry_max: int) -> bool:
    # Worst-case determinant, Cramer numerator, and feasibility product must
    # all stay inside int64 for the vectorized path to be exact.
    bound = 1
    for k in range(1, d + 1):
        bound *= k * max(1, entry_max)
    return (d * entry_max + 1) * bound < 1 << 62


def _canon_vertex(values) -> tuple[int, ...]:
    """A rational point as (numerators..., denominator) in lowest terms."""
    fracs = [Fraction(v) for v in values]
    den = lcm(*(q.denominator for q in fracs)) if fracs else 1
    return tuple(int(q * den) for q in fracs) + (den,)


def _batch_vertices(rows: np.ndarray, rhs: np.ndarray, subsets: np.ndarray):
    """Same vertex enumeration as _system_vertices, in exact int64 batches.

    Returns canonical integer tuples (numerators..., denominator).
    """
    d = rows.shape[1]
    M = rows[subsets]
    dets = _batch_det(M)
    keep = dets != 0
    if not keep.any():
        return set()
    M = M[keep]
    dets = dets[keep]
    bvals = rhs[subsets[keep]]
    nums = np.empty((M.shape[0], d), dtype=np.int64)
    for col in range(d):
        Mc = M.copy()
        Mc[:, :, col] = bvals
        nums[:, col] = _batch_det(Mc)
    neg = dets < 0
    dets = np.where(neg, -dets, dets)
    nums[neg] = -nums[neg]
    feasible = (rows @ nums.T <= rhs[:, None] * dets[None, :]).all(axis=0)
    if not feasible.any():
        return set()
    nums = nums[feasible]
    dets = dets[feasible]
    g = np.gcd(np.gcd.reduce(np.abs(nums), axis=1), dets)
    nums //= g[:, None]
    dets //= g
    uniq = np.unique(np.column_stack([nums, dets]), axis=0)
    return {tuple(int(v) for v in row) for row in uniq}


def verify_triangulation(
    kind: PolytopeKind,
    P: Poset,
    samples: int = 100,
    seed: int = 0,
    pairwise: bool | None = None,
) -> dict:
    """Check the triangulation of the polytope facet by facet.

    Checks: (1) facet count, (2) every facet unimodular, (3) volume sum
    equals d! times the leading Ehrhart coefficient, (4) sampled points of
    the polytope land in at least one facet and in exactly one when no
    ladder value ties, (5) pairwise facet intersections match the shared
    simplex vertices.  The pairwise sweep is quadratic in the facet count
    and defaults to on only for d <= 4.
    """
    if isinstance(kind, str):
        kind = PolytopeKind.parse(kind)
    d = P.d
    side, facets, verts = triangulation_facets(kind, P)
    failures: list[str] = []

    expected = len(linear_extensions(P))
    if kind.enriched:
        expected <<= d
    if len(facets) != expected:
        failures.append(f"facet count {len(facets)} != expected {expected}")

    volumes = []
    for i, vlist in enumerate(verts):
        vol = unimodular_volume(Simplex(vlist))
        volumes.append(vol)
        if vol != 1:
            failures.append(f"facet {i} has normalized volume {vol}")

    L = ehrhart(kind, P)
    lead = L.coefficient(d)
    target = lead
    for k in range(2, d + 1):
        target *= k
    if sum(volumes, Fraction(0)) != target:
        failures.append(
            f"volume sum {sum(volumes)} != d! * leading coefficient {target}"
        )

    rng = random.Random(seed)
    points: list[PointFn] = []
    if facets:
        for _ in range(samples - samples // 2):
            i = rng.randrange(len(facets))
            weights = [rng.randint(0, 4) for _ in verts[i]]
            if not any(weights):
                weights[rng.randrange(len(weights))] = 1
            total = sum(weights)
            vals = [
                sum(Fraction(w) * v.values[j] for w, v in zip(weights, verts[i]))
                / total
                for j in range(d)
            ]
            points.append(PointFn(P, vals))
    lo = -1 if kind.enriched else 0
    for _ in range(samples // 2):
        q = rng.randint(2, 5)
        x = PointFn(P, [Fraction(rng.randint(lo * q, q), q) for _ in range(d)])
        if membership(kind, x, 1):
            points.append(x)
    covered = 0
    for x in points:
        containing = 0
        tied = False
        for F in facets:
            vals = facet_functionals(F, x, side)
            if _in_ladder(vals):
                containing += 1
                tied = tied or _ladder_has_tie(vals)
        if containing == 0:
            failures.append(f"sample {x.to_json()} lies in no facet")
        elif containing > 1 and not tied:
            failures.append(
                f"sample {x.to_json()} lies in {containing} facets without a tie"
            )
        else:
            covered += 1

    if pairwise is None:
        pairwise = d <= 4
    pairs_checked = 0
    if pairwise:
        systems = [_ineq_rows(F, side) for F in facets]
        vsets = [{_canon_vertex(v.values) for v in vlist} for vlist in verts]
        sys_np = [
            (
                np.array([r for r, _ in rws], dtype=np.int64).reshape(len(rws), d),
                np.array([q for _, q in rws], dtype=np.int64),
            )
            for rws in systems
        ]
        entry_max = max(
            (int(abs(rows).max()) for rows, _ in sys_np if rows.size), default=0
        )
        fast = _int64_headroom(d, entry_max)
        subsets = (
            np.array(list(combinations(range(2 * (d + 1)), d)), dtype=np.intp)
            .reshape(-1, d)
            if fast
            else None
        )
        for i in range(len(facets)):
            for j in range(i + 1, len(facets)):
                if fast:
                    rows = np.concatenate([sys_np[i][0], sys_np[j][0]])
                    rhs = np.concatenate([sys_np[i][1], sys_np[j][1]])
                    got = _batch_vertices(rows, rhs, subsets)
                else:
                    got = {
                        _canon_vertex(v)
                        for v in _system_vertices(systems[i] + systems[j], d)
                    }
                want = vsets[i] & vsets[j]
                pairs_checked += 1
                if got != want:
                    failures.append(
                        f"facets {i} and {j} intersect in {len(got)} vertices, "
                        f"expected {len(want)} shared ones"
                    )
    return {
        "kind": kind.value,
        "dimension": d,
        "facet_count": len(facets),
        "expected_facets": expected,
        "unimodular": all(v == 1 for v in volumes),
        "volume_sum": str(sum(volumes, Fraction(0))),
        "samples_checked": len(points),
        "samples_covered": covered,
        "pairs_checked": pairs_checked if pairwise else None,
        "failures": failures,
        "ok": not failures,
    }

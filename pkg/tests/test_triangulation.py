from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from epoly import (
    PointFn,
    PolytopeKind,
    ValidationError,
    builtin_poset,
    ehrhart,
)
from epoly.triangulation import (
    CHAIN_SIDE,
    ORDER_SIDE,
    Simplex,
    _batch_vertices,
    _canon_vertex,
    _system_vertices,
    facet_functionals,
    flag_vectors,
    triangulation_facets,
    unimodular_volume,
    verify_triangulation,
)

from conftest import CORPUS

EO = PolytopeKind.ENRICHED_ORDER
EC = PolytopeKind.ENRICHED_CHAIN
O = PolytopeKind.ORDER
C = PolytopeKind.CHAIN


def test_facet_counts():
    for name, (d, exts, *_rest) in CORPUS.items():
        P = builtin_poset(name)
        for kind in (EO, EC):
            _, facets, _ = triangulation_facets(kind, P)
            assert len(facets) == exts * 2**d, (name, kind)
        for kind in (O, C):
            _, facets, _ = triangulation_facets(kind, P)
            assert len(facets) == exts, (name, kind)


def test_facets_are_unimodular(lam):
    for kind in (EO, EC, O, C):
        side, facets, verts = triangulation_facets(kind, lam)
        assert len(verts) == len(facets)
        for vs in verts:
            S = Simplex(vs)
            assert S.dimension == lam.d
            assert unimodular_volume(S) == 1


def test_volumes_sum_to_leading_coefficient():
    from math import factorial

    for name in ("lambda", "diamond"):
        P = builtin_poset(name)
        L = ehrhart(EO, P)
        want = L.coefficient(P.d) * factorial(P.d)
        for kind in (EO, EC):
            _, _, verts = triangulation_facets(kind, P)
            total = sum(unimodular_volume(Simplex(vs)) for vs in verts)
            assert total == want


def test_facet_chains_frozen(lam):
    _, facets, _ = triangulation_facets(EO, lam)
    ones = (1, 1, 1)

    def grab(order, sign):
        return next(
            F
            for F in facets
            if F.extension.order == order and F.sign.values == sign
        )

    F = grab((0, 1, 2), ones)
    assert F.filters == ((0, 1, 2), (1, 2), (2,))
    # the chain ending at w climbs back through v but not past the
    # incomparable u
    assert F.chains == ((0,), (1,), (1, 2))

    G = grab((1, 0, 2), ones)
    assert G.chains == ((1,), (0,), (0, 2))

    E = grab((0, 1, 2), (1, -1, 1))
    assert E.chain_rows == ((1, 0, 0), (0, -1, 0), (0, -1, 1))
    assert E.order_rows == ((1, 0, 0), (0, -1, 0), (0, 0, 1))


def test_facet_functionals_frozen(lam):
    _, facets, _ = triangulation_facets(EO, lam)
    E = next(
        F
        for F in facets
        if F.extension.order == (0, 1, 2) and F.sign.values == (1, -1, 1)
    )
    x = PointFn(lam, (1, -1, 0))
    assert facet_functionals(E, x, CHAIN_SIDE) == [1, 1, 1]
    y = PointFn(lam, (1, -1, 1))
    assert facet_functionals(E, y, ORDER_SIDE) == [1, 1, 1]
    with pytest.raises(ValidationError):
        facet_functionals(E, x, "diagonal")


def test_simplex_validation(lam):
    a = PointFn(lam, (0, 0, 0))
    b = PointFn(lam, (1, 0, 0))
    c = PointFn(lam, (2, 0, 0))
    with pytest.raises(ValidationError):
        Simplex([a, b, c])
    with pytest.raises(ValidationError):
        Simplex([])
    assert Simplex([a, b]).dimension == 1


def test_vertex_enumeration_paths_agree():
    # cube with one corner sliced off; both enumerators must find the
    # same canonical vertex set
    rows = []
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 1
        rows.append((tuple(e), 1))
        e2 = [0, 0, 0]
        e2[i] = -1
        rows.append((tuple(e2), 1))
    rows.append(((1, 1, 1), 2))
    slow = {_canon_vertex(v) for v in _system_vertices(rows, 3)}
    A = np.array([r[0] for r in rows], dtype=np.int64)
    b = np.array([r[1] for r in rows], dtype=np.int64)
    subsets = np.array(list(combinations(range(len(rows)), 3)), dtype=np.intp)
    fast = _batch_vertices(A, b, subsets)
    assert fast == slow
    assert len(slow) == 10  # 7 cube corners kept plus a triangle of cuts


def test_canon_vertex():
    assert _canon_vertex((Fraction(1, 2), Fraction(-1, 3))) == (3, -2, 6)
    assert _canon_vertex((Fraction(2), Fraction(0))) == (2, 0, 1)


def test_verify_triangulation_ok(lam):
    for kind in (EO, EC, O, C):
        report = verify_triangulation(kind, lam, samples=30, seed=1)
        assert report["ok"], report
        enriched = kind in (EO, EC)
        assert report["facet_count"] == (16 if enriched else 2)
        assert report["facet_count"] == report["expected_facets"]
        assert report["unimodular"]
        assert report["volume_sum"] == ("16" if enriched else "2")
        assert report["samples_covered"] == report["samples_checked"]
        assert report["pairs_checked"] > 0
        assert report["failures"] == []

    fast = verify_triangulation(EO, lam, samples=10, pairwise=False)
    assert fast["ok"]
    assert fast["pairs_checked"] is None


def test_flag_vectors(lam):
    fv = flag_vectors(lam)
    assert fv.d == 3
    order = sorted(fv.f, key=lambda s: (len(s), s))
    assert order == [
        (),
        (1,),
        (2,),
        (3,),
        (1, 2),
        (1, 3),
        (2, 3),
        (1, 2, 3),
    ]
    assert [fv.f[s] for s in order] == [1, 2, 4, 4, 8, 8, 8, 16]
    assert fv.h_vector == (1, 7, 7, 1)


def test_flag_h_matches_hstar():
    from epoly import hstar_from_ehrhart

    for name in CORPUS:
        P = builtin_poset(name)
        h = hstar_from_ehrhart(ehrhart(EO, P), P.d)
        assert flag_vectors(P).h_vector == h.int_coeffs(), name

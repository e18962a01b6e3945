from fractions import Fraction

import pytest

from epoly import (
    PointFn,
    Signature,
    ValidationError,
    builtin_poset,
    echain_from_pair,
    efilter_hasse,
    efilter_less,
    enumerate_signed_antichains,
    enumerate_signed_filters,
    format_rat,
    linear_extensions,
    maximal_echains,
    parse_rat,
    support_preceq,
)
from conftest import CORPUS

LAMBDA_EF = {
    (0, 0, 0), (0, 0, 1), (0, 0, -1),
    (1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1),
    (1, 1, 1), (1, -1, 1), (-1, 1, 1), (-1, -1, 1),
}

LAMBDA_EA = {
    (0, 0, 0), (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
    (0, 0, 1), (0, 0, -1), (1, 1, 0), (1, -1, 0), (-1, 1, 0), (-1, -1, 0),
}


def test_rat_round_trip():
    for s in ["0", "5", "-3", "2/7", "-11/4"]:
        assert format_rat(parse_rat(s)) == s
    assert parse_rat("4/8") == Fraction(1, 2)
    with pytest.raises(ValidationError):
        parse_rat("1.5x")


def test_point_basics(lam):
    p = PointFn(lam, [1, "1/2", Fraction(0)])
    assert p.values == (Fraction(1), Fraction(1, 2), Fraction(0))
    assert p.support() == (0, 1)
    assert not p.is_integral()
    assert PointFn.from_json(lam, p.to_json()) == p
    assert PointFn(lam, [2, -1, 0]).is_integral()


def test_signed_filters_lambda(lam):
    got = {tuple(int(x) for x in f.values) for f in enumerate_signed_filters(lam)}
    assert got == LAMBDA_EF


def test_signed_antichains_lambda(lam):
    got = {tuple(int(x) for x in g.values) for g in enumerate_signed_antichains(lam)}
    assert got == LAMBDA_EA


def test_generating_set_sizes():
    for name, (_, _, (e1, _, _), _, _, _) in CORPUS.items():
        P = builtin_poset(name)
        assert len(enumerate_signed_filters(P)) == e1
        assert len(enumerate_signed_antichains(P)) == e1


def test_signed_filter_shape():
    # nonzero on an order filter, sign free only on its minimal elements
    P = builtin_poset("diamond")
    for f in enumerate_signed_filters(P):
        supp = set(f.support())
        for v in supp:
            assert all(w in supp for w in range(P.d) if P.less(v, w))
            if any(u in supp for u in range(P.d) if P.less(u, v)):
                assert f.values[v] == 1


def test_efilter_less_is_strict_order(lam):
    pts = enumerate_signed_filters(lam)
    for f in pts:
        assert not efilter_less(f, f)
    for f in pts:
        for g in pts:
            if efilter_less(f, g):
                assert not efilter_less(g, f)
    # transitivity
    for f in pts:
        for g in pts:
            if not efilter_less(f, g):
                continue
            for h in pts:
                if efilter_less(g, h):
                    assert efilter_less(f, h)


def test_support_preceq(lam):
    small = PointFn(lam, [0, 0, 1])
    big = PointFn(lam, [1, -1, 1])
    assert support_preceq(small, big)
    assert not support_preceq(big, small)
    assert support_preceq(small, small)
    other = PointFn(lam, [0, 0, -1])
    assert not support_preceq(small, other)


def test_hasse_covers_lambda(lam):
    edges = efilter_hasse(lam)
    # (0,0,0) is covered by exactly (0,0,1) and (0,0,-1)
    zero_ups = {
        tuple(int(x) for x in g.values)
        for f, g in edges
        if f.support() == ()
    }
    assert zero_ups == {(0, 0, 1), (0, 0, -1)}


def test_maximal_echains_count():
    for name, (d, e, _, _, _, _) in CORPUS.items():
        P = builtin_poset(name)
        assert len(maximal_echains(P)) == e << d


def test_maximal_echain_links(lam):
    K = maximal_echains(lam)[0]
    supports = [len(f.support()) for f in K.links]
    assert supports == [3, 2, 1, 0]
    for a, b in zip(K.links, K.links[1:]):
        assert efilter_less(b, a)


def test_echain_from_pair(lam):
    phi = Signature(lam, (1, -1, 1))
    K = echain_from_pair(lam, [(0, 1, 2), (0, 2), (2,), ()], phi)
    assert [tuple(int(x) for x in f.values) for f in K.links] == [
        (1, -1, 1),
        (1, 0, 1),
        (0, 0, 1),
        (0, 0, 0),
    ]
    with pytest.raises(ValidationError):
        # signature support must match the filter minima
        echain_from_pair(lam, [(2,), ()], phi)


def test_signature_validation(lam):
    with pytest.raises(ValidationError):
        Signature(lam, (1, 2, 1))
    with pytest.raises(ValidationError):
        Signature(lam, (1, 1))
    s = Signature(lam, (1, 0, -1))
    assert s.support() == (0, 2)

"""End-to-end acceptance checklist.

Each test covers one acceptance criterion and prints a single
"criterion N (label): PASS|FAIL" line; run with -s to see them live.
"""

import random
from fractions import Fraction
from math import factorial

from epoly import (
    PointFn,
    PolytopeKind,
    builtin_poset,
    count_lattice_points,
    count_left_enriched,
    d_vector,
    ehrhart,
    enriched_phi,
    enumerate_signed_antichains,
    enumerate_signed_filters,
    hstar_from_ehrhart,
    gamma_polynomial,
    h_polynomial_from_flags,
    hull_membership,
    lattice_points,
    linear_extensions,
    vertices,
    verify_suite,
)
from epoly.stats import VIA_GAMMA, VIA_PEAKS
from epoly.triangulation import (
    CHAIN_SIDE,
    ORDER_SIDE,
    Simplex,
    facet_functionals,
    flag_vectors,
    triangulation_facets,
    unimodular_volume,
)

from conftest import CORPUS

EO = PolytopeKind.ENRICHED_ORDER
EC = PolytopeKind.ENRICHED_CHAIN

LAM = builtin_poset("lambda")

EF_LAMBDA = {
    (0, 0, 0),
    (0, 0, 1),
    (0, 0, -1),
    (1, 0, 1),
    (-1, 0, 1),
    (0, 1, 1),
    (0, -1, 1),
    (1, 1, 1),
    (1, -1, 1),
    (-1, 1, 1),
    (-1, -1, 1),
}

EA_LAMBDA = {
    (0, 0, 0),
    (1, 0, 0),
    (-1, 0, 0),
    (0, 1, 0),
    (0, -1, 0),
    (0, 0, 1),
    (0, 0, -1),
    (1, 1, 0),
    (1, -1, 0),
    (-1, 1, 0),
    (-1, -1, 0),
}


def _report(n, label, body):
    try:
        body()
    except BaseException:
        print(f"criterion {n} ({label}): FAIL")
        raise
    print(f"criterion {n} ({label}): PASS")


def test_criterion_01_signed_generators():
    def body():
        ef = {x.values for x in enumerate_signed_filters(LAM)}
        ea = {x.values for x in enumerate_signed_antichains(LAM)}
        assert len(ef) == len(ea) == 11
        assert ef == EF_LAMBDA
        assert ea == EA_LAMBDA

    _report(1, "signed filters and antichains of the vee-dual", body)


def test_criterion_02_three_enumerators_agree():
    def body():
        for m, want in zip((1, 2, 3), (11, 45, 119)):
            assert count_lattice_points(EO, LAM, m) == want
            assert count_lattice_points(EC, LAM, m) == want
            assert count_left_enriched(LAM, m) == want

    _report(2, "three independent point enumerators", body)


def test_criterion_03_counting_polynomial():
    def body():
        L = ehrhart(EO, LAM)
        assert [L.coefficient(k) for k in range(4)] == [
            1,
            Fraction(10, 3),
            4,
            Fraction(8, 3),
        ]
        assert ehrhart(EC, LAM) == L
        h = hstar_from_ehrhart(L, 3)
        assert h.int_coeffs() == (1, 7, 7, 1)
        assert h_polynomial_from_flags(flag_vectors(LAM)) == h

    _report(3, "counting polynomial and its numerator", body)


def test_criterion_04_triangulations():
    def body():
        L = ehrhart(EO, LAM)
        want_volume = L.coefficient(3) * factorial(3)
        assert want_volume == 16
        for kind in (EO, EC):
            _, facets, verts = triangulation_facets(kind, LAM)
            assert len(facets) == 16
            volumes = [unimodular_volume(Simplex(vs)) for vs in verts]
            assert all(v == 1 for v in volumes)
            assert sum(volumes) == want_volume

    _report(4, "unimodular triangulations", body)


def test_criterion_05_gamma_and_descent():
    def body():
        h = hstar_from_ehrhart(ehrhart(EO, LAM), 3)
        g = gamma_polynomial(h, 3)
        assert tuple(g.coefficient(i) for i in range(2)) == (1, 4)
        peaks = {}
        for ext in linear_extensions(LAM):
            peaks[ext.left_peaks] = peaks.get(ext.left_peaks, 0) + 1
        assert peaks == {0: 1, 1: 1}
        assert d_vector(LAM, VIA_GAMMA) == d_vector(LAM, VIA_PEAKS) == (1, 2)

    _report(5, "gamma positivity and the descent statistic", body)


def test_criterion_06_vertices():
    def body():
        eo = vertices(EO, LAM)
        ec = vertices(EC, LAM)
        assert {v.values for v in eo} == {
            (1, 1, 1),
            (1, -1, 1),
            (-1, 1, 1),
            (-1, -1, 1),
            (0, 0, -1),
        }
        assert {v.values for v in ec} == {
            (1, 1, 0),
            (1, -1, 0),
            (-1, 1, 0),
            (-1, -1, 0),
            (0, 0, 1),
            (0, 0, -1),
        }
        # extremality and completeness against the hull oracle
        for kind, vs in ((EO, eo), (EC, ec)):
            for i, v in enumerate(vs):
                assert not hull_membership(v, [w for j, w in enumerate(vs) if j != i])
            for x in lattice_points(kind, LAM, 1):
                assert hull_membership(x, vs)

    _report(6, "vertex enumeration against the hull oracle", body)


def test_criterion_07_cross_check_suite():
    def body():
        for name in CORPUS:
            report = verify_suite(builtin_poset(name), m_max=2, seed=0, samples=200)
            assert report["ok"], (name, report["failures"])

    _report(7, "cross-check suite over the whole corpus", body)


def test_criterion_08_small_poset_closed_forms():
    def body():
        one = builtin_poset("chain1")
        L1 = ehrhart(EO, one)
        assert [L1.coefficient(k) for k in range(2)] == [1, 2]

        two = builtin_poset("chain2")
        h2 = hstar_from_ehrhart(ehrhart(EO, two), 2)
        assert h2.int_coeffs() == (1, 2, 1)
        assert {v.values for v in vertices(EO, two)} == {(1, 1), (-1, 1), (0, -1)}
        _, facets, verts = triangulation_facets(EO, two)
        assert len(facets) == 4
        assert sum(unimodular_volume(Simplex(vs)) for vs in verts) == 4
        assert d_vector(two, VIA_GAMMA) == (1, 0)

        anti = builtin_poset("antichain2")
        ha = hstar_from_ehrhart(ehrhart(EO, anti), 2)
        assert ha.int_coeffs() == (1, 6, 1)
        ga = gamma_polynomial(ha, 2)
        assert tuple(ga.coefficient(i) for i in range(2)) == (1, 4)
        assert d_vector(anti, VIA_GAMMA) == d_vector(anti, VIA_PEAKS) == (1, 2)

    _report(8, "closed forms on the smallest posets", body)


def test_criterion_09_facet_functional_identity():
    def body():
        rng = random.Random(11)
        for name, (d, *_rest) in CORPUS.items():
            if d > 4:
                continue
            P = builtin_poset(name)
            _, facets, verts = triangulation_facets(EO, P)
            for F, vs in zip(facets, verts):
                for _ in range(50):
                    weights = [Fraction(rng.randint(0, 6)) for _ in vs]
                    if sum(weights) == 0:
                        weights[0] = Fraction(1)
                    total = sum(weights)
                    f = PointFn(
                        P,
                        [
                            sum(w * v.values[i] for w, v in zip(weights, vs)) / total
                            for i in range(P.d)
                        ],
                    )
                    lhs = facet_functionals(F, f, ORDER_SIDE)
                    rhs = facet_functionals(F, enriched_phi(f), CHAIN_SIDE)
                    assert lhs == rhs, (name, F.extension.order, F.sign.values)

    _report(9, "facet functional identity under the transfer map", body)

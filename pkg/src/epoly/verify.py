"""Cross-checking suite that plays the modules against each other.

Every check compares two independently computed routes to the same object,
so a bug in one route shows up as a disagreement rather than passing
silently.  Checks run in a fixed order and failures are collected, never
raised; the report says exactly which comparisons broke.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from . import geometry
from .errors import EpolyError, ValidationError
from .geometry import PolytopeKind
from .points import (
    PointFn,
    enumerate_signed_antichains,
    enumerate_signed_filters,
)
from .poset import Poset, chains_of, linear_extensions, order_filters
from .stats import (
    VIA_GAMMA,
    VIA_PEAKS,
    d_vector,
    gamma_polynomial,
    h_polynomial_from_flags,
    hstar_from_ehrhart,
)
from .transfer import (
    enriched_phi,
    enriched_psi,
    max_chain_sum,
    pi_map,
    stanley_phi,
    stanley_psi,
    theta_map,
)
from .triangulation import (
    CHAIN_SIDE,
    ORDER_SIDE,
    facet_functionals,
    flag_vectors,
    triangulation_facets,
    verify_triangulation,
)

# Exhaustive box sweeps above this many points fall back to sampling.
BOX_SWEEP_CAP = 4096

EO = PolytopeKind.ENRICHED_ORDER
EC = PolytopeKind.ENRICHED_CHAIN
O = PolytopeKind.ORDER
C = PolytopeKind.CHAIN


def _random_point(rng: random.Random, P: Poset, span: int = 3) -> PointFn:
    q = rng.randint(1, 4)
    return PointFn(
        P, [Fraction(rng.randint(-span * q, span * q), q) for _ in range(P.d)]
    )


def _random_order_point(rng: random.Random, P: Poset, filters) -> PointFn:
    """A random convex combination of order filter indicators."""
    weights = [rng.randint(0, 4) for _ in filters]
    if not any(weights):
        weights[rng.randrange(len(weights))] = 1
    total = sum(weights)
    coords = [Fraction(0)] * P.d
    for w, F in zip(weights, filters):
        for v in F:
            coords[v] += Fraction(w, total)
    return PointFn(P, coords)


def _chain_bound_gap(g: PointFn, elems: tuple[int, ...]) -> Fraction:
    """Slack of the saturated chain bound for |g| along the chain.

    elems is stored top-down; the bottom element carries the full weight
    2^(r-1) while every higher element enters with its strict-below
    maximum subtracted.  The result is rhs - lhs, nonnegative in general
    and exactly zero for one-element chains.
    """
    r = len(elems)
    bottom = elems[r - 1]
    lhs = (2 ** (r - 1)) * (
        abs(g.values[bottom]) + max_chain_sum(g, "strictly_below", bottom)
    )
    for i in range(1, r):
        v = elems[r - 1 - i]
        lhs += (2 ** (r - 1 - i)) * (
            abs(g.values[v]) - max_chain_sum(g, "strictly_below", v)
        )
    return max_chain_sum(g, "below", elems[0]) - lhs


def _box_points(P: Poset, lo: int, hi: int, cap: int, rng: random.Random):
    total = (hi - lo + 1) ** P.d
    if total <= cap:
        pts = [PointFn(P, list(c)) for c in product(range(lo, hi + 1), repeat=P.d)]
        return pts, True
    pts = [
        PointFn(P, [rng.randint(lo, hi) for _ in range(P.d)]) for _ in range(cap)
    ]
    return pts, False


def _counts_checks(P: Poset, m_max: int):
    def generators_eo():
        want = set(enumerate_signed_filters(P))
        got = set(geometry.lattice_points(EO, P, 1))
        return got == want, f"{len(got)} lattice points vs {len(want)} generators"

    def generators_ec():
        want = set(enumerate_signed_antichains(P))
        got = set(geometry.lattice_points(EC, P, 1))
        return got == want, f"{len(got)} lattice points vs {len(want)} generators"

    def dilate_counts():
        rows = []
        ok = True
        for m in range(m_max + 1):
            a = geometry.count_lattice_points(EO, P, m)
            b = geometry.count_lattice_points(EC, P, m)
            c = geometry.count_left_enriched(P, m)
            rows.append(f"m={m}: {a}/{b}/{c}")
            ok = ok and a == b == c
        return ok, "; ".join(rows)

    def classical_counts():
        rows = []
        ok = True
        for m in range(m_max + 1):
            a = geometry.count_lattice_points(O, P, m)
            b = geometry.count_lattice_points(C, P, m)
            rows.append(f"m={m}: {a}/{b}")
            ok = ok and a == b
        return ok, "; ".join(rows)

    return [
        ("counts/eo_generators", generators_eo),
        ("counts/ec_generators", generators_ec),
        ("counts/enriched_dilates", dilate_counts),
        ("counts/classical_dilates", classical_counts),
    ]


def _transfer_checks(P: Poset, m_max: int, samples: int, rng: random.Random):
    def round_trip():
        bad = 0
        for _ in range(samples):
            x = _random_point(rng, P)
            if enriched_psi(enriched_phi(x)) != x:
                bad += 1
            g = _random_point(rng, P)
            if enriched_phi(enriched_psi(g)) != g:
                bad += 1
        return bad == 0, f"{2 * samples} round trips, {bad} failed"

    def lattice_bijection():
        for m in range(1, m_max + 1):
            src = geometry.lattice_points(EO, P, m)
            dst = set(geometry.lattice_points(EC, P, m))
            img = [enriched_phi(f) for f in src]
            if any(not g.is_integral() for g in img):
                return False, f"m={m}: non-integral image"
            if len(set(img)) != len(img) or set(img) != dst:
                return False, f"m={m}: image is not the chain point set"
            back = {enriched_psi(g) for g in dst}
            if back != set(src):
                return False, f"m={m}: inverse image mismatch"
        return True, f"bijections checked for m=1..{m_max}"

    def order_restriction():
        filters = order_filters(P)
        bad = 0
        for _ in range(samples):
            x = _random_order_point(rng, P, filters)
            if enriched_phi(x) != stanley_phi(x):
                bad += 1
        return bad == 0, f"{samples} order polytope points, {bad} disagreed"

    def classical_round_trip():
        for m in range(1, m_max + 1):
            src = set(geometry.lattice_points(O, P, m))
            dst = set(geometry.lattice_points(C, P, m))
            img = [stanley_phi(x) for x in src]
            if set(img) != dst or len(set(img)) != len(img):
                return False, f"m={m}: image is not the chain point set"
            if any(stanley_psi(g) not in src for g in dst):
                return False, f"m={m}: inverse image mismatch"
        return True, f"bijections checked for m=1..{m_max}"

    def chain_bound():
        sats = [K.elems for K in chains_of(P, kind="saturated")]
        bad = 0
        trials = max(1, samples // 2)
        for _ in range(trials):
            g = _random_point(rng, P)
            for elems in sats:
                gap = _chain_bound_gap(g, elems)
                if gap < 0 or (len(elems) == 1 and gap != 0):
                    bad += 1
        return bad == 0, f"{trials} points x {len(sats)} chains, {bad} violations"

    return [
        ("transfer/round_trip", round_trip),
        ("transfer/lattice_bijection", lattice_bijection),
        ("transfer/order_restriction", order_restriction),
        ("transfer/classical_round_trip", classical_round_trip),
        ("transfer/chain_bound", chain_bound),
    ]


def _partition_checks(P: Poset, m_max: int):
    def pi_bijection():
        for m in range(m_max + 1):
            E = geometry.enumerate_left_enriched(P, m)
            dst = set(geometry.lattice_points(EC, P, m))
            img = [pi_map(h, m) for h in E]
            if len(set(img)) != len(img) or set(img) != dst:
                return False, f"m={m}: image is not the chain point set"
        return True, f"bijections checked for m=0..{m_max}"

    def theta_factorization():
        for m in range(m_max + 1):
            E = geometry.enumerate_left_enriched(P, m)
            dst = set(geometry.lattice_points(EO, P, m))
            img = []
            for h in E:
                t = theta_map(h, m)
                if t != enriched_psi(pi_map(h, m)):
                    return False, f"m={m}: factorization broke at {h.to_json()}"
                img.append(t)
            if len(set(img)) != len(img) or set(img) != dst:
                return False, f"m={m}: image is not the order point set"
        return True, f"factorization checked for m=0..{m_max}"

    return [
        ("partitions/pi_bijection", pi_bijection),
        ("partitions/theta_factorization", theta_factorization),
    ]


def _membership_checks(P: Poset, rng: random.Random):
    def box_sweep(kind, generators):
        pts, exhaustive = _box_points(P, -2, 2, BOX_SWEEP_CAP, rng)
        bad = 0
        for x in pts:
            if geometry.membership(kind, x, 1) != geometry.hull_membership(
                x, generators
            ):
                bad += 1
        mode = "all" if exhaustive else "sampled"
        return bad == 0, f"{mode} {len(pts)} box points, {bad} disagreed"

    def eo_box():
        return box_sweep(EO, enumerate_signed_filters(P))

    def ec_box():
        return box_sweep(EC, enumerate_signed_antichains(P))

    return [
        ("membership/eo_vs_hull", eo_box),
        ("membership/ec_vs_hull", ec_box),
    ]


def _triangulation_checks(P: Poset, seed: int, pairwise, rng: random.Random):
    checks = []
    for kind in (EO, EC, O, C):
        def run(kind=kind):
            rep = verify_triangulation(P=P, kind=kind, seed=seed, pairwise=pairwise)
            if rep["ok"]:
                detail = (
                    f"{rep['facet_count']} facets, volume {rep['volume_sum']}, "
                    f"{rep['samples_covered']}/{rep['samples_checked']} samples covered"
                )
            else:
                detail = "; ".join(rep["failures"])
            return rep["ok"], detail

        checks.append((f"triangulation/{kind.value}", run))

    def functional_identity():
        # The two ladders agree where the transfer map is linear, which is
        # exactly on the facet simplex, so sample convex combinations of
        # its vertices.
        if P.d > 4:
            return True, "skipped (dimension above 4)"
        _, facets, verts = triangulation_facets(EO, P)
        bad = 0
        for F, vs in zip(facets, verts):
            for _ in range(50):
                weights = [rng.randint(0, 4) for _ in vs]
                if not any(weights):
                    weights[rng.randrange(len(weights))] = 1
                total = sum(weights)
                coords = [
                    sum(Fraction(w, total) * v.values[i] for w, v in zip(weights, vs))
                    for i in range(P.d)
                ]
                f = PointFn(P, coords)
                lhs = facet_functionals(F, f, ORDER_SIDE)
                rhs = facet_functionals(F, enriched_phi(f), CHAIN_SIDE)
                if lhs != rhs:
                    bad += 1
        return bad == 0, f"{len(facets)} facets x 50 points, {bad} mismatches"

    checks.append(("triangulation/functional_identity", functional_identity))
    return checks


def _stats_checks(P: Poset):
    def ehrhart_match():
        return (
            geometry.ehrhart(EO, P) == geometry.ehrhart(EC, P),
            "order and chain kind counting polynomials",
        )

    def hstar_web():
        h_eo = hstar_from_ehrhart(geometry.ehrhart(EO, P), P.d)
        h_ec = hstar_from_ehrhart(geometry.ehrhart(EC, P), P.d)
        h_flag = h_polynomial_from_flags(flag_vectors(P))
        ok = h_eo == h_ec == h_flag
        return ok, f"h* = {h_eo.int_coeffs()}"

    def palindromic():
        h = hstar_from_ehrhart(geometry.ehrhart(EO, P), P.d)
        ok = all(h.coefficient(i) == h.coefficient(P.d - i) for i in range(P.d + 1))
        return ok, f"h* = {h.int_coeffs()}"

    def gamma_nonneg():
        h = hstar_from_ehrhart(geometry.ehrhart(EO, P), P.d)
        g = gamma_polynomial(h, P.d)
        coeffs = [g.coefficient(i) for i in range(P.d // 2 + 1)]
        return all(c >= 0 for c in coeffs), f"gamma = {coeffs}"

    def d_vector_routes():
        a = d_vector(P, VIA_GAMMA)
        b = d_vector(P, VIA_PEAKS)
        return a == b, f"{a} vs {b}"

    def peak_formula():
        h = hstar_from_ehrhart(geometry.ehrhart(EO, P), P.d)
        g = gamma_polynomial(h, P.d)
        counts = [0] * (P.d // 2 + 1)
        for ext in linear_extensions(P):
            counts[ext.left_peaks] += 1
        ok = all(
            g.coefficient(i) == (4**i) * counts[i] for i in range(P.d // 2 + 1)
        )
        return ok, f"peak counts {counts}"

    return [
        ("stats/ehrhart_match", ehrhart_match),
        ("stats/hstar_web", hstar_web),
        ("stats/palindromic", palindromic),
        ("stats/gamma_nonneg", gamma_nonneg),
        ("stats/d_vector_routes", d_vector_routes),
        ("stats/peak_formula", peak_formula),
    ]


def verify_suite(
    P: Poset,
    m_max: int = 2,
    seed: int = 0,
    samples: int = 200,
    pairwise: bool | None = None,
) -> dict:
    """Run every cross-check on one poset and report structured results.

    Checks run in order: point-set counts, transfer bijections and round
    trips, partition bijections, membership against the hull oracle,
    triangulation verification, and the statistics equality web.  Library
    errors inside a check are caught and recorded as that check's failure.
    """
    if m_max < 1:
        raise ValidationError("m_max must be at least 1")
    if samples < 0:
        raise ValidationError("samples must be nonnegative")
    rng = random.Random(seed)
    report = {
        "elements": [str(e) for e in P.elements],
        "d": P.d,
        "m_max": m_max,
        "seed": seed,
        "checks": [],
        "failures": [],
    }
    groups = (
        _counts_checks(P, m_max)
        + _transfer_checks(P, m_max, samples, rng)
        + _partition_checks(P, m_max)
        + _membership_checks(P, rng)
        + _triangulation_checks(P, seed, pairwise, rng)
        + _stats_checks(P)
    )
    for name, fn in groups:
        try:
            ok, detail = fn()
        except EpolyError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report["checks"].append({"name": name, "ok": bool(ok), "detail": detail})
        if not ok:
            report["failures"].append(name)
    report["ok"] = not report["failures"]
    return report

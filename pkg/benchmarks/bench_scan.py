"""Time the box-scan kernels on both backends.

The scan enumerates the integer box [-m, m]^d and keeps the points
satisfying the chain systems, so an 8-element fence at m=2 walks
390,625 cells per call.  The numba path pays a one-off compile on the
first call; the warmup round absorbs it so the table shows steady-state
time.

Run:  python3 benchmarks/bench_scan.py [--m 2] [--repeats 3]
"""

import argparse
import statistics
import sys
import time

from epoly import PolytopeKind, count_lattice_points, count_left_enriched, parse_poset
from epoly.scan import HAVE_NUMBA

FENCE8 = """
elements: a b c d e f g h
covers: a<b c<b c<d e<d e<f g<f g<h
"""

KINDS = (
    ("eo", PolytopeKind.ENRICHED_ORDER),
    ("ec", PolytopeKind.ENRICHED_CHAIN),
    ("o", PolytopeKind.ORDER),
    ("c", PolytopeKind.CHAIN),
)


def time_call(fn, repeats):
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best.append(time.perf_counter() - t0)
    return out, min(best), statistics.mean(best)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=2, help="dilation factor (default 2)")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args(argv)

    P = parse_poset(FENCE8)
    m = args.m
    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if len(backends) == 1:
        print("numba not importable; timing the numpy backend only", file=sys.stderr)

    # warmup: triggers numba compilation and fills caches
    for backend in backends:
        for _, kind in KINDS:
            count_lattice_points(kind, P, 1, backend=backend)
        count_left_enriched(P, 1, backend=backend)

    rows = []
    for label, kind in KINDS:
        cells = {}
        counts = set()
        for backend in backends:
            n, best, _ = time_call(
                lambda b=backend: count_lattice_points(kind, P, m, backend=b),
                args.repeats,
            )
            cells[backend] = best
            counts.add(n)
        assert len(counts) == 1, f"backends disagree on {label}"
        rows.append((label, counts.pop(), cells))

    cells = {}
    counts = set()
    for backend in backends:
        n, best, _ = time_call(
            lambda b=backend: count_left_enriched(P, m, backend=b), args.repeats
        )
        cells[backend] = best
        counts.add(n)
    assert len(counts) == 1
    rows.append(("lepp", counts.pop(), cells))

    print(f"fence on 8 elements, m={m}, box size {(2 * m + 1) ** P.d:,}")
    header = f"{'scan':<6} {'count':>9}"
    for backend in backends:
        header += f" {backend + ' (s)':>12}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    for label, n, cells in rows:
        line = f"{label:<6} {n:>9,}"
        for backend in backends:
            line += f" {cells[backend]:>12.4f}"
        if len(backends) == 2:
            line += f" {cells['numpy'] / cells['numba']:>8.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

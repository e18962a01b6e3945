"""Command line front end.

Exit codes: 0 success, 1 bad input or usage, 2 verification failure.
Output is JSON by default (stable key order) or aligned text with
``--format text``; identical input, seed, and format give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import geometry
from .corpus import builtin_names, builtin_poset
from .errors import EpolyError, VerificationError
from .geometry import PolytopeKind
from .points import (
    PointFn,
    enumerate_signed_antichains,
    enumerate_signed_filters,
    format_rat,
)
from .poset import Poset, antichains, linear_extensions, order_filters, parse_poset
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
    pi_map,
    stanley_phi,
    stanley_psi,
    theta_map,
)
from .triangulation import (
    CHAIN_SIDE,
    ORDER_SIDE,
    flag_vectors,
    triangulation_facets,
    verify_triangulation,
)
from .verify import verify_suite

_MAPS = {
    "phi": lambda x, m: stanley_phi(x),
    "psi": lambda x, m: stanley_psi(x),
    "ephi": lambda x, m: enriched_phi(x),
    "epsi": lambda x, m: enriched_psi(x),
    "pi": pi_map,
    "theta": theta_map,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _load_poset(spec: str) -> Poset:
    if spec.startswith("builtin:"):
        return builtin_poset(spec[len("builtin:") :])
    return parse_poset(Path(spec).read_text(encoding="utf-8"))


def _flat(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _is_scalar_list(value) -> bool:
    return isinstance(value, (list, tuple)) and all(
        not isinstance(v, (dict, list, tuple)) for v in value
    )


def _text_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, dict) or (
                isinstance(value, (list, tuple)) and not _is_scalar_list(value)
            ):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat(value)}")
    elif isinstance(obj, (list, tuple)):
        for value in obj:
            if isinstance(value, dict) or (
                isinstance(value, (list, tuple)) and not _is_scalar_list(value)
            ):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(value, indent + 1))
            else:
                lines.append(f"{pad}- {_flat(value)}")
    else:
        lines.append(f"{pad}{_flat(obj)}")
    return lines


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(_text_lines(payload)))


def _cmd_info(args) -> int:
    P = _load_poset(args.poset)
    payload = {
        "elements": [str(e) for e in P.elements],
        "d": P.d,
        "covers": [[str(P.elements[a]), str(P.elements[b])] for a, b in P.covers],
        "minimals": [str(P.elements[v]) for v in P.minimals],
        "maximals": [str(P.elements[v]) for v in P.maximals],
        "order_filters": len(order_filters(P)),
        "antichains": len(antichains(P)),
        "linear_extensions": len(linear_extensions(P)),
        "signed_filters": len(enumerate_signed_filters(P)),
        "signed_antichains": len(enumerate_signed_antichains(P)),
    }
    _emit(payload, args.format)
    return 0


def _cmd_points(args) -> int:
    P = _load_poset(args.poset)
    kind = PolytopeKind.parse(args.kind)
    pts = geometry.lattice_points(kind, P, args.dilate)
    payload = {
        "kind": kind.value,
        "dilate": args.dilate,
        "count": len(pts),
        "points": [p.to_json() for p in pts],
    }
    _emit(payload, args.format)
    return 0


def _cmd_ehrhart(args) -> int:
    P = _load_poset(args.poset)
    kind = PolytopeKind.parse(args.kind)
    L = geometry.ehrhart(kind, P)
    payload = {
        "kind": kind.value,
        "degree": L.degree,
        "coefficients": [format_rat(L.coefficient(k)) for k in range(L.degree + 1)],
    }
    if args.check:
        m = P.d + 2
        counted = geometry.count_lattice_points(kind, P, m)
        predicted = L(m)
        if predicted != counted:
            raise VerificationError(
                f"counting polynomial predicts {predicted} at m={m}, scan found {counted}"
            )
        payload["check"] = {"m": m, "count": counted}
    _emit(payload, args.format)
    return 0


def _cmd_transfer(args) -> int:
    P = _load_poset(args.poset)
    try:
        arr = json.loads(args.point)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"--point is not valid JSON: {exc}")
    if not isinstance(arr, list):
        raise _UsageError("--point must be a JSON array")
    x = PointFn.from_json(P, arr)
    out = _MAPS[args.map](x, args.dilate)
    print(json.dumps(out.to_json(), separators=(",", ":")))
    return 0


def _cmd_vertices(args) -> int:
    P = _load_poset(args.poset)
    kind = PolytopeKind.parse(args.kind)
    verts = geometry.vertices(kind, P)
    payload = {
        "kind": kind.value,
        "count": len(verts),
        "vertices": [v.to_json() for v in verts],
    }
    _emit(payload, args.format)
    return 0


def _cmd_triangulate(args) -> int:
    P = _load_poset(args.poset)
    kind = PolytopeKind.parse(args.kind)
    side, facets, verts = triangulation_facets(kind, P)
    rows = []
    for F, vs in zip(facets, verts):
        rows.append(
            {
                "extension": [str(P.elements[v]) for v in F.extension.order],
                "sign": list(F.sign.values),
                "vertices": [v.to_json() for v in vs],
                "functionals": [list(r) for r in F.rows(side)],
            }
        )
    payload = {"kind": kind.value, "facet_count": len(facets), "facets": rows}
    code = 0
    if args.verify:
        report = verify_triangulation(kind, P, samples=args.samples, seed=args.seed)
        payload["report"] = report
        if not report["ok"]:
            code = 2
    _emit(payload, args.format)
    return code


def _cmd_stats(args) -> int:
    P = _load_poset(args.poset)
    d = P.d
    if args.what == "hstar":
        kind = PolytopeKind.parse(args.kind)
        h = hstar_from_ehrhart(geometry.ehrhart(kind, P), d)
        payload = {
            "what": "hstar",
            "kind": kind.value,
            "hstar": [int(h.coefficient(i)) for i in range(d + 1)],
        }
    elif args.what == "gamma":
        kind = PolytopeKind.parse(args.kind)
        h = hstar_from_ehrhart(geometry.ehrhart(kind, P), d)
        g = gamma_polynomial(h, d)
        payload = {
            "what": "gamma",
            "kind": kind.value,
            "gamma": [int(g.coefficient(i)) for i in range(d // 2 + 1)],
        }
    elif args.what == "dvector":
        via_gamma = d_vector(P, VIA_GAMMA)
        via_peaks = d_vector(P, VIA_PEAKS)
        payload = {
            "what": "dvector",
            "via_gamma": list(via_gamma),
            "via_peaks": list(via_peaks),
            "agree": via_gamma == via_peaks,
        }
    else:
        F = flag_vectors(P)
        ranks = sorted(F.f, key=lambda S: (len(S), S))
        payload = {
            "what": "flags",
            "d": F.d,
            "f": [{"ranks": list(S), "count": F.f[S]} for S in ranks],
            "h": [{"ranks": list(S), "count": F.h[S]} for S in ranks],
            "h_vector": list(F.h_vector),
        }
    _emit(payload, args.format)
    return 0


def _cmd_verify(args) -> int:
    P = _load_poset(args.poset)
    report = verify_suite(P, m_max=args.m_max, seed=args.seed, samples=args.samples)
    _emit(report, args.format)
    return 0 if report["ok"] else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="epoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kind=False):
        p.add_argument(
            "--poset",
            required=True,
            help="poset file path, or builtin:<name> (%s)" % ", ".join(builtin_names()),
        )
        p.add_argument("--format", choices=["json", "text"], default="json")
        if kind:
            p.add_argument("--kind", choices=["eo", "ec", "o", "c"], default="eo")

    p = sub.add_parser("info", help="poset summary")
    common(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("points", help="integer points of a dilated polytope")
    common(p, kind=True)
    p.add_argument("--dilate", type=int, default=1)
    p.set_defaults(func=_cmd_points)

    p = sub.add_parser("ehrhart", help="lattice point counting polynomial")
    common(p, kind=True)
    p.add_argument("--check", action="store_true", help="recount at an extra dilate")
    p.set_defaults(func=_cmd_ehrhart)

    p = sub.add_parser("transfer", help="apply a transfer map to one point")
    common(p)
    p.add_argument("--map", choices=sorted(_MAPS), required=True)
    p.add_argument("--point", required=True, help='JSON array, e.g. \'["1","1","1"]\'')
    p.add_argument("--dilate", type=int, default=1, help="dilate for pi/theta")
    p.set_defaults(func=_cmd_transfer)

    p = sub.add_parser("vertices", help="vertex set of a polytope")
    common(p, kind=True)
    p.set_defaults(func=_cmd_vertices)

    p = sub.add_parser("triangulate", help="unimodular triangulation data")
    common(p, kind=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_triangulate)

    p = sub.add_parser("stats", help="h*, gamma, d-vector, or flag vectors")
    common(p, kind=True)
    p.add_argument(
        "--what", choices=["hstar", "gamma", "dvector", "flags"], required=True
    )
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("verify", help="run the full cross-check suite")
    common(p)
    p.add_argument("--m-max", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

"""Enriched order and chain polytopes of finite posets.

Exact tools for the two signed analogues of Stanley's poset polytopes:
point enumeration, transfer maps, vertex and facet structure, unimodular
triangulations, and Ehrhart statistics, all in rational arithmetic.
"""

from .errors import (
    EpolyError,
    PosetFormatError,
    SizeLimitError,
    ValidationError,
    VerificationError,
)
from .geometry import (
    PolytopeKind,
    count_lattice_points,
    count_left_enriched,
    ehrhart,
    enumerate_left_enriched,
    hull_membership,
    lattice_points,
    membership,
    vertices,
)
from .points import (
    EChain,
    PointFn,
    Signature,
    SignedAntichain,
    SignedFilter,
    echain_from_pair,
    echain_signature,
    efilter_hasse,
    efilter_less,
    enumerate_signed_antichains,
    enumerate_signed_filters,
    format_rat,
    maximal_echains,
    parse_rat,
    support_preceq,
)
from .polynomial import IntPolynomial, interpolate
from .poset import (
    LinearExtension,
    PChain,
    Poset,
    antichains,
    chains_of,
    count_left_peaks,
    linear_extensions,
    order_filters,
    parse_poset,
)
from .corpus import builtin_names, builtin_poset, corpus
from .scan import HAVE_NUMBA, resolve_backend, scan_lepp, scan_linear
from .stats import (
    VIA_GAMMA,
    VIA_PEAKS,
    d_vector,
    gamma_polynomial,
    h_polynomial_from_flags,
    hstar_from_ehrhart,
)
from .transfer import (
    chain_functionals,
    check_left_enriched,
    enriched_phi,
    enriched_psi,
    is_left_enriched,
    max_chain_sum,
    pi_map,
    reflect,
    stanley_phi,
    stanley_psi,
    theta_map,
)
from .triangulation import (
    CHAIN_SIDE,
    ORDER_SIDE,
    FacetData,
    FlagVectors,
    Simplex,
    enriched_simplices,
    facet_data,
    facet_functionals,
    flag_vectors,
    stanley_simplices,
    triangulation_facets,
    unimodular_volume,
    verify_triangulation,
)
from .verify import verify_suite

__version__ = "0.1.0"

__all__ = [
    "CHAIN_SIDE",
    "EChain",
    "EpolyError",
    "FacetData",
    "FlagVectors",
    "HAVE_NUMBA",
    "IntPolynomial",
    "LinearExtension",
    "ORDER_SIDE",
    "PChain",
    "PointFn",
    "PolytopeKind",
    "Poset",
    "PosetFormatError",
    "Signature",
    "SignedAntichain",
    "SignedFilter",
    "Simplex",
    "SizeLimitError",
    "VIA_GAMMA",
    "VIA_PEAKS",
    "ValidationError",
    "VerificationError",
    "antichains",
    "builtin_names",
    "builtin_poset",
    "chain_functionals",
    "chains_of",
    "check_left_enriched",
    "corpus",
    "count_lattice_points",
    "count_left_enriched",
    "count_left_peaks",
    "d_vector",
    "echain_from_pair",
    "echain_signature",
    "efilter_hasse",
    "efilter_less",
    "ehrhart",
    "enriched_phi",
    "enriched_psi",
    "enriched_simplices",
    "enumerate_left_enriched",
    "enumerate_signed_antichains",
    "enumerate_signed_filters",
    "facet_data",
    "facet_functionals",
    "flag_vectors",
    "format_rat",
    "gamma_polynomial",
    "h_polynomial_from_flags",
    "hstar_from_ehrhart",
    "hull_membership",
    "interpolate",
    "is_left_enriched",
    "lattice_points",
    "linear_extensions",
    "max_chain_sum",
    "maximal_echains",
    "membership",
    "order_filters",
    "parse_poset",
    "parse_rat",
    "pi_map",
    "reflect",
    "resolve_backend",
    "scan_lepp",
    "scan_linear",
    "stanley_phi",
    "stanley_psi",
    "stanley_simplices",
    "support_preceq",
    "theta_map",
    "triangulation_facets",
    "unimodular_volume",
    "verify_suite",
    "vertices",
]

"""Rational point functions, signed filters and antichains, and chains in eF(P)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import ValidationError, check_budget, guard_count
from .poset import Poset, antichains, min_of_subset, order_filters


def format_rat(q: Fraction) -> str:
    """Render a rational as 'p/q', or plain 'n' for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(s) -> Fraction:
    """Parse 'p/q' or 'n' (also accepts ints) into an exact rational."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad rational literal {s!r}") from exc
    raise ValidationError(f"bad rational value {s!r}")


class PointFn:
    """Dense rational-valued function on the elements of a poset."""

    __slots__ = ("poset", "values")

    def __init__(self, poset: Poset, values: Iterable):
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != poset.d:
            raise ValidationError(
                f"point has {len(vals)} coordinates, poset has {poset.d} elements"
            )
        self.poset = poset
        self.values = vals

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.values) if x != 0)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.values)

    def to_json(self) -> list[str]:
        return [format_rat(x) for x in self.values]

    @classmethod
    def from_json(cls, poset: Poset, arr: Sequence) -> "PointFn":
        return cls(poset, [parse_rat(x) for x in arr])

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointFn):
            return NotImplemented
        return self.poset == other.poset and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.poset, self.values))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_json()})"


def _require_signs(values: tuple[Fraction, ...], what: str) -> tuple[int, ...]:
    signs = []
    for x in values:
        if x not in (-1, 0, 1):
            raise ValidationError(f"{what} values must lie in {{-1, 0, 1}}, got {x}")
        signs.append(int(x))
    return tuple(signs)


class SignedFilter(PointFn):
    """A {-1, 0, 1} point whose support is an order filter, with -1 only
    at minimal elements of the support."""

    __slots__ = ()

    def __init__(self, poset: Poset, values: Iterable):
        super().__init__(poset, values)
        signs = _require_signs(self.values, "signed filter")
        supp = self.support()
        supp_set = set(supp)
        for v in supp:
            for w in poset.upper_covers[v]:
                if w not in supp_set:
                    raise ValidationError(
                        "signed filter support is not an order filter"
                    )
        mins = set(min_of_subset(poset, supp))
        for v in supp:
            if signs[v] == -1 and v not in mins:
                raise ValidationError(
                    "signed filter has -1 at a non-minimal support element"
                )


class SignedAntichain(PointFn):
    """A {-1, 0, 1} point whose support is an antichain."""

    __slots__ = ()

    def __init__(self, poset: Poset, values: Iterable):
        super().__init__(poset, values)
        _require_signs(self.values, "signed antichain")
        supp = self.support()
        for i, v in enumerate(supp):
            for w in supp[i + 1:]:
                if poset.less(v, w) or poset.less(w, v):
                    raise ValidationError(
                        "signed antichain support is not an antichain"
                    )


@dataclass(frozen=True)
class Signature:
    """A map from poset elements to {1, 0, -1}."""

    poset: Poset
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.poset.d:
            raise ValidationError("signature length does not match the poset")
        if any(x not in (-1, 0, 1) for x in self.values):
            raise ValidationError("signature values must lie in {-1, 0, 1}")

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.values) if x != 0)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def efilter_less(f: SignedFilter, g: SignedFilter) -> bool:
    """Decide g > f in the ordering on eF(P).

    g > f holds when supp(g) strictly contains supp(f), g >= f pointwise on
    supp(f), and g(v) = f(v) at every support point of f that is minimal in
    supp(g).
    """
    if f.poset != g.poset:
        raise ValidationError("points live on different posets")
    sf, sg = set(f.support()), set(g.support())
    if not (sf < sg):
        return False
    if any(g.values[v] < f.values[v] for v in sf):
        return False
    g_min = set(min_of_subset(g.poset, sg))
    return all(g.values[v] == f.values[v] for v in sf & g_min)


def support_preceq(f: PointFn, g: PointFn) -> bool:
    """Decide f preceq g: supp(f) inside supp(g) and agreement on supp(f)."""
    if f.poset != g.poset:
        raise ValidationError("points live on different posets")
    return all(
        g.values[v] == f.values[v] for v in f.support()
    ) and set(f.support()) <= set(g.support())


def enumerate_signed_filters(P: Poset) -> list[SignedFilter]:
    """All of eF(P): each order filter with all sign choices at its minima."""
    check_budget(1 << P.d, "signed filter enumeration")
    out: list[SignedFilter] = []
    for F in order_filters(P):
        mins = min_of_subset(P, F)
        others = [v for v in F if v not in set(mins)]
        for signs in product((1, -1), repeat=len(mins)):
            values = [0] * P.d
            for v in others:
                values[v] = 1
            for v, s in zip(mins, signs):
                values[v] = s
            out.append(SignedFilter(P, values))
            guard_count(len(out), "signed filter enumeration")
    return out


def enumerate_signed_antichains(P: Poset) -> list[SignedAntichain]:
    """All of eA(P): each antichain with all sign choices on it."""
    check_budget(1 << P.d, "signed antichain enumeration")
    out: list[SignedAntichain] = []
    for A in antichains(P):
        for signs in product((1, -1), repeat=len(A)):
            values = [0] * P.d
            for v, s in zip(A, signs):
                values[v] = s
            out.append(SignedAntichain(P, values))
            guard_count(len(out), "signed antichain enumeration")
    return out


class EChain:
    """A chain f_1 > f_2 > ... > f_k in (eF(P), >=), stored top-down."""

    def __init__(self, poset: Poset, links: Iterable[SignedFilter]):
        self.poset = poset
        self.links = tuple(links)
        for f in self.links:
            if not isinstance(f, SignedFilter):
                raise ValidationError("chain links must be signed filters")
            if f.poset != poset:
                raise ValidationError("chain links live on different posets")
        for upper, lower in zip(self.links, self.links[1:]):
            if not efilter_less(lower, upper):
                raise ValidationError("chain links are not strictly decreasing")
        # The signature must not depend on which link witnesses an element.
        self._sgn_values = [0] * poset.d
        for f in self.links:
            for v in min_of_subset(poset, f.support()):
                s = int(f.values[v])
                if self._sgn_values[v] not in (0, s):
                    raise ValidationError("chain has an ill-defined signature")
                self._sgn_values[v] = s

    @cached_property
    def supp_chain(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f.support()) for f in self.links)

    @cached_property
    def sgn(self) -> Signature:
        return Signature(self.poset, tuple(self._sgn_values))

    def __len__(self) -> int:
        return len(self.links)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EChain):
            return NotImplemented
        return self.poset == other.poset and self.links == other.links

    def __hash__(self) -> int:
        return hash((self.poset, self.links))

    def __repr__(self) -> str:
        return f"EChain({[f.to_json() for f in self.links]})"


def echain_signature(K: EChain) -> tuple[tuple[frozenset[int], ...], Signature]:
    """The support chain and signature of a chain in eF(P)."""
    return K.supp_chain, K.sgn


def echain_from_pair(
    P: Poset, filters: Sequence[Iterable[int]], phi: Signature
) -> EChain:
    """Rebuild the unique chain in eF(P) with the given support chain and
    signature.

    The support of phi must equal the union of the minimal-element sets of
    the listed filters.
    """
    if phi.poset != P:
        raise ValidationError("signature lives on a different poset")
    chains = [tuple(sorted(P.as_index(v) for v in F)) for F in filters]
    for upper, lower in zip(chains, chains[1:]):
        if not set(lower) < set(upper):
            raise ValidationError("filters are not strictly decreasing")
    needed = set()
    for F in chains:
        needed.update(min_of_subset(P, F))
    if set(phi.support()) != needed:
        raise ValidationError(
            "signature support must equal the union of filter minima"
        )
    links = []
    for F in chains:
        mins = set(min_of_subset(P, F))
        values = [0] * P.d
        for v in F:
            values[v] = phi.values[v] if v in mins else 1
        links.append(SignedFilter(P, values))
    return EChain(P, links)


def efilter_hasse(P: Poset) -> list[tuple[SignedFilter, SignedFilter]]:
    """Cover pairs (lower, upper) of the graded poset (eF(P), >=)."""
    points = enumerate_signed_filters(P)
    less = {}
    for i, f in enumerate(points):
        for j, g in enumerate(points):
            if i != j and efilter_less(f, g):
                less.setdefault(j, set()).add(i)
    out = []
    for j, below in sorted(less.items()):
        for i in sorted(below):
            # i is covered by j when nothing sits strictly between them
            between = any(
                k != i and i in less.get(k, set()) for k in below
            )
            if not between:
                out.append((points[i], points[j]))
    return out


def maximal_echains(P: Poset) -> list[EChain]:
    """All maximal chains of (eF(P), >=), built from extension-signature
    pairs; each has d+1 links ending at the zero map."""
    from .poset import linear_extensions

    check_budget((1 << P.d) * max(1, P.d), "maximal chain enumeration in eF")
    out = []
    for ext in linear_extensions(P):
        filter_chain = [tuple(sorted(ext.order[i:])) for i in range(P.d)]
        filter_chain.append(())
        for signs in product((1, -1), repeat=P.d):
            phi = Signature(P, signs)
            out.append(echain_from_pair(P, filter_chain, phi))
            guard_count(len(out), "maximal chain enumeration in eF")
    return out

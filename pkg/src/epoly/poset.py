"""Finite posets: filters, antichains, chains, and linear extensions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import PosetFormatError, ValidationError, check_budget, guard_count

MAX_ELEMENTS = 20


@dataclass(frozen=True)
class PChain:
    """A chain stored top-down: elems = (v1, ..., vr) with v1 > ... > vr."""

    elems: tuple[int, ...]
    saturated: bool
    maximal: bool

    def __len__(self) -> int:
        return len(self.elems)


@dataclass(frozen=True)
class LinearExtension:
    """A linear extension listed smallest-first, with its left peak count."""

    order: tuple[int, ...]
    left_peaks: int


class Poset:
    """Finite poset on labeled elements.

    Elements are indexed 0..d-1 in input order.  The full reachability
    relation is stored as a dense boolean matrix; cover pairs are the
    transitive reduction.  Instances are immutable after construction and
    safe to share between threads.
    """

    def __init__(self, elements: Iterable[str], relations: Iterable[tuple[str, str]]):
        elements = tuple(str(e) for e in elements)
        seen = set()
        for e in elements:
            if e in seen:
                raise PosetFormatError(f"duplicate element label {e!r}")
            seen.add(e)
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        d = len(elements)

        adj = np.zeros((d, d), dtype=bool)
        for a, b in relations:
            if a not in self.index:
                raise PosetFormatError(f"unknown element {a!r} in relation")
            if b not in self.index:
                raise PosetFormatError(f"unknown element {b!r} in relation")
            adj[self.index[a], self.index[b]] = True

        # Warshall closure of the strict relation; a true diagonal is a cycle.
        lt = adj.copy()
        for k in range(d):
            lt |= np.outer(lt[:, k], lt[k, :])
        if bool(lt.diagonal().any()):
            cyc = self.elements[int(np.flatnonzero(lt.diagonal())[0])]
            raise PosetFormatError(f"cycle through element {cyc!r}")

        self._lt = lt
        self._lt.flags.writeable = False
        leq = lt | np.eye(d, dtype=bool)
        leq.flags.writeable = False
        self.leq = leq

        reduction = lt & ~(lt @ lt)
        self.covers = tuple(
            (int(a), int(b)) for a, b in np.argwhere(reduction).tolist()
        )

    @property
    def d(self) -> int:
        return len(self.elements)

    def as_index(self, v) -> int:
        """Normalize an element given as a label or an index."""
        if isinstance(v, str):
            try:
                return self.index[v]
            except KeyError:
                raise ValidationError(f"unknown element {v!r}") from None
        i = int(v)
        if not 0 <= i < self.d:
            raise ValidationError(f"element index {i} out of range")
        return i

    def less(self, a, b) -> bool:
        return bool(self._lt[self.as_index(a), self.as_index(b)])

    def leq_pair(self, a, b) -> bool:
        return bool(self.leq[self.as_index(a), self.as_index(b)])

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        row: list[list[int]] = [[] for _ in range(self.d)]
        for a, b in self.covers:
            row[b].append(a)
        return tuple(tuple(sorted(r)) for r in row)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        row: list[list[int]] = [[] for _ in range(self.d)]
        for a, b in self.covers:
            row[a].append(b)
        return tuple(tuple(sorted(r)) for r in row)

    @cached_property
    def minimals(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.d) if not self._lt[:, v].any())

    @cached_property
    def maximals(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.d) if not self._lt[v, :].any())

    @cached_property
    def strict_up_bits(self) -> tuple[int, ...]:
        """Bitmask of {w : w > v} for each v."""
        out = []
        for v in range(self.d):
            mask = 0
            for w in np.flatnonzero(self._lt[v, :]).tolist():
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    @cached_property
    def comparable_bits(self) -> tuple[int, ...]:
        """Bitmask of {w != v : w < v or v < w} for each v."""
        out = []
        comp = self._lt | self._lt.T
        for v in range(self.d):
            mask = 0
            for w in np.flatnonzero(comp[v, :]).tolist():
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    @cached_property
    def canonical_extension(self) -> tuple[int, ...]:
        """Lexicographically smallest linear extension of the input order."""
        indeg = [len(self.lower_covers[v]) for v in range(self.d)]
        ready = sorted(v for v in range(self.d) if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in self.upper_covers[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    # keep the ready list sorted so the greedy pick is lex smallest
                    lo, hi = 0, len(ready)
                    while lo < hi:
                        mid = (lo + hi) // 2
                        if ready[mid] < w:
                            lo = mid + 1
                        else:
                            hi = mid
                    ready.insert(lo, w)
        return tuple(order)

    @cached_property
    def natural_labels(self) -> tuple[int, ...]:
        """Label 1..d of each element under the canonical extension."""
        labels = [0] * self.d
        for pos, v in enumerate(self.canonical_extension):
            labels[v] = pos + 1
        return tuple(labels)

    @cached_property
    def maximal_chains(self) -> tuple[tuple[int, ...], ...]:
        """All maximal chains of P, each stored top-down."""
        return tuple(c.elems for c in chains_of(self, kind="maximal"))

    @cached_property
    def saturated_chains_topped_at_max(self) -> tuple[tuple[int, ...], ...]:
        """Saturated chains whose top is a maximal element, stored top-down."""
        return tuple(
            c.elems
            for c in chains_of(self, kind="saturated")
            if c.elems[0] in self.maximals
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{self.elements[a]}<{self.elements[b]}" for a, b in self.covers
        )
        return f"Poset({list(self.elements)!r}, [{pairs}])"


def parse_poset(text: str) -> Poset:
    """Parse a poset from the line format or the JSON form.

    Line format: `elements: a b c` then `covers: a<c b<c`, with `#` starting
    a comment.  JSON form: {"elements": [...], "covers": [["a","c"], ...]}.
    Listed relations need not be covers; they are reduced transitively.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PosetFormatError(f"bad JSON poset: {exc}") from exc
        if not isinstance(data, dict) or "elements" not in data:
            raise PosetFormatError("JSON poset needs an 'elements' array")
        elements = data["elements"]
        covers = data.get("covers", [])
        if not isinstance(elements, list):
            raise PosetFormatError("'elements' must be an array of labels")
        if not isinstance(covers, list):
            raise PosetFormatError("'covers' must be an array of pairs")
        pairs = []
        for item in covers:
            if not (isinstance(item, list) and len(item) == 2):
                raise PosetFormatError(f"bad cover pair {item!r}")
            pairs.append((str(item[0]), str(item[1])))
        return Poset([str(e) for e in elements], pairs)

    elements: list[str] = []
    pairs = []
    saw_elements = False
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            saw_elements = True
            elements.extend(line[len("elements:"):].split())
        elif line.startswith("covers:"):
            for token in line[len("covers:"):].split():
                parts = token.split("<")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise PosetFormatError(f"bad cover token {token!r}")
                pairs.append((parts[0], parts[1]))
        else:
            raise PosetFormatError(f"unrecognized line {raw_line.strip()!r}")
    if not saw_elements:
        raise PosetFormatError("missing 'elements:' line")
    return Poset(elements, pairs)


def _check_element_count(P: Poset, what: str) -> None:
    if P.d > MAX_ELEMENTS:
        check_budget(1 << P.d, what)


def _subsets_by_size(d: int):
    """All subsets of range(d) as ascending tuples, ordered by (size, lex)."""
    for k in range(d + 1):
        yield from combinations(range(d), k)


def order_filters(P: Poset) -> list[tuple[int, ...]]:
    """All order filters (upward-closed subsets) as ascending index tuples."""
    _check_element_count(P, "order filter enumeration")
    check_budget(1 << P.d, "order filter enumeration")
    ups = P.strict_up_bits
    out = []
    for subset in _subsets_by_size(P.d):
        mask = 0
        for v in subset:
            mask |= 1 << v
        if all(ups[v] & mask == ups[v] for v in subset):
            out.append(subset)
    return out


def antichains(P: Poset) -> list[tuple[int, ...]]:
    """All antichains (pairwise incomparable subsets) as ascending tuples."""
    _check_element_count(P, "antichain enumeration")
    check_budget(1 << P.d, "antichain enumeration")
    comp = P.comparable_bits
    out = []
    for subset in _subsets_by_size(P.d):
        mask = 0
        for v in subset:
            mask |= 1 << v
        if all(comp[v] & mask == 0 for v in subset):
            out.append(subset)
    return out


def filter_closure(P: Poset, A: Iterable) -> tuple[int, ...]:
    """Smallest order filter containing A: all w with w >= a for some a in A."""
    members = set()
    for a in A:
        i = P.as_index(a)
        members.add(i)
        members.update(np.flatnonzero(P._lt[i, :]).tolist())
    return tuple(sorted(members))


def min_of_subset(P: Poset, S: Iterable[int]) -> tuple[int, ...]:
    """Minimal elements of a subset under the induced order."""
    S = sorted(set(S))
    return tuple(v for v in S if not any(P._lt[w, v] for w in S))


def max_of_subset(P: Poset, S: Iterable[int]) -> tuple[int, ...]:
    """Maximal elements of a subset under the induced order."""
    S = sorted(set(S))
    return tuple(v for v in S if not any(P._lt[v, w] for w in S))


def _region_members(P: Poset, region: str, element) -> list[int]:
    if region == "all":
        return list(range(P.d))
    v = P.as_index(element)
    if region == "below":
        return np.flatnonzero(P.leq[:, v]).tolist()
    if region == "strictly_below":
        return np.flatnonzero(P._lt[:, v]).tolist()
    raise ValidationError(f"unknown region {region!r}")


def chains_of(
    P: Poset,
    kind: str = "all",
    region: str = "all",
    element=None,
) -> list[PChain]:
    """Chains of P, P_{<=v}, or P_{<v}, stored top-down in lex order.

    kind 'all' lists every nonempty chain, 'saturated' only those whose
    consecutive pairs are covers, and 'maximal' the saturated chains running
    from a maximal to a minimal element of the region.  All three region
    forms are downward closed, so covers in the region agree with covers
    in P.
    """
    if kind not in ("all", "saturated", "maximal"):
        raise ValidationError(f"unknown chain kind {kind!r}")
    _check_element_count(P, "chain enumeration")
    members = _region_members(P, region, element)
    member_set = set(members)
    region_max = set(
        v for v in members if not any(P._lt[v, w] for w in members)
    )
    region_min = set(
        v for v in members if not any(P._lt[w, v] for w in members)
    )

    saturated_only = kind in ("saturated", "maximal")
    out: list[PChain] = []

    def candidates(v: int) -> list[int]:
        if saturated_only:
            return [w for w in P.lower_covers[v] if w in member_set]
        return [w for w in np.flatnonzero(P._lt[:, v]).tolist() if w in member_set]

    def emit(chain: list[int]) -> None:
        top, bottom = chain[0], chain[-1]
        saturated = saturated_only or all(
            chain[i + 1] in P.lower_covers[chain[i]] for i in range(len(chain) - 1)
        )
        maximal = saturated and top in region_max and bottom in region_min
        if kind == "maximal" and not maximal:
            return
        out.append(PChain(tuple(chain), saturated, maximal))
        guard_count(len(out), "chain enumeration")

    def extend(chain: list[int]) -> None:
        emit(chain)
        for w in candidates(chain[-1]):
            chain.append(w)
            extend(chain)
            chain.pop()

    starts = sorted(region_max) if kind == "maximal" else sorted(members)
    for v in starts:
        extend([v])
    return out


def count_left_peaks(pi: Sequence[int]) -> int:
    """Left peaks of a word pi_1..pi_d, with pi_0 = 0 prepended."""
    d = len(pi)
    count = 0
    for i in range(d - 1):
        left = pi[i - 1] if i >= 1 else 0
        if left < pi[i] > pi[i + 1]:
            count += 1
    return count


def linear_extensions(P: Poset) -> list[LinearExtension]:
    """All linear extensions in lex order, with canonical-label peak counts."""
    _check_element_count(P, "linear extension enumeration")
    labels = P.natural_labels
    indeg = [len(P.lower_covers[v]) for v in range(P.d)]
    ready = sorted(v for v in range(P.d) if indeg[v] == 0)
    order: list[int] = []
    out: list[LinearExtension] = []

    def backtrack() -> None:
        if len(order) == P.d:
            pi = [labels[v] for v in order]
            out.append(LinearExtension(tuple(order), count_left_peaks(pi)))
            guard_count(len(out), "linear extension enumeration")
            return
        for v in list(ready):
            ready.remove(v)
            order.append(v)
            opened = []
            for w in P.upper_covers[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    opened.append(w)
            ready.extend(opened)
            ready.sort()
            backtrack()
            for w in opened:
                ready.remove(w)
            for w in P.upper_covers[v]:
                indeg[w] += 1
            order.pop()
            ready.append(v)
            ready.sort()

    backtrack()
    return out

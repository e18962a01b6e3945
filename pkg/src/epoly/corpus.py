"""Built-in example posets, addressable as builtin:<name> on the CLI."""

from .errors import ValidationError
from .poset import Poset, parse_poset

POSET_TEXTS = {
    "chain1": "elements: a\n",
    "chain2": "elements: a b\ncovers: a<b\n",
    "chain3": "elements: a b c\ncovers: a<b b<c\n",
    "chain4": "elements: a b c d\ncovers: a<b b<c c<d\n",
    "antichain2": "elements: a b\n",
    "antichain3": "elements: a b c\n",
    # u and v both covered by w
    "lambda": "elements: u v w\ncovers: u<w v<w\n",
    # dual of lambda: w below both u and v
    "vee": "elements: u v w\ncovers: w<u w<v\n",
    "diamond": "elements: a b c d\ncovers: a<b a<c b<d c<d\n",
    "twoplustwo": "elements: a b c d\ncovers: a<b c<d\n",
    # the zigzag N: a < c, b < c, b < d
    "zigzag": "elements: a b c d\ncovers: a<c b<c b<d\n",
}


def builtin_names() -> list[str]:
    return sorted(POSET_TEXTS)


def builtin_poset(name: str) -> Poset:
    if name not in POSET_TEXTS:
        raise ValidationError(
            f"unknown builtin poset {name!r}; available: {', '.join(builtin_names())}"
        )
    return parse_poset(POSET_TEXTS[name])


def corpus() -> dict[str, Poset]:
    """Every builtin poset, keyed by name."""
    return {name: builtin_poset(name) for name in builtin_names()}

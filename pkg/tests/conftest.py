import pytest

from epoly import builtin_poset

# Frozen corpus data.  Independent derivations: E_1 equals the sum over
# order filters F of 2^(#min F) (computed by hand for every poset below),
# antichain counts are (2m+1)^n, disjoint unions multiply, chains give
# binomial h* rows, and gamma relates to left peak counts by 4^i.  The
# remaining values were produced by three enumerators that agree pairwise
# and are kept as regression constants.
CORPUS = {
    # name: (d, extensions, (E1, E2, E3), hstar, gamma, dvec)
    "chain1": (1, 1, (3, 5, 7), (1, 1), (1,), (1,)),
    "chain2": (2, 1, (5, 13, 25), (1, 2, 1), (1, 0), (1, 0)),
    "chain3": (3, 1, (7, 25, 63), (1, 3, 3, 1), (1, 0), (1, 0)),
    "chain4": (4, 1, (9, 41, 129), (1, 4, 6, 4, 1), (1, 0, 0), (1, 0, 0)),
    "antichain2": (2, 2, (9, 25, 49), (1, 6, 1), (1, 4), (1, 2)),
    "antichain3": (3, 6, (27, 125, 343), (1, 23, 23, 1), (1, 20), (1, 10)),
    "lambda": (3, 2, (11, 45, 119), (1, 7, 7, 1), (1, 4), (1, 2)),
    "vee": (3, 2, (11, 45, 119), (1, 7, 7, 1), (1, 4), (1, 2)),
    "diamond": (4, 2, (13, 69, 233), (1, 8, 14, 8, 1), (1, 4, 0), (1, 2, 0)),
    "twoplustwo": (4, 6, (25, 169, 625), (1, 20, 54, 20, 1), (1, 16, 16), (1, 8, 4)),
    "zigzag": (4, 5, (21, 141, 521), (1, 16, 46, 16, 1), (1, 12, 16), (1, 6, 4)),
}

VERTEX_COUNTS = {
    # name: {kind: count}
    "chain1": {"o": 2, "c": 2, "eo": 2, "ec": 2},
    "chain2": {"o": 3, "c": 3, "eo": 3, "ec": 4},
    "chain3": {"o": 4, "c": 4, "eo": 4, "ec": 6},
    "chain4": {"o": 5, "c": 5, "eo": 5, "ec": 8},
    "antichain2": {"o": 4, "c": 4, "eo": 4, "ec": 4},
    "antichain3": {"o": 8, "c": 8, "eo": 8, "ec": 8},
    "lambda": {"o": 5, "c": 5, "eo": 5, "ec": 6},
    "vee": {"o": 5, "c": 5, "eo": 5, "ec": 6},
    "diamond": {"o": 6, "c": 6, "eo": 6, "ec": 8},
    "twoplustwo": {"o": 9, "c": 9, "eo": 9, "ec": 16},
    "zigzag": {"o": 8, "c": 8, "eo": 8, "ec": 12},
}


@pytest.fixture
def lam():
    return builtin_poset("lambda")


@pytest.fixture
def chain2():
    return builtin_poset("chain2")


@pytest.fixture
def diamond():
    return builtin_poset("diamond")

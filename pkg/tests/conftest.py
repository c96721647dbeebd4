"""Shared fixtures and frozen reference tables for the test suite.

The frozen H-tables below are the published reference values for the
two-component unlink, the positive and negative Hopf links, the
Whitehead link, and the L(14,3) link; every entry was transcribed once
and is compared exactly against the Gorsky-Nemethi evaluation.
"""

import pytest

from lsat import HalfInt, LinkAlexData
from lsat.halfgrid_poly import LaurentPoly1, LaurentPoly2


def hi(doubled: int) -> HalfInt:
    return HalfInt(doubled)


def grid(doubled_lo: int, doubled_hi: int):
    """Lattice coordinates from doubled_lo to doubled_hi in whole steps."""
    return [HalfInt(d) for d in range(doubled_lo, doubled_hi + 1, 2)]


# Rows r descending, columns t ascending, exactly as in the reference
# figures.  Coordinates are given as doubled integers.

UNLINK_TABLE = {
    "t": grid(-4, 4),
    "r": grid(-4, 2)[::-1],  # r = 1, 0, -1, -2
    "h": [
        [2, 1, 0, 0, 0],  # r = 1
        [2, 1, 0, 0, 0],  # r = 0
        [3, 2, 1, 1, 1],  # r = -1
        [4, 3, 2, 2, 2],  # r = -2
    ],
}

HOPF_PLUS_TABLE = {
    "t": grid(-3, 5),
    "r": grid(-3, 3)[::-1],  # r = 3/2, 1/2, -1/2, -3/2
    "h": [
        [2, 1, 0, 0, 0],
        [2, 1, 0, 0, 0],
        [2, 1, 1, 1, 1],
        [3, 2, 2, 2, 2],
    ],
}

HOPF_MINUS_TABLE = {
    "t": grid(-5, 3),
    "r": grid(-5, 1)[::-1],  # r = 1/2, -1/2, -3/2, -5/2
    "h": [
        [2, 1, 0, 0, 0],
        [3, 2, 1, 0, 0],
        [4, 3, 2, 1, 1],
        [5, 4, 3, 2, 2],
    ],
}

WHITEHEAD_TABLE = {
    "t": grid(-4, 4),
    "r": grid(-4, 4)[::-1],  # r = 2 .. -2
    "h": [
        [2, 1, 0, 0, 0],
        [2, 1, 0, 0, 0],
        [2, 1, 1, 0, 0],
        [3, 2, 1, 1, 1],
        [4, 3, 2, 2, 2],
    ],
}

MAZUR_TABLE = {
    "t": grid(-5, 5),
    "r": grid(-5, 5)[::-1],  # r = 5/2 .. -5/2
    "h": [
        [3, 2, 1, 0, 0, 0],
        [3, 2, 1, 0, 0, 0],
        [3, 2, 1, 1, 0, 0],
        [3, 2, 2, 1, 1, 1],
        [4, 3, 2, 2, 2, 2],
        [5, 4, 3, 3, 3, 3],
    ],
}


def negative_hopf_data() -> LinkAlexData:
    from lsat import resolve_sign

    return resolve_sign(
        LinkAlexData(
            linking=-1,
            delta_tilde=LaurentPoly2.from_terms({(hi(1), hi(1)): -1}),
            delta1=LaurentPoly1.one(),
            delta2=LaurentPoly1.one(),
        )
    )


@pytest.fixture(scope="session")
def whitehead_h():
    from lsat import HFunction, twobridge_data

    return HFunction(twobridge_data(3, 3))


@pytest.fixture(scope="session")
def mazur_h():
    from lsat import HFunction, twobridge_data

    return HFunction(twobridge_data(5, 3))


def assert_table_matches(h, table) -> None:
    for row, r in zip(table["h"], table["r"]):
        for value, t in zip(row, table["t"]):
            assert h(t, r) == value, f"H({t},{r}) = {h(t, r)} != {value}"


def family_pairs(include_q1: bool = False):
    lo = 1 if include_q1 else 3
    return [
        (r, q)
        for r in (3, 5, 7, 9)
        for q in range(lo, r + 1, 2)
        if (r, q) != (1, 1)
    ]


def companion_grid():
    from lsat import Companion

    grid_ = [
        Companion(tau=tau, eps=eps)
        for eps in (-1, 1)
        for tau in range(-2, 3)
    ]
    grid_.append(Companion(tau=0, eps=0))
    return grid_

"""Bundled reference tables.

Six small loops that exercise every corner of the toolkit: the smallest
nonassociative C-loop (order 10, a Steiner loop), the smallest
noncommutative nonassociative C-loop (order 12), the two nonassociative
C-loops of order 14 (both Steiner), the smallest nonassociative non-Steiner
commutative C-loop (order 16), and the smallest inverse-property loop whose
nucleus is not normal (order 12).
"""

from __future__ import annotations

from functools import lru_cache

from .core import LoopTable, parse_cayley
from .errors import UnknownFixtureError

_TABLES = {
    # order 10: smallest nonassociative C-loop; Steiner, exponent 2
    "ex10": """
        0 1 2 3 4 5 6 7 8 9
        1 0 3 2 5 4 9 8 7 6
        2 3 0 1 6 8 4 9 5 7
        3 2 1 0 7 9 8 4 6 5
        4 5 6 7 0 1 2 3 9 8
        5 4 8 9 1 0 7 6 2 3
        6 9 4 8 2 7 0 5 3 1
        7 8 9 4 3 6 5 0 1 2
        8 7 5 6 9 2 3 1 0 4
        9 6 7 5 8 3 1 2 4 0
    """,
    # order 12: smallest noncommutative nonassociative C-loop
    # (Klein-by-Z3 factor-set extension with parameter 2)
    "ex12": """
        0 1 2 3 4 5 6 7 8 9 10 11
        1 2 0 4 5 3 7 8 6 10 11 9
        2 0 1 5 3 4 8 6 7 11 9 10
        3 4 5 0 1 2 9 10 11 6 7 8
        4 5 3 1 2 0 10 11 9 7 8 6
        5 3 4 2 0 1 11 9 10 8 6 7
        6 7 8 10 11 9 0 1 2 5 3 4
        7 8 6 11 9 10 1 2 0 3 4 5
        8 6 7 9 10 11 2 0 1 4 5 3
        9 10 11 8 6 7 3 4 5 2 0 1
        10 11 9 6 7 8 4 5 3 0 1 2
        11 9 10 7 8 6 5 3 4 1 2 0
    """,
    # order 14: one of the two nonassociative C-loops of this order
    "ex14a": """
        0 1 2 3 4 5 6 7 8 9 10 11 12 13
        1 0 3 2 5 4 12 13 9 8 11 10 6 7
        2 3 0 1 6 7 4 5 11 12 13 8 9 10
        3 2 1 0 7 8 9 4 5 6 12 13 10 11
        4 5 6 7 0 1 2 3 10 13 8 12 11 9
        5 4 7 8 1 0 10 2 3 11 6 9 13 12
        6 12 4 9 2 10 0 11 13 3 5 7 1 8
        7 13 5 4 3 2 11 0 12 10 9 6 8 1
        8 9 11 5 10 3 13 12 0 1 4 2 7 6
        9 8 12 6 13 11 3 10 1 0 7 5 2 4
        10 11 13 12 8 6 5 9 4 7 0 1 3 2
        11 10 8 13 12 9 7 6 2 5 1 0 4 3
        12 6 9 10 11 13 1 8 7 2 3 4 0 5
        13 7 10 11 9 12 8 1 6 4 2 3 5 0
    """,
    # order 14: the other nonassociative C-loop of this order
    "ex14b": """
        0 1 2 3 4 5 6 7 8 9 10 11 12 13
        1 0 3 2 5 4 11 12 13 10 9 6 7 8
        2 3 0 1 6 7 4 5 11 12 13 8 9 10
        3 2 1 0 7 8 9 4 5 6 12 13 10 11
        4 5 6 7 0 1 2 3 10 13 8 12 11 9
        5 4 7 8 1 0 10 2 3 11 6 9 13 12
        6 11 4 9 2 10 0 13 12 3 5 1 8 7
        7 12 5 4 3 2 13 0 9 8 11 10 1 6
        8 13 11 5 10 3 12 9 0 7 4 2 6 1
        9 10 12 6 13 11 3 8 7 0 1 5 2 4
        10 9 13 12 8 6 5 11 4 1 0 7 3 2
        11 6 8 13 12 9 1 10 2 5 7 0 4 3
        12 7 9 10 11 13 8 1 6 2 3 4 0 5
        13 8 10 11 9 12 7 6 1 4 2 3 5 0
    """,
    # order 16: smallest nonassociative non-Steiner commutative C-loop
    "ex16": """
        0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15
        1 5 6 8 0 4 10 2 11 3 7 9 13 15 12 14
        2 6 0 12 7 10 1 4 14 13 5 15 3 9 8 11
        3 8 12 0 9 11 14 13 1 4 15 5 2 7 6 10
        4 0 7 9 5 1 2 10 3 11 6 8 14 12 15 13
        5 4 10 11 1 0 7 6 9 8 2 3 15 14 13 12
        6 10 1 14 2 7 5 0 12 15 4 13 9 3 11 8
        7 2 4 13 10 6 0 5 15 12 1 14 8 11 3 9
        8 11 14 1 3 9 12 15 5 0 13 4 7 2 10 6
        9 3 13 4 11 8 15 12 0 5 14 1 6 10 2 7
        10 7 5 15 6 2 4 1 13 14 0 12 11 8 9 3
        11 9 15 5 8 3 13 14 4 1 12 0 10 6 7 2
        12 13 3 2 14 15 9 8 7 6 11 10 0 1 4 5
        13 15 9 7 12 14 3 11 2 10 8 6 1 5 0 4
        14 12 8 6 15 13 11 3 10 2 9 7 4 0 5 1
        15 14 11 10 13 12 8 9 6 7 3 2 5 4 1 0
    """,
    # order 12: smallest inverse-property loop with a non-normal nucleus
    "ipnuc12": """
        0 1 2 3 4 5 6 7 8 9 10 11
        1 0 4 5 2 3 7 6 10 11 8 9
        2 5 0 4 3 1 8 11 6 10 9 7
        3 4 5 0 1 2 9 10 11 6 7 8
        4 3 1 2 5 0 10 9 7 8 11 6
        5 2 3 1 0 4 11 8 9 7 6 10
        6 8 7 11 9 10 0 2 1 4 5 3
        7 10 6 9 11 8 1 4 0 2 3 5
        8 6 9 10 7 11 2 0 5 3 1 4
        9 11 8 7 10 6 3 5 4 1 2 0
        10 7 11 8 6 9 4 1 3 5 0 2
        11 9 10 6 8 7 5 3 2 0 4 1
    """,
}

FIXTURE_NAMES = tuple(sorted(_TABLES))


@lru_cache(maxsize=None)
def load_fixture(name: str) -> LoopTable:
    """Return the validated bundled table registered under `name`."""
    try:
        text = _TABLES[name]
    except KeyError:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}"
        ) from None
    return parse_cayley(text, name=name)

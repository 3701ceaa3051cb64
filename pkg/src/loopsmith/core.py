"""Cayley-table representation of finite loops and the primitive operations.

A loop of order n is stored as an n x n table over elements 0..n-1 where
element 0 is the two-sided identity, every row and every column is a
permutation (Latin square), and row 0 / column 0 are the identity
permutation.  Elements are plain ints; all operations are pure functions
over an immutable table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    NoIdentityError,
    NotLatinError,
    NotPowerAssociativeError,
    NotSquareError,
    OutOfRangeError,
    UnsupportedOrderError,
)

MAX_ORDER = 255


@dataclass(frozen=True)
class LoopTable:
    """An immutable validated Cayley table with identity element 0."""

    rows: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return len(self.rows)

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def ldiv(self, a: int, b: int) -> int:
        """The unique z with a*z = b."""
        return self._ldiv[a][b]

    def rdiv(self, a: int, b: int) -> int:
        """The unique z with z*b = a."""
        return self._rdiv[b][a]

    @cached_property
    def _ldiv(self) -> tuple[tuple[int, ...], ...]:
        # _ldiv[a][b] = position of b in row a
        n = self.order
        out = []
        for row in self.rows:
            inv = [0] * n
            for col, v in enumerate(row):
                inv[v] = col
            out.append(tuple(inv))
        return tuple(out)

    @cached_property
    def _rdiv(self) -> tuple[tuple[int, ...], ...]:
        # _rdiv[b][a] = the row holding a in column b
        n = self.order
        out = [[0] * n for _ in range(n)]
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                out[c][v] = r
        return tuple(tuple(col) for col in out)

    def elements(self) -> range:
        return range(self.order)

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LoopTable{label} order={self.order}>"


def validate_rows(rows) -> None:
    """Check the three table invariants, raising the specific failure."""
    n = len(rows)
    if n == 0:
        raise NotSquareError("empty table")
    if n > MAX_ORDER:
        raise UnsupportedOrderError(f"order {n} exceeds maximum {MAX_ORDER}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise NotSquareError(f"row {i} has {len(row)} entries, expected {n}")
    for i, row in enumerate(rows):
        for v in row:
            if not 0 <= v < n:
                raise OutOfRangeError(f"entry {v} in row {i} not in 0..{n - 1}")
    full = frozenset(range(n))
    for i, row in enumerate(rows):
        if frozenset(row) != full:
            raise NotLatinError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if frozenset(rows[i][j] for i in range(n)) != full:
            raise NotLatinError(f"column {j} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if rows[0][j] != j:
            raise NoIdentityError(f"row 0 must be the identity permutation (column {j})")
        if rows[j][0] != j:
            raise NoIdentityError(f"column 0 must be the identity permutation (row {j})")


def loop_from_rows(rows, name: str | None = None) -> LoopTable:
    """Validate a nested sequence of ints and freeze it into a LoopTable."""
    frozen = tuple(tuple(int(v) for v in row) for row in rows)
    validate_rows(frozen)
    return LoopTable(frozen, name)


def parse_cayley(text: str, name: str | None = None) -> LoopTable:
    """Parse the Cayley text format: n lines of n whitespace-separated ints.

    Lines starting with '#' and blank lines are ignored.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rows.append(tuple(int(tok) for tok in stripped.split()))
        except ValueError:
            raise NotSquareError(f"line {lineno}: non-integer token") from None
    return loop_from_rows(rows, name)


def serialize(loop: LoopTable) -> str:
    """Emit the Cayley text format: single-space separated, newline-terminated."""
    return "".join(" ".join(str(v) for v in row) + "\n" for row in loop.rows)


def product(loop: LoopTable, a: int, b: int) -> int:
    return loop.rows[a][b]


def left_divide(loop: LoopTable, a: int, b: int) -> int:
    """The unique z with a*z = b."""
    return loop.ldiv(a, b)


def right_divide(loop: LoopTable, a: int, b: int) -> int:
    """The unique z with z*b = a."""
    return loop.rdiv(a, b)


def inverse(loop: LoopTable, x: int) -> tuple[int, int]:
    """(left inverse x' with x'x = e, right inverse x'' with xx'' = e)."""
    return loop.rdiv(0, x), loop.ldiv(x, 0)


def power(loop: LoopTable, x: int, n: int) -> int:
    """Left-normed power: x^0 = 0 and x^n = x * x^(n-1).

    Total even on loops that are not power associative; whether powers are
    unambiguous is a separate check (structure.check_assoc_family).
    """
    if n < 0:
        raise ValueError("exponent must be non-negative")
    acc = 0
    row = loop.rows[x]
    for _ in range(n):
        acc = row[acc]
    return acc


def element_order(loop: LoopTable, x: int) -> int:
    """Least n >= 1 with left-normed x^n = 0.

    The caller is responsible for power associativity at x if the value is
    to be read as a group-theoretic order; see element_order_checked.
    """
    row = loop.rows[x]
    acc = row[0]
    n = 1
    while acc != 0:
        acc = row[acc]
        n += 1
    return n


def element_order_checked(loop: LoopTable, x: int) -> int:
    """element_order, raising unless the subloop generated by x is a group."""
    if not _monogenic_associative(loop, x):
        raise NotPowerAssociativeError(f"monogenic subloop of {x} is not associative")
    return element_order(loop, x)


def _monogenic_closure(loop: LoopTable, x: int) -> list[int]:
    members = {0, x}
    frontier = [0, x]
    rows = loop.rows
    while frontier:
        a = frontier.pop()
        for b in tuple(members):
            for c in (rows[a][b], rows[b][a]):
                if c not in members:
                    members.add(c)
                    frontier.append(c)
    return sorted(members)


def _monogenic_associative(loop: LoopTable, x: int) -> bool:
    sub = _monogenic_closure(loop, x)
    rows = loop.rows
    for a in sub:
        for b in sub:
            ab = rows[a][b]
            for c in sub:
                if rows[ab][c] != rows[a][rows[b][c]]:
                    return False
    return True


def exponent(loop: LoopTable) -> int:
    """Least common multiple of all element orders.

    Raises NotPowerAssociativeError when some monogenic subloop is not a
    group, since orders are then ambiguous.
    """
    out = 1
    for x in loop:
        out = math.lcm(out, element_order_checked(loop, x))
    return out


def translation(loop: LoopTable, x: int, side: str = "left") -> tuple[int, ...]:
    """The permutation y -> x*y (left) or y -> y*x (right)."""
    if side == "left":
        return loop.rows[x]
    if side == "right":
        return tuple(loop.rows[y][x] for y in loop)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")

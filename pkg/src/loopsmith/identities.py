"""Term-identity evaluation over a loop table plus the named variety catalog.

An identity is a pair of binary-product term trees over single-letter
variables.  Satisfaction is decided by brute force over all variable
assignments (n^k for k variables), vectorized with numpy; the first
counterexample in lexicographic assignment order is reported, which keeps
all outputs deterministic.

The catalog pins one representative defining identity for each of the 14
Bol-Moufang varieties; coherence of the representatives (the inclusion
lattice among the varieties) is exercised by the test suite rather than
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import LoopTable, translation
from .errors import IdentityParseError, UnknownPropertyError

# A term is either a variable name (str) or a pair (left, right) meaning
# the product left*right.
Term = "str | tuple"


@dataclass(frozen=True)
class Identity:
    lhs: tuple | str
    rhs: tuple | str
    name: str | None = None

    @property
    def variables(self) -> tuple[str, ...]:
        """Variables in order of first occurrence, lhs first."""
        seen: list[str] = []

        def walk(t):
            if isinstance(t, str):
                if t not in seen:
                    seen.append(t)
            else:
                walk(t[0])
                walk(t[1])

        walk(self.lhs)
        walk(self.rhs)
        return tuple(seen)

    def __str__(self) -> str:
        return f"{format_term(self.lhs)} = {format_term(self.rhs)}"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.holds


def format_term(t) -> str:
    """Render with minimal parentheses; '*' left-associates."""
    if isinstance(t, str):
        return t
    left, right = t
    ls = format_term(left)
    rs = format_term(right)
    if not isinstance(right, str):
        rs = f"({rs})"
    return f"{ls}*{rs}"


def parse_identity(src: str, name: str | None = None) -> Identity:
    """Parse 'lhs = rhs' where terms use single-letter variables, '*' and parens."""
    eq = src.find("=")
    if eq < 0:
        raise IdentityParseError("missing '='", len(src))
    if "=" in src[eq + 1 :]:
        raise IdentityParseError("more than one '='", src.index("=", eq + 1))
    lhs = _parse_term(src, 0, eq)
    rhs = _parse_term(src, eq + 1, len(src))
    return Identity(lhs, rhs, name)


def _parse_term(src: str, start: int, end: int):
    pos = start

    def skip_ws():
        nonlocal pos
        while pos < end and src[pos].isspace():
            pos += 1

    def parse_atom():
        nonlocal pos
        skip_ws()
        if pos >= end:
            raise IdentityParseError("unexpected end of term", pos)
        ch = src[pos]
        if ch == "(":
            open_pos = pos
            pos += 1
            inner = parse_expr()
            skip_ws()
            if pos >= end or src[pos] != ")":
                raise IdentityParseError("unbalanced '('", open_pos)
            pos += 1
            return inner
        if ch.isalpha():
            pos += 1
            return ch
        raise IdentityParseError(f"unexpected character {ch!r}", pos)

    def parse_expr():
        nonlocal pos
        term = parse_atom()
        while True:
            skip_ws()
            if pos < end and src[pos] == "*":
                pos += 1
                term = (term, parse_atom())
            else:
                return term

    term = parse_expr()
    skip_ws()
    if pos != end:
        raise IdentityParseError(f"trailing input {src[pos]!r}", pos)
    return term


def _eval_term(t, env, table):
    if isinstance(t, str):
        return env[t]
    return table[_eval_term(t[0], env, table), _eval_term(t[1], env, table)]


def eval_term(loop: LoopTable, t, assignment: dict) -> int:
    """Evaluate a term at a concrete variable assignment."""
    acc = _scalar_eval(loop.rows, t, assignment)
    return acc


def _scalar_eval(rows, t, env):
    if isinstance(t, str):
        return env[t]
    return rows[_scalar_eval(rows, t[0], env)][_scalar_eval(rows, t[1], env)]


def _np_table(loop: LoopTable) -> np.ndarray:
    return np.asarray(loop.rows, dtype=np.int64)


def satisfies(loop: LoopTable, ident: Identity) -> Verdict:
    """Brute-force universal check of `ident` over all assignments.

    The counterexample, when present, is the lexicographically first
    assignment (in variable order of first occurrence) where the two sides
    differ.
    """
    n = loop.order
    variables = ident.variables
    k = len(variables)
    if k == 0:
        return Verdict(True)
    table = _np_table(loop)
    total = n**k
    if total <= 4_000_000:
        idx = np.arange(total)
        env = {}
        for i, v in enumerate(variables):
            env[v] = (idx // n ** (k - 1 - i)) % n
        diff = _eval_term(ident.lhs, env, table) != _eval_term(ident.rhs, env, table)
        if not diff.any():
            return Verdict(True)
        first = int(np.argmax(diff))
        ce = {v: int((first // n ** (k - 1 - i)) % n) for i, v in enumerate(variables)}
        return Verdict(False, ce)
    # rare: many variables on a large table; chunk over the leading variable
    rows = loop.rows
    from itertools import product as iproduct

    for combo in iproduct(range(n), repeat=k):
        env = dict(zip(variables, combo))
        if _scalar_eval(rows, ident.lhs, env) != _scalar_eval(rows, ident.rhs, env):
            return Verdict(False, env)
    return Verdict(True)


# The 14 varieties of loops defined by a single identity in three variables
# with one variable repeated and the same variable order on both sides.
_CATALOG_SOURCES = (
    ("group", "x*(y*z) = (x*y)*z"),
    ("extra", "x*(y*(z*x)) = ((x*y)*z)*x"),
    ("moufang", "(x*y)*(z*x) = (x*(y*z))*x"),
    ("left-bol", "x*(y*(x*z)) = (x*(y*x))*z"),
    ("right-bol", "((z*x)*y)*x = z*((x*y)*x)"),
    ("C", "x*(y*(y*z)) = ((x*y)*y)*z"),
    ("LC", "x*(x*(y*z)) = ((x*x)*y)*z"),
    ("RC", "((z*y)*x)*x = z*(y*(x*x))"),
    ("flexible", "x*(y*x) = (x*y)*x"),
    ("left-alternative", "x*(x*y) = (x*x)*y"),
    ("right-alternative", "(y*x)*x = y*(x*x)"),
    ("left-nuclear-square", "(x*x)*(y*z) = ((x*x)*y)*z"),
    ("middle-nuclear-square", "y*((x*x)*z) = (y*(x*x))*z"),
    ("right-nuclear-square", "y*(z*(x*x)) = (y*z)*(x*x)"),
)

CATALOG: dict[str, Identity] = {
    name: parse_identity(src, name) for name, src in _CATALOG_SOURCES
}

C_IDENTITY = CATALOG["C"]
ASSOCIATIVITY = CATALOG["group"]

# Inclusions among the catalog varieties (variety -> varieties it implies),
# used by tests and by the search module's sanity checks.
CATALOG_IMPLICATIONS = {
    "group": tuple(n for n in CATALOG if n != "group"),
    "extra": ("moufang", "C"),
    "moufang": ("left-bol", "right-bol", "flexible"),
    "C": ("LC", "RC"),
    "LC": ("left-alternative", "left-nuclear-square", "middle-nuclear-square"),
    "RC": ("right-alternative", "right-nuclear-square", "middle-nuclear-square"),
    "left-bol": ("left-alternative",),
    "right-bol": ("right-alternative",),
}


def classify_bol_moufang(loop: LoopTable) -> dict[str, bool]:
    """Evaluate the 14 catalog identities; returns {variety: holds}."""
    return {name: satisfies(loop, ident).holds for name, ident in CATALOG.items()}


def _canon_property(name: str) -> str:
    return name.strip().lower().replace("_", "-")


PROPERTY_NAMES = (
    "commutative",
    "lip",
    "rip",
    "inverse-property",
    "aaip",
    "steiner",
    "totally-symmetric",
    "conjugacy-closed",
    "arif",
    "flexible",
)


def check_property(loop: LoopTable, prop: str) -> Verdict:
    """Evaluate a named (non-catalog) property, with counterexample on failure."""
    key = _canon_property(prop)
    if key in ("lip", "left-inverse-property"):
        return _check_lip(loop)
    if key in ("rip", "right-inverse-property"):
        return _check_rip(loop)
    if key in ("inverse-property", "ip"):
        v = _check_lip(loop)
        return v if not v.holds else _check_rip(loop)
    if key == "aaip":
        return _check_aaip(loop)
    if key == "steiner":
        return _check_steiner(loop)
    if key == "totally-symmetric":
        return _check_totally_symmetric(loop)
    if key == "commutative":
        return satisfies(loop, parse_identity("x*y = y*x", "commutative"))
    if key == "conjugacy-closed":
        return _check_conjugacy_closed(loop)
    if key == "arif":
        return _check_arif(loop)
    if key in CATALOG:  # convenience: catalog names work here too
        return satisfies(loop, CATALOG[key])
    raise UnknownPropertyError(f"unknown property {prop!r}")


def _check_lip(loop: LoopTable) -> Verdict:
    # x'(xy) = y where x' is the left inverse of x
    rows = loop.rows
    for x in loop:
        xl = loop.rdiv(0, x)
        row_xl = rows[xl]
        row_x = rows[x]
        for y in loop:
            if row_xl[row_x[y]] != y:
                return Verdict(False, {"x": x, "y": y})
    return Verdict(True)


def _check_rip(loop: LoopTable) -> Verdict:
    # (yx)x'' = y where x'' is the right inverse of x
    rows = loop.rows
    for x in loop:
        xr = loop.ldiv(x, 0)
        for y in loop:
            if rows[rows[y][x]][xr] != y:
                return Verdict(False, {"x": x, "y": y})
    return Verdict(True)


def _check_aaip(loop: LoopTable) -> Verdict:
    # (xy)^-1 = y^-1 x^-1, requiring two-sided inverses throughout
    rows = loop.rows
    inv = []
    for x in loop:
        left, right = loop.rdiv(0, x), loop.ldiv(x, 0)
        if left != right:
            return Verdict(False, {"x": x})
        inv.append(left)
    for x in loop:
        for y in loop:
            if inv[rows[x][y]] != rows[inv[y]][inv[x]]:
                return Verdict(False, {"x": x, "y": y})
    return Verdict(True)


def _check_steiner(loop: LoopTable) -> Verdict:
    # xx = e, (yx)x = y, xy = yx
    rows = loop.rows
    for x in loop:
        if rows[x][x] != 0:
            return Verdict(False, {"x": x})
    return _check_totally_symmetric(loop)


def _check_totally_symmetric(loop: LoopTable) -> Verdict:
    # (yx)x = y and xy = yx
    rows = loop.rows
    for x in loop:
        for y in loop:
            if rows[rows[y][x]][x] != y or rows[x][y] != rows[y][x]:
                return Verdict(False, {"x": x, "y": y})
    return Verdict(True)


def _check_conjugacy_closed(loop: LoopTable) -> Verdict:
    """Each conjugate Lx^-1 Ly Lx must be a left translation; dually for right."""
    n = loop.order
    rows = loop.rows
    left = [translation(loop, x, "left") for x in range(n)]
    right = [translation(loop, x, "right") for x in range(n)]
    left_inv = []
    right_inv = []
    for x in range(n):
        li = [0] * n
        ri = [0] * n
        for y in range(n):
            li[left[x][y]] = y
            ri[right[x][y]] = y
        left_inv.append(li)
        right_inv.append(ri)
    for x in range(n):
        for y in range(n):
            conj = tuple(left_inv[x][left[y][left[x][z]]] for z in range(n))
            if conj != left[conj[0]]:
                return Verdict(False, {"x": x, "y": y, "side": "left"})
            conj = tuple(right_inv[x][right[y][right[x][z]]] for z in range(n))
            if conj != right[conj[0]]:
                return Verdict(False, {"x": x, "y": y, "side": "right"})
    return Verdict(True)


_ARIF_IDENTITY = parse_identity("(z*x)*((y*x)*y) = (z*((x*y)*x))*y", "arif")


def _check_arif(loop: LoopTable) -> Verdict:
    flex = satisfies(loop, CATALOG["flexible"])
    if not flex.holds:
        return flex
    return satisfies(loop, _ARIF_IDENTITY)


@lru_cache(maxsize=None)
def property_identity(src: str) -> Identity:
    """Parse-and-cache helper for ad hoc identity strings."""
    return parse_identity(src)

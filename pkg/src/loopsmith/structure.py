"""Structural analysis: nuclei, subloops, quotients, associators, isomorphism,
associativity-family checks, Lagrange/Cauchy reports, and torsion decomposition.

Element sets are plain frozensets of ints tied to a table by context.  All
functions are pure; expensive set closures use bitmask-free worklists since
orders stay small (<= 255, typically <= 48).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import LoopTable, element_order, loop_from_rows
from .errors import (
    DecompositionFailsError,
    IllDefinedQuotientError,
    NotASubloopError,
    NotNormalError,
    NotPowerAssociativeError,
)
from .identities import Verdict


def nucleus(loop: LoopTable, kind: str = "full") -> frozenset[int]:
    """Elements associating in the given position with all pairs.

    kind: 'left'  -> x with x(yz) = (xy)z for all y, z
          'middle'-> x with y(xz) = (yx)z for all y, z
          'right' -> x with y(zx) = (yz)x for all y, z
          'full'  -> intersection of the three
    """
    if kind == "full":
        return nucleus(loop, "left") & nucleus(loop, "middle") & nucleus(loop, "right")
    rows = loop.rows
    n = loop.order
    members = []
    if kind == "left":
        for x in range(n):
            row_x = rows[x]
            if all(
                row_x[rows[y][z]] == rows[row_x[y]][z] for y in range(n) for z in range(n)
            ):
                members.append(x)
    elif kind == "middle":
        for x in range(n):
            row_x = rows[x]
            if all(
                rows[y][row_x[z]] == rows[rows[y][x]][z] for y in range(n) for z in range(n)
            ):
                members.append(x)
    elif kind == "right":
        for x in range(n):
            if all(
                rows[y][rows[z][x]] == rows[rows[y][z]][x] for y in range(n) for z in range(n)
            ):
                members.append(x)
    else:
        raise ValueError(f"kind must be left|middle|right|full, got {kind!r}")
    return frozenset(members)


def center(loop: LoopTable) -> frozenset[int]:
    """Nucleus members commuting with every element."""
    rows = loop.rows
    return frozenset(
        x for x in nucleus(loop) if all(rows[x][y] == rows[y][x] for y in loop)
    )


def generate_subloop(loop: LoopTable, seed) -> frozenset[int]:
    """Least superset of seed and {0} closed under product and both divisions."""
    members = set(seed)
    members.add(0)
    rows = loop.rows
    frontier = list(members)
    while frontier:
        a = frontier.pop()
        for b in tuple(members):
            for c in (
                rows[a][b],
                rows[b][a],
                loop.ldiv(a, b),
                loop.ldiv(b, a),
                loop.rdiv(a, b),
                loop.rdiv(b, a),
            ):
                if c not in members:
                    members.add(c)
                    frontier.append(c)
    return frozenset(members)


def is_subloop(loop: LoopTable, members) -> bool:
    """True when members contains 0 and is closed under product and divisions."""
    s = frozenset(members)
    if 0 not in s:
        return False
    rows = loop.rows
    return all(
        rows[a][b] in s and loop.ldiv(a, b) in s and loop.rdiv(a, b) in s
        for a in s
        for b in s
    )


def _require_subloop(loop: LoopTable, members) -> frozenset[int]:
    s = frozenset(members)
    if not is_subloop(loop, s):
        raise NotASubloopError(f"{sorted(s)} is not a subloop")
    return s


def is_normal(loop: LoopTable, sub) -> Verdict:
    """Setwise normality: xK = Kx, x(yK) = (xy)K, x(Ky) = (xK)y for all x, y."""
    k = _require_subloop(loop, sub)
    rows = loop.rows
    kt = tuple(k)
    for x in loop:
        row_x = rows[x]
        if {row_x[a] for a in kt} != {rows[a][x] for a in kt}:
            return Verdict(False, {"x": x})
    for x in loop:
        row_x = rows[x]
        for y in loop:
            y_k = [rows[y][a] for a in kt]
            xy = row_x[y]
            if {row_x[v] for v in y_k} != {rows[xy][a] for a in kt}:
                return Verdict(False, {"x": x, "y": y, "condition": "x(yK)=(xy)K"})
            k_y = [rows[a][y] for a in kt]
            x_k = [row_x[a] for a in kt]
            if {row_x[v] for v in k_y} != {rows[v][y] for v in x_k}:
                return Verdict(False, {"x": x, "y": y, "condition": "x(Ky)=(xK)y"})
    return Verdict(True)


def cosets(loop: LoopTable, sub) -> list[frozenset[int]]:
    """Left cosets xK ordered by least member; block 0 is the subloop."""
    k = _require_subloop(loop, sub)
    rows = loop.rows
    seen: set[int] = set()
    blocks = []
    for x in loop:
        if x in seen:
            continue
        block = frozenset(rows[x][a] for a in k)
        if x == 0:
            block = k
        blocks.append(block)
        seen |= block
    blocks.sort(key=min)
    return blocks


def quotient(loop: LoopTable, sub, name: str | None = None) -> LoopTable:
    """Factor loop L/K with cosets labeled 0.. by least member.

    Normality is required; well-definedness of coset products is re-verified
    from scratch rather than trusted.
    """
    k = _require_subloop(loop, sub)
    if not is_normal(loop, k).holds:
        raise NotNormalError(f"{sorted(k)} is not normal")
    blocks = cosets(loop, k)
    label = {}
    for i, block in enumerate(blocks):
        for v in block:
            label[v] = i
    m = len(blocks)
    rows = loop.rows
    table = [[0] * m for _ in range(m)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            products = {label[rows[a][b]] for a in bi for b in bj}
            if len(products) != 1:
                raise IllDefinedQuotientError(
                    f"cosets {i} and {j} multiply into {sorted(products)}"
                )
            table[i][j] = products.pop()
    return loop_from_rows(table, name)


def associator(loop: LoopTable, x: int, y: int, z: int) -> int:
    """[x,y,z] = (x(yz)) \\ ((xy)z): the unique a with (x(yz))*a = (xy)z."""
    rows = loop.rows
    return loop.ldiv(rows[x][rows[y][z]], rows[rows[x][y]][z])


def associator_values(loop: LoopTable) -> frozenset[int]:
    rows = loop.rows
    vals = set()
    for x in loop:
        row_x = rows[x]
        for y in loop:
            xy = row_x[y]
            row_y = rows[y]
            for z in loop:
                vals.add(loop.ldiv(row_x[row_y[z]], rows[xy][z]))
    return frozenset(vals)


def associator_subloop(loop: LoopTable) -> frozenset[int]:
    """Subloop generated by all associator values."""
    return generate_subloop(loop, associator_values(loop))


def squaring_kernel(loop: LoopTable) -> frozenset[int]:
    """Raw square-root-of-identity set {x : x*x = 0}; not always a subloop."""
    return frozenset(x for x in loop if loop.rows[x][x] == 0)


def _associative_on(loop: LoopTable, members) -> tuple[int, int, int] | None:
    """First associativity violation among triples of members, or None."""
    rows = loop.rows
    sub = sorted(members)
    for a in sub:
        row_a = rows[a]
        for b in sub:
            ab = row_a[b]
            row_b = rows[b]
            for c in sub:
                if rows[ab][c] != row_a[row_b[c]]:
                    return (a, b, c)
    return None


def check_assoc_family(loop: LoopTable, which: str) -> Verdict:
    """Power-associativity family checks.

    which: 'power-associative'  -> every 1-generated subloop is a group
           'diassociative'      -> every 2-generated subloop is a group
           'left-power-alt'     -> L_{x^n} = L_x^n for 1 <= n <= |x|
           'right-power-alt'    -> R_{x^n} = R_x^n for 1 <= n <= |x|
    """
    key = which.strip().lower().replace("_", "-")
    rows = loop.rows
    n = loop.order
    if key == "power-associative":
        for x in loop:
            if _associative_on(loop, generate_subloop(loop, (x,))) is not None:
                return Verdict(False, {"x": x})
        return Verdict(True)
    if key == "diassociative":
        for x in loop:
            for y in range(x, n):
                if _associative_on(loop, generate_subloop(loop, (x, y))) is not None:
                    return Verdict(False, {"x": x, "y": y})
        return Verdict(True)
    if key in ("left-power-alt", "right-power-alt"):
        left = key == "left-power-alt"
        for x in loop:
            order = element_order(loop, x)
            power = 0  # x^k, left-normed
            perm = tuple(range(n))  # L_x^k (or R_x^k) applied pointwise
            for _ in range(1, order + 1):
                power = rows[x][power]
                if left:
                    perm = tuple(rows[x][p] for p in perm)
                    target = rows[power]
                    if perm != target:
                        return Verdict(False, {"x": x})
                else:
                    perm = tuple(rows[p][x] for p in perm)
                    if any(perm[y] != rows[y][power] for y in range(n)):
                        return Verdict(False, {"x": x})
        return Verdict(True)
    raise ValueError(f"unknown family {which!r}")


def all_subloops(loop: LoopTable) -> list[frozenset[int]]:
    """Every subloop, found by closing all seeds of size <= 2 and then
    saturating each found subloop with one outside element until no new
    subloop appears.  Complete: a subloop is generated by adding its
    elements one at a time."""
    n = loop.order
    found: set[frozenset[int]] = {generate_subloop(loop, ())}
    for x in range(1, n):
        found.add(generate_subloop(loop, (x,)))
        for y in range(x + 1, n):
            found.add(generate_subloop(loop, (x, y)))
    while True:
        new = set()
        for sub in found:
            if len(sub) == n:
                continue
            for g in range(1, n):
                if g not in sub:
                    grown = generate_subloop(loop, tuple(sub) + (g,))
                    if grown not in found:
                        new.add(grown)
        if not new:
            break
        found |= new
    return sorted(found, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class LagrangeReport:
    weak_lagrange: bool
    weak_violations: tuple[tuple[int, ...], ...]
    monogenic_lagrange: bool
    monogenic_violations: tuple[int, ...]
    cauchy: bool
    cauchy_violations: tuple[int, ...]
    subloop_orders: tuple[int, ...]
    element_orders: tuple[int, ...] = field(default=())


def _primes(n: int):
    p, out = 2, []
    m = n
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def lagrange_report(loop: LoopTable, enumerate_subloops: bool = True) -> LagrangeReport:
    """Weak Lagrange, monogenic Lagrange, and weak Cauchy diagnostics.

    Requires power associativity (element orders must be unambiguous).
    Full subloop enumeration can be disabled for large orders; the weak
    Lagrange verdict is then based on monogenic subloops only.
    """
    if not check_assoc_family(loop, "power-associative").holds:
        raise NotPowerAssociativeError("loop is not power associative")
    n = loop.order
    orders = tuple(element_order(loop, x) for x in loop)
    monogenic_bad = tuple(
        x for x in loop if n % len(generate_subloop(loop, (x,))) != 0
    )
    if enumerate_subloops:
        subs = all_subloops(loop)
    else:
        subs = sorted(
            {generate_subloop(loop, (x,)) for x in loop}, key=lambda s: (len(s), sorted(s))
        )
    weak_bad = tuple(tuple(sorted(s)) for s in subs if n % len(s) != 0)
    cauchy_bad = tuple(p for p in _primes(n) if p not in orders)
    return LagrangeReport(
        weak_lagrange=not weak_bad,
        weak_violations=weak_bad,
        monogenic_lagrange=not monogenic_bad,
        monogenic_violations=monogenic_bad,
        cauchy=not cauchy_bad,
        cauchy_violations=cauchy_bad,
        subloop_orders=tuple(sorted({len(s) for s in subs})),
        element_orders=orders,
    )


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    mapping: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def _invariant_vector(loop: LoopTable) -> list[tuple[int, int, int]]:
    """(element order, #square roots, commutant size) per element."""
    n = loop.order
    rows = loop.rows
    sq_roots = [0] * n
    for y in range(n):
        sq_roots[rows[y][y]] += 1
    out = []
    for x in range(n):
        row_x = rows[x]
        comm = sum(1 for y in range(n) if row_x[y] == rows[y][x])
        out.append((element_order(loop, x), sq_roots[x], comm))
    return out


def isomorphic(l1: LoopTable, l2: LoopTable) -> IsoResult:
    """Backtracking search for a product-preserving bijection fixing 0.

    Pruned by per-element invariant vectors and by forced images of known
    products; branch order is deterministic (ascending indices).  The found
    mapping is re-verified element by element before being returned.
    """
    n = l1.order
    if n != l2.order:
        return IsoResult(False)
    inv1 = _invariant_vector(l1)
    inv2 = _invariant_vector(l2)
    if sorted(inv1) != sorted(inv2):
        return IsoResult(False)
    candidates = [
        [y for y in range(n) if inv2[y] == inv1[x]] for x in range(n)
    ]
    r1, r2 = l1.rows, l2.rows
    mapping = [-1] * n
    used = [False] * n
    mapping[0] = 0
    used[0] = True

    def extend(assignments):
        """Close known products; returns trail of set indices or None on clash."""
        trail = []
        queue = list(assignments)
        while queue:
            a = queue.pop()
            fa = mapping[a]
            for b in range(n):
                fb = mapping[b]
                if fb < 0:
                    continue
                for x, fx in ((r1[a][b], r2[fa][fb]), (r1[b][a], r2[fb][fa])):
                    cur = mapping[x]
                    if cur == fx:
                        continue
                    if cur >= 0 or used[fx]:
                        for t in trail:
                            used[mapping[t]] = False
                            mapping[t] = -1
                        return None
                    mapping[x] = fx
                    used[fx] = True
                    trail.append(x)
                    queue.append(x)
        return trail

    def undo(trail):
        for t in trail:
            used[mapping[t]] = False
            mapping[t] = -1

    def search() -> bool:
        x = next((i for i in range(n) if mapping[i] < 0), -1)
        if x < 0:
            return True
        for y in candidates[x]:
            if used[y]:
                continue
            mapping[x] = y
            used[y] = True
            trail = extend([x])
            if trail is not None:
                if search():
                    return True
                undo(trail)
            mapping[x] = -1
            used[y] = False
        return False

    if not search():
        return IsoResult(False)
    found = tuple(mapping)
    for a in range(n):
        for b in range(n):
            if found[r1[a][b]] != r2[found[a]][found[b]]:
                raise AssertionError("isomorphism verification failed")
    return IsoResult(True, found)


def relabel(loop: LoopTable, perm, name: str | None = None) -> LoopTable:
    """Apply a bijection fixing 0 to rows, columns, and values."""
    n = loop.order
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    rows = loop.rows
    return loop_from_rows(
        [[perm[rows[inv[a]][inv[b]]] for b in range(n)] for a in range(n)], name
    )


def subloop_table(loop: LoopTable, members, name: str | None = None) -> LoopTable:
    """Restriction of the table to a subloop, relabeled by ascending member."""
    sub = _require_subloop(loop, members)
    order = sorted(sub)
    index = {v: i for i, v in enumerate(order)}
    rows = loop.rows
    return loop_from_rows(
        [[index[rows[a][b]] for b in order] for a in order], name
    )


@dataclass(frozen=True)
class DirectProductResult:
    holds: bool
    reason: str | None = None
    left_factor: LoopTable | None = None
    right_factor: LoopTable | None = None
    mapping: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def internal_direct_product(loop: LoopTable, k, h) -> DirectProductResult:
    """Check L = K x H internally: K, H normal, K .. H = {0}, KH = L.

    On success returns the factor tables and the explicit isomorphism from
    the componentwise product (pair (i,j) -> i*|H|+j) onto L.
    """
    ks = _require_subloop(loop, k)
    hs = _require_subloop(loop, h)
    if ks & hs != {0}:
        return DirectProductResult(False, "intersection is not trivial")
    if len(ks) * len(hs) != loop.order:
        return DirectProductResult(False, "orders do not multiply to |L|")
    rows = loop.rows
    products = {rows[a][b] for a in ks for b in hs}
    if len(products) != loop.order:
        return DirectProductResult(False, "KH is not all of L")
    if not is_normal(loop, ks).holds:
        return DirectProductResult(False, "left factor is not normal")
    if not is_normal(loop, hs).holds:
        return DirectProductResult(False, "right factor is not normal")
    k_sorted = sorted(ks)
    h_sorted = sorted(hs)
    kt = subloop_table(loop, ks)
    ht = subloop_table(loop, hs)
    mapping = tuple(
        rows[a][b] for a in k_sorted for b in h_sorted
    )
    # verify the map (i,j) -> k_i * h_j is an isomorphism from K x H onto L
    nh = len(h_sorted)
    for i, a in enumerate(k_sorted):
        for j, b in enumerate(h_sorted):
            for i2, a2 in enumerate(k_sorted):
                for j2, b2 in enumerate(h_sorted):
                    lhs = rows[mapping[i * nh + j]][mapping[i2 * nh + j2]]
                    rhs = mapping[kt.rows[i][i2] * nh + ht.rows[j][j2]]
                    if lhs != rhs:
                        return DirectProductResult(False, "pair map is not a homomorphism")
    return DirectProductResult(True, None, kt, ht, mapping)


def decompose_torsion(loop: LoopTable, p: int = 2) -> tuple[frozenset[int], frozenset[int]]:
    """Split into U = {x : |x| is a power of p} and V = {x : gcd(|x|, p) = 1}.

    The internal-direct-product conditions are re-verified and
    DecompositionFailsError is raised when they do not hold (expected for
    loops outside the commutative C-loop hypotheses at p = 2).
    """
    if not check_assoc_family(loop, "power-associative").holds:
        raise NotPowerAssociativeError("torsion decomposition needs power associativity")
    u = []
    v = []
    for x in loop:
        o = element_order(loop, x)
        while o % p == 0:
            o //= p
        if o == 1:
            u.append(x)
        if math.gcd(element_order(loop, x), p) == 1:
            v.append(x)
    us, vs = frozenset(u), frozenset(v)
    if not is_subloop(loop, us):
        raise DecompositionFailsError("p-torsion part is not a subloop")
    if not is_subloop(loop, vs):
        raise DecompositionFailsError("coprime-torsion part is not a subloop")
    result = internal_direct_product(loop, us, vs)
    if not result.holds:
        raise DecompositionFailsError(f"direct product check failed: {result.reason}")
    return us, vs

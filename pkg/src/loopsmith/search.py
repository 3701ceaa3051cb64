"""Exhaustive enumeration of loops of a given order under identity constraints.

The engine completes a partial Cayley table cell by cell in row-major order
with row 0 and column 0 pinned to the identity.  Propagation maintains
per-row and per-column candidate bitsets, assigns naked singles, and runs
incremental checks of every required identity on instances that become
determined; when one side of an instance is determined and the other is a
single empty cell, that cell is forced.  Completed tables are re-verified
by the independent brute-force evaluator before they are counted, so the
propagation layer can never manufacture a false model.

Isomorphism handling: every loop can be relabeled (fixing 0) so that its
first row, viewed as a permutation, is the lexicographically least row in
the isomorphism orbit; that least row is determined by a cycle-type normal
form (cycle through 0 first, remaining cycles by ascending length, labels
consecutive).  With up_to_isomorphism set, the search branches only over
these normal-form first rows, prunes any branch in which some completed row
has a strictly smaller normal form than row 1, and removes the remaining
per-class duplicates with the full isomorphism test afterwards.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from ._propagation import CompiledIdentity
from .core import LoopTable, loop_from_rows, serialize
from .errors import InadmissibleOrderError
from .identities import (
    ASSOCIATIVITY,
    CATALOG,
    Identity,
    check_property,
    parse_identity,
    satisfies,
)
from .structure import _invariant_vector, isomorphic

DEFAULT_NODE_BUDGET = 10**9


@dataclass(frozen=True)
class SearchSpec:
    order: int
    required_identities: tuple[Identity, ...] = ()
    required_properties: tuple[str, ...] = ()
    forbid_associative: bool = False
    up_to_isomorphism: bool = False
    node_budget: int | None = None
    table_limit: int | None = None


@dataclass
class SearchOutcome:
    count: int
    tables: list[LoopTable]
    exhausted: bool
    nodes: int = 0

    @property
    def budget_hit(self) -> bool:
        return not self.exhausted


class _Engine:
    """One depth-first completion run over a fixed order and constraint set."""

    def __init__(self, spec: SearchSpec, value_order: str = "ascending"):
        n = spec.order
        self.spec = spec
        self.n = n
        self.value_order = value_order
        idents = list(spec.required_identities)
        self.symmetric = False
        self.zero_diagonal = False
        for prop in spec.required_properties:
            key = prop.strip().lower().replace("_", "-")
            if key == "commutative":
                self.symmetric = True
            elif key in ("steiner", "totally-symmetric"):
                self.symmetric = True
                self.zero_diagonal = key == "steiner"
                idents.append(parse_identity("(y*x)*x = y"))
        self.identities = tuple(idents)
        self.checkers = [CompiledIdentity(i).checker for i in self.identities]
        self.table = [[-1] * n for _ in range(n)]
        full = (1 << n) - 1
        self.row_mask = [full] * n
        self.col_mask = [full] * n
        self.pos_row = [[-1] * n for _ in range(n)]  # column of value v in row r
        self.pos_col = [[-1] * n for _ in range(n)]  # row holding value v in column c
        self.row_fill = [0] * n
        self.trail: list[tuple[int, int, int]] = []
        self.nodes = 0
        self.budget = spec.node_budget or DEFAULT_NODE_BUDGET
        self.budget_hit = False
        self.solutions: list[tuple[tuple[int, ...], ...]] = []
        self.canon_key: tuple | None = None
        self.sym_perms: list[tuple[list[int], list[int]]] = []
        self.sym_check_limit = min(n - 1, 6)
        self._queue: list[tuple[int, int]] = []
        for j in range(n):
            self._raw_assign(0, j, j)
            if j:
                self._raw_assign(j, 0, j)

    # -- low-level state updates

    def _raw_assign(self, r, c, v):
        self.table[r][c] = v
        bit = 1 << v
        self.row_mask[r] &= ~bit
        self.col_mask[c] &= ~bit
        self.pos_row[r][v] = c
        self.pos_col[c][v] = r
        self.row_fill[r] += 1
        self.trail.append((r, c, v))

    def _undo_to(self, mark):
        while len(self.trail) > mark:
            r, c, v = self.trail.pop()
            self.table[r][c] = -1
            bit = 1 << v
            self.row_mask[r] |= bit
            self.col_mask[c] |= bit
            self.pos_row[r][v] = -1
            self.pos_col[c][v] = -1
            self.row_fill[r] -= 1

    # -- propagation

    def _assign(self, r, c, v, queue=None) -> bool:
        """Assign with conflict checks; returns False on contradiction."""
        cur = self.table[r][c]
        if cur >= 0:
            return cur == v
        bit = 1 << v
        if not (self.row_mask[r] & self.col_mask[c] & bit):
            return False
        self.nodes += 1
        if self.nodes > self.budget:
            self.budget_hit = True
            return False
        self._raw_assign(r, c, v)
        (queue if queue is not None else self._queue).append((r, c))
        return True

    def _force(self, r, c, v) -> bool:
        return self._assign(r, c, v, self._queue)

    def _scan_row(self, r, queue) -> bool:
        """Naked and hidden singles along row r; fails on a dead cell."""
        table = self.table
        row = table[r]
        col_mask = self.col_mask
        line_mask = self.row_mask[r]
        once = twice = 0
        empties = []
        dirty = False
        for c in range(1, self.n):
            if row[c] < 0:
                cand = line_mask & col_mask[c]
                if not cand:
                    return False
                if not (cand & (cand - 1)):
                    if not self._assign(r, c, cand.bit_length() - 1, queue):
                        return False
                    line_mask = self.row_mask[r]
                    dirty = True
                    continue
                empties.append((c, cand))
                twice |= once & cand
                once |= cand
        if dirty:
            return True  # re-queued assignments will rescan this line
        if self.row_mask[r] & ~once:
            return False  # some missing value has no cell left in this row
        unique = once & ~twice
        if unique:
            for c, cand in empties:
                hit = cand & unique
                if hit:
                    if hit & (hit - 1):
                        return False
                    if not self._assign(r, c, hit.bit_length() - 1, queue):
                        return False
        return True

    def _scan_col(self, c, queue) -> bool:
        table = self.table
        row_mask = self.row_mask
        line_mask = self.col_mask[c]
        once = twice = 0
        empties = []
        dirty = False
        for r in range(1, self.n):
            if table[r][c] < 0:
                cand = line_mask & row_mask[r]
                if not cand:
                    return False
                if not (cand & (cand - 1)):
                    if not self._assign(r, c, cand.bit_length() - 1, queue):
                        return False
                    line_mask = self.col_mask[c]
                    dirty = True
                    continue
                empties.append((r, cand))
                twice |= once & cand
                once |= cand
        if dirty:
            return True
        if self.col_mask[c] & ~once:
            return False
        unique = once & ~twice
        if unique:
            for r, cand in empties:
                hit = cand & unique
                if hit:
                    if hit & (hit - 1):
                        return False
                    if not self._assign(r, c, hit.bit_length() - 1, queue):
                        return False
        return True

    def _propagate(self, queue) -> bool:
        table = self.table
        pos_row = self.pos_row
        pos_col = self.pos_col
        n = self.n
        force = self._force
        self._queue = queue
        head = 0
        while head < len(queue):
            if self.budget_hit:
                return False
            r, c = queue[head]
            head += 1
            if self.symmetric and r != c:
                if not self._assign(c, r, table[r][c], queue):
                    return False
            if not self._scan_row(r, queue):
                return False
            if not self._scan_col(c, queue):
                return False
            for checker in self.checkers:
                if not checker(table, pos_row, pos_col, n, force, r, c):
                    return False
            if self.canon_key is not None and r != 1 and self.row_fill[r] == n:
                if _cycle_key(table[r]) < self.canon_key:
                    return False
                if r <= self.sym_check_limit and not self._sym_minimal(r):
                    return False
        return True

    def _sym_minimal(self, upto_row) -> bool:
        """Lex-minimality of the partial table under sampled relabelings that
        stabilize the branch's first row.

        A relabeling phi maps the table T to phi(T[phi^-1(i)][phi^-1(j)]); if
        some phi-image is row-major-lexicographically smaller on cells whose
        comparison is already decided, no completion of this table can be the
        orbit minimum, so the branch is pruned.  Using only a subset of the
        stabilizer is sound: orbit-minimal tables are never pruned.
        """
        table = self.table
        n = self.n
        for phi, phi_inv in self.sym_perms:
            for i in range(2, upto_row + 1):
                src_row = table[phi_inv[i]]
                row_i = table[i]
                verdict = 0
                for j in range(1, n):
                    a = row_i[j]
                    if a < 0:
                        verdict = 1
                        break
                    s = src_row[phi_inv[j]]
                    if s < 0:
                        verdict = 1
                        break
                    b = phi[s]
                    if b != a:
                        verdict = -1 if b < a else 1
                        break
                if verdict:
                    if verdict < 0:
                        return False
                    break
        return True

    # -- search proper

    def run(self, prefix=None) -> None:
        """Fill the table depth-first; prefix is a list of (r, c, v) seeds."""
        queue: list[tuple[int, int]] = []
        ok = True
        for r, c, v in prefix or ():
            if not self._assign(r, c, v, queue):
                ok = False
                break
        if ok and self.zero_diagonal:
            for d in range(1, self.n):
                if not self._assign(d, d, 0, queue):
                    ok = False
                    break
        if ok and self._propagate(queue):
            self._dfs(self.n + 1)

    def _dfs(self, start: int) -> None:
        """Branch on the first empty cell at or after flat index `start`."""
        if self.budget_hit:
            return
        n = self.n
        table = self.table
        idx = start
        end = n * n
        while idx < end:
            r, c = divmod(idx, n)
            if c != 0 and table[r][c] < 0:
                break
            idx += 1
        else:
            self._record()
            return
        cand = self.row_mask[r] & self.col_mask[c]
        values = []
        while cand:
            bit = cand & -cand
            values.append(bit.bit_length() - 1)
            cand ^= bit
        if self.value_order == "descending":
            values.reverse()
        for v in values:
            mark = len(self.trail)
            queue: list[tuple[int, int]] = []
            if self._assign(r, c, v, queue) and self._propagate(queue):
                self._dfs(idx + 1)
            self._undo_to(mark)
            if self.budget_hit:
                return

    def _record(self) -> None:
        self.solutions.append(tuple(tuple(row) for row in self.table))


# --- canonical first rows ---------------------------------------------------


def _partitions_min2(total: int, min_part: int = 2):
    if total == 0:
        yield ()
        return
    for part in range(min_part, total + 1):
        rest = total - part
        if rest == 1:
            continue
        for tail in _partitions_min2(rest, part):
            yield (part,) + tail


def canonical_first_rows(n: int) -> list[tuple[int, ...]]:
    """Cycle-type normal forms a first row can take, sorted lexicographically."""
    rows = []
    for head in range(2, n + 1):
        for parts in _partitions_min2(n - head):
            sigma = [0] * n
            for j in range(head - 1):
                sigma[j] = j + 1
            sigma[head - 1] = 0
            base = head
            for m in parts:
                for j in range(m - 1):
                    sigma[base + j] = base + j + 1
                sigma[base + m - 1] = base
                base += m
            rows.append(tuple(sigma))
    rows.sort()
    return rows


def _stabilizer_sample(sigma, cap: int = 64):
    """Deterministic sample of permutations commuting with sigma, fixing the
    cycle through 0 pointwise: within-cycle rotations, swaps of equal-length
    cycles, and products of those generators."""
    import random as _random

    n = len(sigma)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = sigma[j]
        cycles.append(cyc)
    others = [c for c in cycles if 0 not in c]
    gens: list[tuple[int, ...]] = []
    for cyc in others:
        m = len(cyc)
        for k in range(1, m):
            phi = list(range(n))
            for i in range(m):
                phi[cyc[i]] = cyc[(i + k) % m]
            gens.append(tuple(phi))
    by_len: dict[int, list] = {}
    for cyc in others:
        by_len.setdefault(len(cyc), []).append(cyc)
    for group in by_len.values():
        for ai in range(len(group)):
            for bi in range(ai + 1, len(group)):
                a, b = group[ai], group[bi]
                phi = list(range(n))
                for i in range(len(a)):
                    phi[a[i]] = b[i]
                    phi[b[i]] = a[i]
                gens.append(tuple(phi))
    sample = list(dict.fromkeys(gens))
    if gens:
        rng = _random.Random(0xC0FFEE)
        tries = 0
        have = set(sample)
        identity = tuple(range(n))
        while len(sample) < cap and tries < 8 * cap:
            tries += 1
            f = rng.choice(gens)
            g = rng.choice(sample) if rng.random() < 0.5 else rng.choice(gens)
            comp = tuple(f[g[i]] for i in range(n))
            if comp != identity and comp not in have:
                have.add(comp)
                sample.append(comp)
    out = []
    for phi in sample[:cap]:
        inv = [0] * n
        for i, p in enumerate(phi):
            inv[p] = i
        out.append((list(phi), inv))
    return out


def _cycle_key(row) -> tuple:
    """(length of the cycle through 0, other cycle lengths ascending).

    Ordering these keys lexicographically matches ordering the corresponding
    normal-form row vectors lexicographically, so completed rows can be
    compared against the branch's first row without building vectors.
    """
    n = len(row)
    seen = [False] * n
    cycle_of_zero = 0
    others = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        hits_zero = False
        while not seen[j]:
            seen[j] = True
            hits_zero = hits_zero or j == 0
            j = row[j]
            length += 1
        if hits_zero:
            cycle_of_zero = length
        else:
            others.append(length)
    others.sort()
    return (cycle_of_zero, tuple(others))


# --- top-level enumeration ---------------------------------------------------


def _branches(spec: SearchSpec) -> list[list[tuple[int, int, int]]]:
    n = spec.order
    if n == 1:
        return [[]]
    if spec.up_to_isomorphism:
        out = []
        for row in canonical_first_rows(n):
            out.append([(1, c, row[c]) for c in range(1, n)])
        return out
    if n == 2:
        return [[]]
    return [[(1, 1, v)] for v in range(n) if v != 1]


def _run_branch(args):
    spec, prefix, branch_budget, value_order = args
    eng = _Engine(
        SearchSpec(
            order=spec.order,
            required_identities=spec.required_identities,
            required_properties=spec.required_properties,
            forbid_associative=spec.forbid_associative,
            up_to_isomorphism=spec.up_to_isomorphism,
            node_budget=branch_budget,
            table_limit=spec.table_limit,
        ),
        value_order,
    )
    if spec.up_to_isomorphism and spec.order > 1:
        row = [1] + [v for _, _, v in sorted(prefix, key=lambda t: t[1])]
        eng.canon_key = _cycle_key(row)
        eng.sym_perms = _stabilizer_sample(row)
    eng.run(prefix)
    return [rows for rows in eng.solutions], eng.nodes, not eng.budget_hit


def _verify_solution(spec: SearchSpec, rows) -> LoopTable | None:
    """Independent brute-force re-check of a completed table.

    Filters rather than trusts: propagation is complete for the catalog
    identities, but a table that slipped through an incremental check (or
    fails an existential requirement like nonassociativity) is dropped here.
    """
    loop = loop_from_rows(rows)
    for ident in spec.required_identities:
        if not satisfies(loop, ident).holds:
            return None
    for prop in spec.required_properties:
        if not check_property(loop, prop).holds:
            return None
    if spec.forbid_associative and satisfies(loop, ASSOCIATIVITY).holds:
        return None
    return loop


def enumerate_loops(
    spec: SearchSpec, workers: int = 1, value_order: str = "ascending"
) -> SearchOutcome:
    """Run the constrained completion search.

    `workers` splits the top-level branches over a process pool; results
    are identical for any worker count (branch results are merged in branch
    order and budgets are allotted per branch up front).
    """
    if spec.order < 1:
        raise ValueError("order must be positive")
    branches = _branches(spec)
    # the budget caps each independent top-level branch, so outcomes do not
    # depend on how branches are distributed over workers
    per_branch = spec.node_budget or DEFAULT_NODE_BUDGET
    jobs = [(spec, prefix, per_branch, value_order) for prefix in branches]
    if workers > 1 and len(jobs) > 1:
        import multiprocessing as mp

        with mp.Pool(workers) as pool:
            results = pool.map(_run_branch, jobs)
    else:
        results = [_run_branch(job) for job in jobs]
    tables: list[LoopTable] = []
    nodes = 0
    exhausted = True
    for rows_list, branch_nodes, branch_exhausted in results:
        nodes += branch_nodes
        exhausted = exhausted and branch_exhausted
        for rows in rows_list:
            loop = _verify_solution(spec, rows)
            if loop is not None:
                tables.append(loop)
    if spec.up_to_isomorphism:
        tables = _dedup_isomorphism(tables)
    tables.sort(key=serialize)
    count = len(tables)
    if spec.table_limit is not None:
        tables = tables[: spec.table_limit]
    return SearchOutcome(count, tables, exhausted, nodes)


def _dedup_isomorphism(tables: list[LoopTable]) -> list[LoopTable]:
    reps: list[tuple[tuple, LoopTable]] = []
    for loop in tables:
        fp = tuple(sorted(_invariant_vector(loop)))
        for rep_fp, rep in reps:
            if rep_fp == fp and isomorphic(rep, loop).isomorphic:
                break
        else:
            reps.append((fp, loop))
    return [rep for _, rep in reps]


# --- Steiner triple system enumeration --------------------------------------


def enumerate_sts(v: int) -> list:
    """All Steiner triple systems on v points, up to isomorphism.

    Backtracks over blocks in lexicographic order with pair-coverage
    propagation.  Labels are normalized before the search: point 1's blocks
    are {1,2,3},{1,4,5},..., the block through {2,4} is {2,4,6}, and the
    block through {2,5} meets {7,8}; every system admits such a labeling
    (relabel within the star stabilizer), so the enumeration stays complete
    while most point-permutation duplicates never get built.  The survivors
    are reduced to isomorphism classes with an invariant-guided backtracking
    equivalence test.  Complete up to v = 15.
    """
    from .constructions import TripleSystem, triple_system

    if v < 1 or v % 6 not in (1, 3):
        raise InadmissibleOrderError(f"no Steiner triple system on {v} points")
    if v == 1:
        return [TripleSystem(1, ())]
    if v == 3:
        return [triple_system(3, [(1, 2, 3)])]
    base_blocks = [(1, 2 * i, 2 * i + 1) for i in range(1, (v + 1) // 2)]
    systems: list[tuple[tuple[int, int, int], ...]] = []
    covered = [0] * (v + 1)  # bitmask of partners per point

    def cover(a, b, c):
        covered[a] |= (1 << b) | (1 << c)
        covered[b] |= (1 << a) | (1 << c)
        covered[c] |= (1 << a) | (1 << b)

    def uncover(a, b, c):
        covered[a] &= ~((1 << b) | (1 << c))
        covered[b] &= ~((1 << a) | (1 << c))
        covered[c] &= ~((1 << a) | (1 << b))

    for a, b, c in base_blocks:
        cover(a, b, c)

    blocks = list(base_blocks)

    def first_uncovered():
        for a in range(2, v):
            mask = covered[a]
            for b in range(a + 1, v + 1):
                if not (mask >> b) & 1:
                    return a, b
        return None

    def dfs():
        pair = first_uncovered()
        if pair is None:
            systems.append(tuple(sorted(blocks)))
            return
        a, b = pair
        for c in range(b + 1, v + 1):
            if (covered[a] >> c) & 1 or (covered[b] >> c) & 1:
                continue
            if a == 2 and b == 4 and c != 6:
                continue  # normalized: the block through {2,4} is {2,4,6}
            if a == 2 and b == 5 and c > 8:
                continue  # normalized: the block through {2,5} meets {7,8}
            blocks.append((a, b, c))
            cover(a, b, c)
            dfs()
            uncover(a, b, c)
            blocks.pop()

    dfs()
    out = []
    reps: list[tuple[tuple, dict, tuple]] = []  # (fingerprint, invariants, blocks)
    for blocks_t in systems:
        inv = _sts_invariants(v, blocks_t)
        fp = tuple(sorted(inv.values()))
        for rep_fp, rep_inv, rep_blocks in reps:
            if rep_fp == fp and _sts_isomorphic(v, rep_blocks, blocks_t, rep_inv, inv):
                break
        else:
            reps.append((fp, inv, blocks_t))
            out.append(triple_system(v, blocks_t))
    return out


def _sts_pair_cycles(v, third, x, y):
    """Cycle-length multiset of the two-block graph avoiding points x, y."""
    exclude = third[(x, y)]
    seen = set()
    seen.add(x)
    seen.add(y)
    seen.add(exclude)
    lengths = []
    third_get = third.__getitem__
    for start in range(1, v + 1):
        if start in seen:
            continue
        length = 0
        p = start
        use_x = True
        while p not in seen:
            seen.add(p)
            p = third_get((x, p)) if use_x else third_get((y, p))
            use_x = not use_x
            length += 1
        lengths.append(length)
    lengths.sort()
    return tuple(lengths)


def _sts_third_map(blocks):
    third = {}
    for a, b, c in blocks:
        third[(a, b)] = c
        third[(b, a)] = c
        third[(a, c)] = b
        third[(c, a)] = b
        third[(b, c)] = a
        third[(c, b)] = a
    return third


def _sts_invariants(v, blocks) -> dict:
    """Per-point invariant: sorted multiset of pair cycle structures."""
    third = _sts_third_map(blocks)
    return {
        x: tuple(sorted(_sts_pair_cycles(v, third, x, y) for y in range(1, v + 1) if y != x))
        for x in range(1, v + 1)
    }


def _sts_fingerprint(v, blocks):
    return tuple(sorted(_sts_invariants(v, blocks).values()))


def _sts_isomorphic(v, blocks1, blocks2, inv1=None, inv2=None) -> bool:
    third1 = _sts_third_map(blocks1)
    set2 = {tuple(sorted(b)) for b in blocks2}
    if inv1 is None:
        inv1 = _sts_invariants(v, blocks1)
    if inv2 is None:
        inv2 = _sts_invariants(v, blocks2)
    mapping = {}
    used = set()

    def consistent(x):
        # every block through x with both other points mapped must land on
        # a block of the target
        fx = mapping[x]
        for y in range(1, v + 1):
            if y == x or y not in mapping:
                continue
            z = third1[(x, y)]
            if z in mapping:
                if tuple(sorted((fx, mapping[y], mapping[z]))) not in set2:
                    return False
        return True

    def backtrack(x):
        if x > v:
            return True
        for y in range(1, v + 1):
            if y in used or inv2[y] != inv1[x]:
                continue
            mapping[x] = y
            used.add(y)
            if consistent(x) and backtrack(x + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return backtrack(1)


# --- structural claims over enumerated models --------------------------------


@dataclass
class ClaimsReport:
    orders: tuple[int, ...]
    observed_pairs: list[tuple[int, int]] = field(default_factory=list)
    class_counts: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    exhausted: bool = True

    @property
    def ok(self) -> bool:
        return not self.failures and self.exhausted


ADMISSIBLE_PAIRS_UP_TO_14 = ((10, 1), (12, 3), (14, 1))


def verify_structure_claims(
    n_max: int = 12, node_budget: int | None = None, workers: int = 1
) -> ClaimsReport:
    """Enumerate nonassociative C-loops up to n_max and check the structural
    constraints every model must satisfy: nucleus index is never 2, the
    order/nucleus pair satisfies n/m = 2 or 4 (mod 6) with n even, and the
    observed pairs up to order 14 stay within the admissible list."""
    from .structure import nucleus

    report = ClaimsReport(orders=tuple(range(1, n_max + 1)))
    for n in report.orders:
        spec = SearchSpec(
            order=n,
            required_identities=(CATALOG["C"],),
            forbid_associative=True,
            up_to_isomorphism=True,
            node_budget=node_budget,
        )
        outcome = enumerate_loops(spec, workers=workers)
        report.exhausted = report.exhausted and outcome.exhausted
        report.class_counts[n] = outcome.count
        for loop in outcome.tables:
            m = len(nucleus(loop))
            report.observed_pairs.append((n, m))
            if n % m != 0:
                report.failures.append(f"order {n}: nucleus size {m} does not divide")
                continue
            index = n // m
            if index == 2:
                report.failures.append(f"order {n}: nucleus of index 2 observed")
            if index % 6 not in (2, 4):
                report.failures.append(
                    f"order {n}: n/m = {index} violates the mod-6 congruence"
                )
            if n % 2 != 0:
                report.failures.append(f"order {n}: odd nonassociative C-loop observed")
            if n <= 14 and (n, m) not in ADMISSIBLE_PAIRS_UP_TO_14:
                report.failures.append(f"pair ({n}, {m}) outside the admissible list")
    return report


def default_budget() -> int:
    """Node budget, overridable through the LOOPSMITH_BUDGET variable."""
    raw = os.environ.get("LOOPSMITH_BUDGET")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_NODE_BUDGET

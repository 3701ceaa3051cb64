"""Compiled incremental propagation for the loop-completion search.

For each required identity this module emits (and exec-compiles) a
specialized checker function.  Given the cell just assigned, the checker
enumerates exactly the identity instances whose evaluation reads that cell,
re-evaluates each such instance on the partial table, rejects on a violated
determined instance, and forces the last undetermined cell when one side is
known and the other is blocked only at its outermost product.

Emitting straight-line Python per identity removes the interpretive
overhead of a generic term walker from the innermost search loop; the
compiled checkers are the hot path of the whole search module.
"""

from __future__ import annotations

from .identities import Identity


def compile_side(term, var_index):
    """Flatten a term into product steps; refs >= 0 are steps, ~i is variable i."""
    steps: list[tuple[int, int]] = []

    def walk(t) -> int:
        if isinstance(t, str):
            return ~var_index[t]
        a = walk(t[0])
        b = walk(t[1])
        steps.append((a, b))
        return len(steps) - 1

    final = walk(term)
    return steps, final


class _Emitter:
    def __init__(self):
        self.lines: list[str] = []
        self.counter = 0

    def fresh(self, stem: str) -> str:
        self.counter += 1
        return f"{stem}{self.counter}"

    def emit(self, indent: int, text: str) -> None:
        self.lines.append("    " * indent + text)


def _emit_invert(em, steps, ref, target, indent, bound, prefix):
    """Emit code binding variables so that `ref` evaluates to `target`.

    Returns the indentation level at which execution continues with the
    bindings in effect.  `bound` maps variable index -> local name.
    """
    if ref < 0:
        var = ~ref
        if var in bound:
            em.emit(indent, f"if {bound[var]} == {target}:")
            return indent + 1
        name = f"{prefix}v{var}"
        em.emit(indent, f"{name} = {target}")
        bound[var] = name
        return indent
    a, b = steps[ref]
    # direct lookups when one operand is an already-bound variable
    if a < 0 and ~a in bound:
        col = em.fresh(f"{prefix}c")
        em.emit(indent, f"{col} = pos_row[{bound[~a]}][{target}]")
        em.emit(indent, f"if {col} >= 0:")
        return _emit_invert(em, steps, b, col, indent + 1, bound, prefix)
    if b < 0 and ~b in bound:
        row = em.fresh(f"{prefix}r")
        em.emit(indent, f"{row} = pos_col[{bound[~b]}][{target}]")
        em.emit(indent, f"if {row} >= 0:")
        return _emit_invert(em, steps, a, row, indent + 1, bound, prefix)
    row = em.fresh(f"{prefix}r")
    col = em.fresh(f"{prefix}c")
    em.emit(indent, f"for {row} in range(n):")
    em.emit(indent + 1, f"{col} = pos_row[{row}][{target}]")
    em.emit(indent + 1, f"if {col} >= 0:")
    indent = _emit_invert(em, steps, a, row, indent + 2, bound, prefix)
    return _emit_invert(em, steps, b, col, indent, bound, prefix)


def _emit_eval_side(em, steps, final, bound, indent, tag, hoisted):
    """Emit evaluation of one side; sets {tag}v (-2 blocked deep, -1 hole at
    the outermost product, else the value) and {tag}r/{tag}c for the hole.
    Steps already available as names in `hoisted` are not recomputed."""
    val, hr, hc = f"{tag}v", f"{tag}r", f"{tag}c"
    if not steps:
        em.emit(indent, f"{val} = {bound[~final]}")
        em.emit(indent, f"{hr} = -1")
        return indent
    em.emit(indent, f"{val} = -2")
    names: dict[int, str] = dict(hoisted)
    last = len(steps) - 1
    for i, (a, b) in enumerate(steps):
        if i in names:
            continue
        ea = names[a] if a >= 0 else bound[~a]
        eb = names[b] if b >= 0 else bound[~b]
        if i == last:
            em.emit(indent, f"{hr} = {ea}")
            em.emit(indent, f"{hc} = {eb}")
            em.emit(indent, f"{val} = table[{ea}][{eb}]")
        else:
            name = em.fresh(f"{tag}t")
            em.emit(indent, f"{name} = table[{ea}][{eb}]")
            em.emit(indent, f"if {name} >= 0:")
            indent += 1
            names[i] = name
    return indent


def _emit_instance_check(em, comp, bound, indent, prefix, lhs_hoisted, rhs_hoisted):
    lt, rt = f"{prefix}L", f"{prefix}R"
    indent = _emit_eval_side(em, comp.lhs_steps, comp.lhs_final, bound, indent, lt, lhs_hoisted)
    indent = _emit_eval_side(em, comp.rhs_steps, comp.rhs_final, bound, indent, rt, rhs_hoisted)
    em.emit(indent, f"if {lt}v >= 0:")
    em.emit(indent + 1, f"if {rt}v >= 0:")
    em.emit(indent + 2, f"if {lt}v != {rt}v:")
    em.emit(indent + 3, "return False")
    em.emit(indent + 1, f"elif {rt}v == -1:")
    em.emit(indent + 2, f"if not force({rt}r, {rt}c, {lt}v):")
    em.emit(indent + 3, "return False")
    em.emit(indent, f"elif {lt}v == -1 and {rt}v >= 0:")
    em.emit(indent + 1, f"if not force({lt}r, {lt}c, {rt}v):")
    em.emit(indent + 2, "return False")


class CompiledIdentity:
    """An identity plus its exec-compiled incremental trigger checker."""

    def __init__(self, ident: Identity):
        self.identity = ident
        self.variables = ident.variables
        self.k = len(self.variables)
        var_index = {v: i for i, v in enumerate(self.variables)}
        self.lhs_steps, self.lhs_final = compile_side(ident.lhs, var_index)
        self.rhs_steps, self.rhs_final = compile_side(ident.rhs, var_index)
        self.checker = self._build_checker()

    def _var_deps(self, steps):
        deps: list[set[int]] = []
        for a, b in steps:
            d = set()
            for ref in (a, b):
                if ref < 0:
                    d.add(~ref)
                else:
                    d |= deps[ref]
            deps.append(d)
        return deps

    def _emit_preamble(self, em, steps, deps, bound, indent, tag):
        """Hoist steps that need no free variable out of the free-var loops.

        An empty hoisted cell blocks this side below its outermost product
        for every value of the free variables, in which case no instance of
        this trigger can act, so nesting the rest under the guard is exact.
        """
        hoisted: dict[int, str] = {}
        last = len(steps) - 1
        for i, (a, b) in enumerate(steps):
            if i == last:
                break
            if not deps[i] <= bound.keys():
                continue
            if (a >= 0 and a not in hoisted) or (b >= 0 and b not in hoisted):
                continue
            ea = hoisted[a] if a >= 0 else bound[~a]
            eb = hoisted[b] if b >= 0 else bound[~b]
            name = em.fresh(f"{tag}h")
            em.emit(indent, f"{name} = table[{ea}][{eb}]")
            em.emit(indent, f"if {name} >= 0:")
            indent += 1
            hoisted[i] = name
        return hoisted, indent

    def _build_checker(self):
        em = _Emitter()
        em.emit(0, "def _check(table, pos_row, pos_col, n, force, r, c):")
        emitted_any = False
        block = 0
        lhs_deps = self._var_deps(self.lhs_steps)
        rhs_deps = self._var_deps(self.rhs_steps)
        for steps in (self.lhs_steps, self.rhs_steps):
            for s in range(len(steps)):
                a, b = steps[s]
                block += 1
                prefix = f"g{block}_"
                bound: dict[int, str] = {}
                indent = 1
                em.emit(indent, f"# trigger: step {s} of {'lhs' if steps is self.lhs_steps else 'rhs'}")
                indent = _emit_invert(em, steps, a, "r", indent, bound, prefix)
                indent = _emit_invert(em, steps, b, "c", indent, bound, prefix)
                lhs_hoisted, indent = self._emit_preamble(
                    em, self.lhs_steps, lhs_deps, bound, indent, f"{prefix}L"
                )
                rhs_hoisted, indent = self._emit_preamble(
                    em, self.rhs_steps, rhs_deps, bound, indent, f"{prefix}R"
                )
                for var in range(self.k):
                    if var not in bound:
                        name = f"{prefix}v{var}"
                        em.emit(indent, f"for {name} in range(n):")
                        indent += 1
                        bound[var] = name
                _emit_instance_check(
                    em, self, bound, indent, prefix, lhs_hoisted, rhs_hoisted
                )
                emitted_any = True
        if not emitted_any:
            em.emit(1, "pass")
        em.emit(1, "return True")
        source = "\n".join(em.lines)
        namespace: dict = {}
        exec(source, namespace)  # noqa: S102 - generated from our own AST only
        fn = namespace["_check"]
        fn.__source__ = source
        return fn

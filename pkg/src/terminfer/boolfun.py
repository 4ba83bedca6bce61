"""Boolean functions over named variables, with a canonical representation.

A BoolFun stores a truth table (a Python int, bit i = value under assignment
i) over the sorted tuple of variables the function actually depends on.
Dropping inessential variables on construction makes structural equality
coincide with logical equivalence, for functions over any universes, which
is what the fixpoint iterations use as their stabilization test.

Arities in this analyzer stay small (argument positions of one predicate
plus the locals of one clause), so tables are the cheap and obviously
correct choice over decision diagrams.

The domain deliberately represents *all* boolean functions, not only the
positive ones: universal quantification and implication can leave the
positive fragment, and the constant 0 is itself a meaningful analysis answer
(no terminating mode found).  Positivity is a queried property, not a
structural invariant.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left


class BoolFun:
    __slots__ = ("vars", "table")

    def __init__(self, vars: tuple[str, ...], table: int, _normalize: bool = True):
        if _normalize:
            vars, table = _drop_inessential(vars, table)
        self.vars = vars
        self.table = table

    # -- constructors ---------------------------------------------------------

    @classmethod
    def true(cls) -> "BoolFun":
        return cls((), 1, _normalize=False)

    @classmethod
    def false(cls) -> "BoolFun":
        return cls((), 0, _normalize=False)

    @classmethod
    def var(cls, name: str) -> "BoolFun":
        return cls((name,), 0b10, _normalize=False)

    @classmethod
    def conj_vars(cls, names) -> "BoolFun":
        out = cls.true()
        for n in names:
            out = out.conj(cls.var(n))
        return out

    # -- basic structure --------------------------------------------------------

    def is_true(self) -> bool:
        return not self.vars and self.table == 1

    def is_false(self) -> bool:
        return not self.vars and self.table == 0

    def is_positive(self) -> bool:
        """Member of Pos: true under the all-true assignment."""
        return bool((self.table >> ((1 << len(self.vars)) - 1)) & 1)

    def evaluate(self, assignment: dict[str, bool]) -> bool:
        idx = 0
        for j, v in enumerate(self.vars):
            if assignment.get(v, False):
                idx |= 1 << j
        return bool((self.table >> idx) & 1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BoolFun) and self.vars == other.vars
                and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.vars, self.table))

    def __repr__(self) -> str:
        from .report import render_boolfun
        return "BoolFun<%s>" % render_boolfun(self)

    # -- logical operations ------------------------------------------------------

    def conj(self, other: "BoolFun") -> "BoolFun":
        vs, t1, t2 = _align(self, other)
        return BoolFun(vs, t1 & t2)

    def disj(self, other: "BoolFun") -> "BoolFun":
        vs, t1, t2 = _align(self, other)
        return BoolFun(vs, t1 | t2)

    def neg(self) -> "BoolFun":
        mask = (1 << (1 << len(self.vars))) - 1
        return BoolFun(self.vars, ~self.table & mask)

    def implies(self, other: "BoolFun") -> "BoolFun":
        vs, t1, t2 = _align(self, other)
        mask = (1 << (1 << len(vs))) - 1
        return BoolFun(vs, (~t1 | t2) & mask)

    def iff(self, other: "BoolFun") -> "BoolFun":
        vs, t1, t2 = _align(self, other)
        mask = (1 << (1 << len(vs))) - 1
        return BoolFun(vs, ~(t1 ^ t2) & mask)

    def equivalent(self, other: "BoolFun") -> bool:
        return self == other

    def entails(self, other: "BoolFun") -> bool:
        vs, t1, t2 = _align(self, other)
        return (t1 & ~t2) == 0

    # -- cofactors and quantifiers --------------------------------------------------

    def restrict(self, var: str, value: int) -> "BoolFun":
        if var not in self.vars:
            return self
        pos = self.vars.index(var)
        t0, t1 = _split_var(self.table, len(self.vars), pos)
        rest = tuple(v for v in self.vars if v != var)
        return BoolFun(rest, t1 if value else t0)

    def forall(self, vars) -> "BoolFun":
        out = self
        for v in vars:
            if v in out.vars:
                pos = out.vars.index(v)
                t0, t1 = _split_var(out.table, len(out.vars), pos)
                out = BoolFun(tuple(w for w in out.vars if w != v), t0 & t1)
        return out

    def exists(self, vars) -> "BoolFun":
        out = self
        for v in vars:
            if v in out.vars:
                pos = out.vars.index(v)
                t0, t1 = _split_var(out.table, len(out.vars), pos)
                out = BoolFun(tuple(w for w in out.vars if w != v), t0 | t1)
        return out

    # -- substitution -----------------------------------------------------------

    def rename(self, mapping: dict[str, str]) -> "BoolFun":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise ValueError("renaming collapses variables")
        order = tuple(sorted(new_vars))
        if order == new_vars:
            return BoolFun(order, self.table, _normalize=False)
        n = len(order)
        src_pos = {mapping.get(v, v): j for j, v in enumerate(self.vars)}
        table = 0
        for idx in range(1 << n):
            src = 0
            for j, v in enumerate(order):
                if (idx >> j) & 1:
                    src |= 1 << src_pos[v]
            if (self.table >> src) & 1:
                table |= 1 << idx
        return BoolFun(order, table, _normalize=False)

    def substitute(self, mapping: dict[str, "BoolFun"]) -> "BoolFun":
        """Simultaneous substitution; replacement functions must not mention
        any of the substituted variables (true for every use in this package,
        where predicate argument positions and clause locals are disjoint)."""
        for g in mapping.values():
            clash = set(g.vars) & set(mapping)
            if clash:
                raise ValueError("substitution captures %s" % sorted(clash))
        out = self
        for v, g in mapping.items():
            if v not in out.vars:
                continue
            hi = out.restrict(v, 1)
            lo = out.restrict(v, 0)
            out = g.conj(hi).disj(g.neg().conj(lo))
        return out

    # -- model structure ---------------------------------------------------------

    def minimal_models(self) -> list[frozenset[str]]:
        """Minimal sets of true variables among satisfying assignments."""
        n = len(self.vars)
        models = [i for i in range(1 << n) if (self.table >> i) & 1]
        minimal = []
        for m in sorted(models, key=lambda i: (bin(i).count("1"), i)):
            if not any(m & keep == keep for keep in minimal):
                minimal.append(m)
        return [frozenset(self.vars[j] for j in range(n) if (m >> j) & 1)
                for m in minimal]

    def positive_implicants(self) -> list[frozenset[str]]:
        """Minimal variable sets whose conjunction entails the function."""
        n = len(self.vars)
        found: list[set[str]] = []
        for size in range(n + 1):
            for combo in itertools.combinations(self.vars, size):
                s = set(combo)
                if any(f <= s for f in found):
                    continue
                g = self
                for v in combo:
                    g = g.restrict(v, 1)
                if g.is_true():
                    found.append(s)
        return [frozenset(s) for s in found]

    def is_monotone(self) -> bool:
        for pos in range(len(self.vars)):
            t0, t1 = _split_var(self.table, len(self.vars), pos)
            if t0 & ~t1:
                return False
        return True


TRUE = BoolFun.true()
FALSE = BoolFun.false()


def _drop_inessential(vars: tuple[str, ...], table: int) -> tuple[tuple[str, ...], int]:
    pos = len(vars) - 1
    while pos >= 0:
        t0, t1 = _split_var(table, len(vars), pos)
        if t0 == t1:
            vars = vars[:pos] + vars[pos + 1:]
            table = t0
        pos -= 1
    return vars, table


def _split_var(table: int, nvars: int, pos: int) -> tuple[int, int]:
    """Cofactor tables (var at `pos` = 0, = 1)."""
    chunk = 1 << pos
    mask = (1 << chunk) - 1
    t0 = t1 = 0
    for i in range(1 << (nvars - 1 - pos)):
        t0 |= ((table >> (2 * i * chunk)) & mask) << (i * chunk)
        t1 |= ((table >> ((2 * i + 1) * chunk)) & mask) << (i * chunk)
    return t0, t1


def _insert_var(table: int, nvars: int, pos: int) -> int:
    """Duplicate the table across a fresh variable at bit position pos."""
    chunk = 1 << pos
    mask = (1 << chunk) - 1
    out = 0
    for i in range(1 << (nvars - pos)):
        blk = (table >> (i * chunk)) & mask
        out |= blk << (2 * i * chunk)
        out |= blk << ((2 * i + 1) * chunk)
    return out


def _extend(f: BoolFun, universe: tuple[str, ...]) -> int:
    """Table of f over the (sorted) superset universe."""
    vars = f.vars
    table = f.table
    for v in universe:
        if v not in vars:
            pos = bisect_left(vars, v)
            table = _insert_var(table, len(vars), pos)
            vars = vars[:pos] + (v,) + vars[pos:]
    return table


def _align(a: BoolFun, b: BoolFun) -> tuple[tuple[str, ...], int, int]:
    if a.vars == b.vars:
        return a.vars, a.table, b.table
    universe = tuple(sorted(set(a.vars) | set(b.vars)))
    return universe, _extend(a, universe), _extend(b, universe)

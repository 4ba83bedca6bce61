"""Size abstraction: from the clause database to linear arithmetic.

Every argument term is replaced by its measure under the term-size norm:
a compound with n > 0 arguments measures 1 plus the sum of its arguments'
measures, a constant (atoms and integers alike) measures 0, and a variable
measures itself, becoming a size variable ranging over the non-negative
rationals.  Multiple occurrences of a program variable share one size
variable, which is what carries inter-argument information.

The norm is the only one shipped, but it is kept behind this single entry
point (`term_size`) so another linear norm can be slotted in later.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polyhedra import LinExpr, Polyhedron
from .terms import Clause, Const, PredId, Program, Struct, Term, Var


def term_size(t: Term) -> LinExpr:
    """Symbolic term-size measure of t."""
    if isinstance(t, Var):
        return LinExpr.var(t.name)
    if isinstance(t, Const):
        return LinExpr.constant(0)
    assert isinstance(t, Struct)
    out = LinExpr.constant(1)
    for a in t.args:
        out = out + term_size(a)
    return out


@dataclass
class NumClause:
    """A clause over argument sizes.

    `constraint` is a polyhedron over the clause's local size variables; the
    frontend produces top here (the hook exists for size information coming
    from outside the program text, e.g. an enriched builtin table).
    """

    head: tuple[PredId, tuple[LinExpr, ...]]
    body: tuple[tuple[PredId, tuple[LinExpr, ...]], ...]
    constraint: Polyhedron
    local_vars: tuple[str, ...]


@dataclass
class NumProgram:
    clauses: dict[PredId, list[NumClause]]
    builtins: object  # BuiltinTable
    aux_preds: set[PredId] = field(default_factory=set)

    def predicates(self) -> list[PredId]:
        return list(self.clauses.keys())


def abstract_clause(c: Clause) -> NumClause:
    head_exprs = tuple(term_size(t) for t in c.head.args)
    body = tuple((a.pred, tuple(term_size(t) for t in a.args)) for a in c.body)
    local_vars = tuple(c.variables())
    return NumClause(
        head=(c.head.pred, head_exprs),
        body=body,
        constraint=Polyhedron.top(local_vars),
        local_vars=local_vars,
    )


def abstract_program(p: Program) -> NumProgram:
    clauses = {pred: [abstract_clause(c) for c in cs]
               for pred, cs in p.clauses.items()}
    return NumProgram(clauses=clauses, builtins=p.builtins,
                      aux_preds=set(p.aux_preds))


def render_num_clause(nc: NumClause) -> str:
    def atom(pred: PredId, exprs) -> str:
        from .polyhedra import render_linexpr
        if not exprs:
            return pred.name
        return "%s(%s)" % (pred.name, ", ".join(render_linexpr(e) for e in exprs))

    head = atom(*nc.head)
    if not nc.body:
        return head + "."
    return "%s :- %s." % (head, ", ".join(atom(p, es) for p, es in nc.body))

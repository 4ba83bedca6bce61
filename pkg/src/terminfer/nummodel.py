"""Numeric model: per predicate, a polyhedron over its argument sizes that
over-approximates every computed answer.

Computed SCC by SCC, callees first.  Within an SCC the iteration is a
simultaneous (Jacobi-style) Kleene ascent from bottom: each round evaluates
all clause consequences against the previous round's iterate, joins with the
convex hull, and, once the configured number of plain iterations has passed,
extrapolates with the standard widening.  Stability is detected by mutual
entailment.  A starved SCC degrades to top for all its members, which keeps
everything downstream sound.
"""

from __future__ import annotations

from .budget import AnalysisParams, Diagnostic, Fuel, FuelExhausted
from .callgraph import SccOrder
from .polyhedra import EQ, LinExpr, Polyhedron
from .sizeabs import NumClause, NumProgram
from .terms import PredId

NumericModel = dict  # PredId -> Polyhedron over x1..xN

ARG_PREFIX = "x"


def arg_vars(arity: int) -> tuple[str, ...]:
    return tuple("%s%d" % (ARG_PREFIX, i) for i in range(1, arity + 1))


def _body_post(pred: PredId, model: NumericModel, builtins) -> Polyhedron:
    if pred in model:
        return model[pred]
    if builtins is not None and builtins.defines(pred):
        return builtins.entry(pred).num_post
    # undefined predicate: assumed to fail
    return Polyhedron.bottom(arg_vars(pred.arity))


def clause_consequence(clause: NumClause, model: NumericModel,
                       builtins=None, fuel: Fuel | None = None) -> Polyhedron:
    """One clause's contribution to its head predicate's model.

    Conjoin the clause constraint with every body atom's model instantiated
    on the call expressions, equate fresh head-argument variables with the
    head expressions, then project onto the head arguments.
    """
    fuel = fuel or Fuel(None)
    head_pred, head_exprs = clause.head
    n = head_pred.arity
    head_names = tuple("$h%d" % i for i in range(1, n + 1))
    all_vars = list(clause.local_vars) + list(head_names)

    raw = [(c.expr, c.rel) for c in clause.constraint.cons]
    for pred, exprs in clause.body:
        post = _body_post(pred, model, builtins)
        if post.is_empty():
            return Polyhedron.bottom(arg_vars(n))
        repl = {v: exprs[i] for i, v in enumerate(arg_vars(pred.arity))}
        fuel.spend()
        raw.extend(post.instantiated(repl))
    for name, expr in zip(head_names, head_exprs):
        raw.append((LinExpr.var(name) - expr, EQ))

    fuel.spend()
    combined = Polyhedron.make(all_vars, raw, minimize=False)
    fuel.spend()
    projected = combined.project(head_names)
    return projected.rename(dict(zip(head_names, arg_vars(n))))


def compute_numeric_model(numprog: NumProgram, order: SccOrder,
                          params: AnalysisParams | None = None
                          ) -> tuple[NumericModel, list[Diagnostic]]:
    params = params or AnalysisParams(fuel_per_step=None)
    model: NumericModel = {}
    diagnostics: list[Diagnostic] = []
    for scc in order.sccs:
        fuel = params.fuel_for("2")
        try:
            model.update(_solve_scc(scc, numprog, model, params, fuel))
        except FuelExhausted:
            for p in scc:
                model[p] = Polyhedron.top(arg_vars(p.arity))
            diagnostics.append(Diagnostic(
                scc, "2", "budget exhausted; numeric model degraded to top"))
    return model, diagnostics


def _solve_scc(scc, numprog: NumProgram, lower: NumericModel,
               params: AnalysisParams, fuel: Fuel) -> NumericModel:
    iterate = {p: Polyhedron.bottom(arg_vars(p.arity)) for p in scc}
    k = 0
    while True:
        env = dict(lower)
        env.update(iterate)
        joined = {}
        for p in scc:
            acc = iterate[p]
            for clause in numprog.clauses[p]:
                cc = clause_consequence(clause, env, numprog.builtins, fuel)
                fuel.spend()
                acc = acc.hull(cc)
            joined[p] = acc
        if k <= params.widen_delay:
            nxt = joined
        else:
            nxt = {}
            for p in scc:
                fuel.spend()
                nxt[p] = iterate[p].widen(joined[p])
        stable = True
        for p in scc:
            fuel.spend()
            if not nxt[p].equals(iterate[p]):
                stable = False
        iterate = nxt
        if stable:
            return iterate
        k += 1


def render_numeric_model(model: NumericModel) -> str:
    from .polyhedra import render_constraint
    lines = []
    for pred in sorted(model):
        poly = model[pred]
        if poly.is_empty():
            body = "false"
        elif poly.is_top():
            body = "true"
        else:
            body = ", ".join(render_constraint(c) for c in poly.cons)
        lines.append("%s: {%s}" % (pred, body))
    return "\n".join(lines) + ("\n" if lines else "")

"""Boolean side of the pipeline: groundness models and termination conditions.

The size-abstracted program is translated once more: every natural number
becomes true, every size variable becomes a propositional variable, and
addition becomes conjunction, so a boolean argument expression states "this
argument is rigid iff all these variables are rigid".  Clause constraint
equalities translate to an iff of the two sides' translations; inequalities
carry magnitude information only, not rigidity, and are dropped.

Two fixpoints are computed per SCC, callees first:

  * the boolean model (least fixpoint from false, join = disjunction):
    groundness dependencies of computed answers;
  * the termination conditions (greatest fixpoint from true): the weakest
    boolean condition on a predicate's arguments that bounds its own level
    mapping and guarantees, for every clause and every body position, that
    the state reached after the preceding atoms satisfies the callee's
    condition.

Both lattices are finite, so plain iteration converges without widening.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .boolfun import FALSE, TRUE, BoolFun
from .budget import AnalysisParams, Diagnostic, Fuel, FuelExhausted
from .callgraph import SccOrder
from .levelmap import LevelMapping
from .nummodel import arg_vars
from .polyhedra import EQ, LinExpr
from .sizeabs import NumClause, NumProgram
from .terms import PredId

BooleanModel = dict  # PredId -> BoolFun over x1..xN
TerminationConditions = dict  # PredId -> BoolFun over x1..xN


@dataclass
class BoolClause:
    head: tuple[PredId, tuple[BoolFun, ...]]
    body: tuple[tuple[PredId, tuple[BoolFun, ...]], ...]
    constraint: BoolFun
    local_vars: tuple[str, ...]


def bool_expr(e: LinExpr) -> BoolFun:
    """Translation of a size expression: conjunction of its variables.

    Constants map to true, so an all-constant expression (a ground argument)
    is simply true.
    """
    return BoolFun.conj_vars(sorted(e.coeffs))


def _bool_constraint(clause: NumClause) -> BoolFun:
    out = TRUE
    for c in clause.constraint.cons:
        if c.rel != EQ:
            continue  # inequalities do not constrain rigidity
        pos = [v for v, k in c.coeffs if k > 0]
        neg = [v for v, k in c.coeffs if k < 0]
        out = out.conj(BoolFun.conj_vars(pos).iff(BoolFun.conj_vars(neg)))
    return out


def abstract_boolean(numprog: NumProgram) -> dict[PredId, list[BoolClause]]:
    out: dict[PredId, list[BoolClause]] = {}
    for pred, clauses in numprog.clauses.items():
        acc = []
        for nc in clauses:
            head_pred, head_exprs = nc.head
            acc.append(BoolClause(
                head=(head_pred, tuple(bool_expr(e) for e in head_exprs)),
                body=tuple((q, tuple(bool_expr(e) for e in exprs))
                           for q, exprs in nc.body),
                constraint=_bool_constraint(nc),
                local_vars=nc.local_vars,
            ))
        out[pred] = acc
    return out


def _post_of(pred: PredId, model: BooleanModel, builtins) -> BoolFun:
    if pred in model:
        return model[pred]
    if builtins is not None and builtins.defines(pred):
        return builtins.entry(pred).bool_post
    return FALSE  # undefined predicates are assumed to fail


def _subst_args(f: BoolFun, pred: PredId, args: tuple[BoolFun, ...]) -> BoolFun:
    return f.substitute({v: args[i] for i, v in enumerate(arg_vars(pred.arity))})


def _clause_post(clause: BoolClause, env: BooleanModel, builtins,
                 fuel: Fuel) -> BoolFun:
    head_pred, head_exprs = clause.head
    n = head_pred.arity
    head_names = ["$a%d" % i for i in range(1, n + 1)]
    f = clause.constraint
    for q, args in clause.body:
        post = _post_of(q, env, builtins)
        if post.is_false():
            return FALSE
        fuel.spend()
        f = f.conj(_subst_args(post, q, args))
        if f.is_false():
            return FALSE
    for name, expr in zip(head_names, head_exprs):
        f = f.conj(BoolFun.var(name).iff(expr))
    fuel.spend()
    f = f.exists(clause.local_vars)
    return f.rename(dict(zip(head_names, arg_vars(n))))


def compute_boolean_model(bclauses: dict[PredId, list[BoolClause]],
                          order: SccOrder, builtins=None,
                          params: AnalysisParams | None = None
                          ) -> tuple[BooleanModel, list[Diagnostic]]:
    params = params or AnalysisParams(fuel_per_step=None)
    model: BooleanModel = {}
    diagnostics: list[Diagnostic] = []
    for scc in order.sccs:
        fuel = params.fuel_for("4")
        try:
            iterate = {p: FALSE for p in scc}
            while True:
                env = dict(model)
                env.update(iterate)
                nxt = {}
                for p in scc:
                    f = iterate[p]
                    for clause in bclauses[p]:
                        fuel.spend()
                        f = f.disj(_clause_post(clause, env, builtins, fuel))
                    nxt[p] = f
                if nxt == iterate:
                    break
                iterate = nxt
            model.update(iterate)
        except FuelExhausted:
            for p in scc:
                model[p] = TRUE
            diagnostics.append(Diagnostic(
                scc, "4", "budget exhausted; boolean model degraded to top"))
    return model, diagnostics


def boolean_level_mapping(lm: LevelMapping, preds=None) -> dict[PredId, BoolFun]:
    """Boundedness condition of each predicate's mapping set.

    A linear form is bounded iff all its variables are; a min of several is
    bounded iff some member is; the constant-0 mapping is always bounded;
    failed synthesis yields the unsatisfiable condition.
    """
    out: dict[PredId, BoolFun] = {}
    preds = preds if preds is not None else set(lm.mappings) | lm.failed
    for p in preds:
        if p in lm.failed:
            out[p] = FALSE
            continue
        exprs = lm.mappings.get(p, ())
        if not exprs:
            out[p] = TRUE
            continue
        f = FALSE
        for e in exprs:
            f = f.disj(BoolFun.conj_vars(sorted(e.coeffs)))
        out[p] = f
    return out


def condition_operator(scc: frozenset[PredId],
                       bclauses: dict[PredId, list[BoolClause]],
                       model: BooleanModel, blm: dict[PredId, BoolFun],
                       outer_pre: TerminationConditions,
                       candidate: dict[PredId, BoolFun],
                       builtins=None, fuel: Fuel | None = None
                       ) -> dict[PredId, BoolFun]:
    """One application of the step-5 operator to `candidate` on one SCC.

    For every clause and body position i, the head equations conjoined with
    the posts of atoms before i must imply the callee's condition: the
    candidate for same-SCC callees, the already final condition for lower
    ones, the table value for builtins, true for undefined predicates.
    The whole thing is conjoined with the boundedness condition.
    """
    fuel = fuel or Fuel(None)
    out: dict[PredId, BoolFun] = {}
    for p in sorted(scc):
        acc = blm[p]
        for clause in bclauses[p]:
            head_pred, head_exprs = clause.head
            ante = clause.constraint
            for j, v in enumerate(arg_vars(head_pred.arity)):
                ante = ante.conj(BoolFun.var(v).iff(head_exprs[j]))
            for q, args in clause.body:
                if q in scc:
                    pre_q = candidate[q]
                elif q in outer_pre:
                    pre_q = outer_pre[q]
                elif builtins is not None and builtins.defines(q):
                    pre_q = builtins.entry(q).pre
                else:
                    pre_q = TRUE
                fuel.spend()
                cond = ante.implies(_subst_args(pre_q, q, args))
                acc = acc.conj(cond.forall(clause.local_vars))
                if acc.is_false():
                    break
                # extend the antecedent with this atom's answer pattern
                post = _post_of(q, model, builtins)
                ante = ante.conj(_subst_args(post, q, args))
            if acc.is_false():
                break
        out[p] = acc
    return out


def compute_termination_conditions(bclauses: dict[PredId, list[BoolClause]],
                                   model: BooleanModel,
                                   blm: dict[PredId, BoolFun],
                                   order: SccOrder, builtins=None,
                                   params: AnalysisParams | None = None
                                   ) -> tuple[TerminationConditions,
                                              list[Diagnostic]]:
    params = params or AnalysisParams(fuel_per_step=None)
    pre: TerminationConditions = {}
    diagnostics: list[Diagnostic] = []
    for scc in order.sccs:
        fuel = params.fuel_for("5")
        try:
            candidate = {p: TRUE for p in scc}
            while True:
                nxt = condition_operator(scc, bclauses, model, blm, pre,
                                         candidate, builtins, fuel)
                fuel.spend()
                if nxt == candidate:
                    break
                candidate = nxt
            pre.update(candidate)
        except FuelExhausted:
            for p in scc:
                pre[p] = FALSE
            diagnostics.append(Diagnostic(
                scc, "5", "budget exhausted; condition degraded to 0"))
        for p in sorted(scc):
            if pre[p].is_false():
                diagnostics.append(Diagnostic(
                    scc, "5", "failed component: no terminating mode for %s" % p))
    return pre, diagnostics

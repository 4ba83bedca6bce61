"""Linear level mappings per SCC.

Stage one builds the space of valid coefficient vectors: for every clause of
the component and every body call back into the component, the generic
mapping must drop by at least 1 from head to call, for all argument sizes
allowed by the context (the clause constraint joined with the models of the
preceding body atoms).  Each such universally quantified condition is turned
into an existential linear system on the coefficients by Farkas' lemma, the
multipliers are projected out, and the systems are intersected.

Stage two extracts concrete mappings: the vertices of the coefficient space.
Any valid coefficient vector is a convex combination of vertices plus a
non-negative recession direction, so its support contains some vertex's
support; keeping one vertex per minimal support therefore yields the weakest
boundedness condition downstream, where only supports survive.  Several
vertices per SCC are the normal case for multi-directional predicates, and
are interpreted as the pointwise minimum of their linear forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .budget import Fuel
from .nummodel import NumericModel, arg_vars, _body_post
from .polyhedra import (EQ, GE, LinExpr, Polyhedron, enumerate_vertices,
                        render_linexpr)
from .sizeabs import NumProgram
from .terms import PredId


@dataclass
class Obligation:
    """head must exceed call by >= 1 everywhere in context."""

    context: Polyhedron  # over the clause's local size variables
    head: tuple[PredId, tuple[LinExpr, ...]]
    call: tuple[PredId, tuple[LinExpr, ...]]


@dataclass
class CoefficientSpace:
    space: Polyhedron  # over the coefficient variables, all implicitly >= 0
    coeff_var: dict[tuple[PredId, int], str]  # (pred, position 1..n) -> name


@dataclass
class LevelMapping:
    """Per predicate, a finite set of linear forms read as their minimum.

    An empty tuple is the constant-0 mapping (non-recursive components).
    Predicates in `failed` have no mapping at all; downstream their
    boundedness condition is the constant false.
    """

    mappings: dict[PredId, tuple[LinExpr, ...]]
    failed: set[PredId]
    vectors: tuple[dict[PredId, LinExpr], ...] = ()

    def merge(self, other: "LevelMapping") -> "LevelMapping":
        out = dict(self.mappings)
        out.update(other.mappings)
        return LevelMapping(out, self.failed | other.failed,
                            self.vectors + other.vectors)


def decrease_obligations(scc: frozenset[PredId], numprog: NumProgram,
                         model: NumericModel,
                         fuel: Fuel | None = None) -> list[Obligation]:
    """One obligation per same-SCC body atom, with a model-based context."""
    fuel = fuel or Fuel(None)
    out: list[Obligation] = []
    for p in sorted(scc):
        for clause in numprog.clauses[p]:
            raw = [(c.expr, c.rel) for c in clause.constraint.cons]
            for q, exprs in clause.body:
                if q in scc:
                    fuel.spend()
                    context = Polyhedron.make(clause.local_vars, list(raw))
                    out.append(Obligation(context=context,
                                          head=clause.head, call=(q, exprs)))
                post = _body_post(q, model, numprog.builtins)
                repl = {v: exprs[i]
                        for i, v in enumerate(arg_vars(q.arity))}
                fuel.spend()
                raw.extend(post.instantiated(repl))
    return out


def _coeff_vars(scc: frozenset[PredId]) -> dict[tuple[PredId, int], str]:
    out = {}
    for p in sorted(scc):
        for i in range(1, p.arity + 1):
            out[(p, i)] = "c%02d@%s" % (i, p)
    return out


def coefficient_constraints(obligations: list[Obligation],
                            scc: frozenset[PredId],
                            fuel: Fuel | None = None) -> CoefficientSpace:
    """Farkas translation of all decrease obligations.

    For an obligation with context {rows e_r >= 0 over locals y} the
    universal condition  "forall y in context: d(y) >= 0", with
    d = f_head - f_call - 1 linear in y and coefficients linear in the c's,
    holds iff there are multipliers l_r >= 0 matching d's y-coefficients
    exactly and leaving a non-negative constant.  Empty contexts make an
    obligation vacuous and contribute nothing.
    """
    fuel = fuel or Fuel(None)
    coeff_var = _coeff_vars(scc)
    cvars = sorted(coeff_var.values())
    space = Polyhedron.top(cvars)
    for idx, ob in enumerate(obligations):
        fuel.spend()
        if ob.context.is_empty():
            continue
        locals_ = list(ob.context.vars)
        hp, hexprs = ob.head
        cp, cexprs = ob.call

        # d(y; c): per-local linear forms over the coefficient variables
        gk: dict[str, LinExpr] = {y: LinExpr() for y in locals_}
        g0 = LinExpr.constant(-1)
        for i, e in enumerate(hexprs, start=1):
            cv = coeff_var[(hp, i)]
            for y, a in e.coeffs.items():
                gk[y] = gk[y] + LinExpr({cv: a})
            g0 = g0 + LinExpr({cv: e.const})
        for j, e in enumerate(cexprs, start=1):
            cv = coeff_var[(cp, j)]
            for y, a in e.coeffs.items():
                gk[y] = gk[y] - LinExpr({cv: a})
            g0 = g0 - LinExpr({cv: e.const})

        rows: list[LinExpr] = [LinExpr.var(y) for y in locals_]  # implicit y >= 0
        for c in ob.context.cons:
            rows.append(c.expr)
            if c.rel == EQ:
                rows.append(c.expr.scale(-1))
        mults = ["$m%d_%d" % (idx, r) for r in range(len(rows))]

        raw: list[tuple[LinExpr, str]] = []
        for y in locals_:
            lhs = gk[y]
            for mv, row in zip(mults, rows):
                a = row.coeff(y)
                if a != 0:
                    lhs = lhs - LinExpr({mv: a})
            raw.append((lhs, EQ))
        const_lhs = g0
        for mv, row in zip(mults, rows):
            if row.const != 0:
                const_lhs = const_lhs - LinExpr({mv: row.const})
        raw.append((const_lhs, GE))

        fuel.spend()
        lifted = Polyhedron.make(cvars + mults, raw, minimize=False)
        fuel.spend()
        contribution = lifted.project(cvars)
        fuel.spend()
        space = space.meet(contribution)
        if space.is_empty():
            break
    return CoefficientSpace(space=space, coeff_var=coeff_var)


def concretize(cs: CoefficientSpace, obligations: list[Obligation],
               scc: frozenset[PredId],
               fuel: Fuel | None = None) -> LevelMapping:
    """Extract concrete mappings from the coefficient space.

    Non-recursive components (no obligations) take the constant-0 mapping.
    An empty space means synthesis failed for the whole component.
    """
    fuel = fuel or Fuel(None)
    if not obligations:
        return LevelMapping({p: () for p in scc}, set())
    if cs.space.is_empty():
        return LevelMapping({}, set(scc))

    verts = enumerate_vertices(cs.space, tick=fuel.spend)
    decorated = []
    for v in verts:
        support = frozenset(name for name, val in v.items() if val != 0)
        decorated.append((len(support), tuple(sorted(support)), support, v))
    decorated.sort(key=lambda t: (t[0], t[1]))
    kept: list[tuple[frozenset, dict]] = []
    for _, _, support, v in decorated:
        if any(prev <= support for prev, _ in kept):
            continue
        kept.append((support, v))

    vectors = []
    mappings: dict[PredId, list[LinExpr]] = {p: [] for p in scc}
    for _, v in kept:
        vec = {}
        for p in sorted(scc):
            coeffs = {}
            for i in range(1, p.arity + 1):
                val = v.get(cs.coeff_var[(p, i)], Fraction(0))
                if val != 0:
                    coeffs["x%d" % i] = val
            vec[p] = LinExpr(coeffs)
        vectors.append(vec)
        for p in sorted(scc):
            if vec[p] not in mappings[p]:
                mappings[p].append(vec[p])
    return LevelMapping({p: tuple(es) for p, es in mappings.items()},
                        set(), tuple(vectors))


def audit_level_mapping(lm: LevelMapping, obligations: list[Obligation]) -> list[str]:
    """Check every extracted vector against every obligation; [] when clean."""
    problems = []
    for vec in lm.vectors:
        for ob in obligations:
            hp, hexprs = ob.head
            cp, cexprs = ob.call
            f_head = _apply(vec[hp], hexprs)
            f_call = _apply(vec[cp], cexprs)
            diff = f_head - f_call - LinExpr.constant(1)
            if not ob.context.entails((diff, GE)):
                problems.append("vector %s misses obligation %s -> %s"
                                % (vec, hp, cp))
    return problems


def _apply(form: LinExpr, arg_exprs: tuple[LinExpr, ...]) -> LinExpr:
    repl = {"x%d" % i: e for i, e in enumerate(arg_exprs, start=1)}
    return form.substitute(repl)


def render_level_mapping(lm: LevelMapping, preds) -> str:
    lines = []
    for p in sorted(preds):
        if p in lm.failed:
            body = "failed"
        else:
            exprs = lm.mappings.get(p, ())
            if not exprs:
                body = "0"
            elif len(exprs) == 1:
                body = render_linexpr(exprs[0])
            else:
                body = "min(%s)" % ", ".join(render_linexpr(e) for e in exprs)
        lines.append("%s: %s" % (p, body))
    return "\n".join(lines) + ("\n" if lines else "")

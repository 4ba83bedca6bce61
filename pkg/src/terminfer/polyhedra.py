"""Convex polyhedra over non-negative rationals, in constraint representation.

Values of this domain are finite conjunctions of linear equalities and
inequalities over named variables, interpreted over the non-negative orthant:
every variable carries an implicit `v >= 0`.  All arithmetic is exact
(fractions.Fraction); no floating point anywhere.

Operations: meet, projection (exact existential elimination by equality
substitution and Fourier-Motzkin), convex hull (via the lifted lambda
encoding projected back down), entailment (exact LP / Farkas certificates,
decided with a two-phase simplex), and the standard widening (keep the
constraints of the previous iterate that the new one still entails).

Design notes:
  * constraint-only representation; no generator (vertex/ray) form is
    maintained.  Vertex enumeration exists as a utility for small systems.
  * constraints are normalized to integer coefficients with gcd 1; an
    equality fixes its sign by the first non-zero coefficient.
  * zero-dimensional polyhedra are allowed: top is the satisfiable empty
    conjunction, bottom the canonical empty value.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm


class DimensionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Linear expressions


class LinExpr:
    """An affine expression: sum of coeff*var plus a constant, all exact."""

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs: dict[str, Fraction] | None = None,
                 const: Fraction | int = 0):
        self.coeffs: dict[str, Fraction] = {}
        if coeffs:
            for v, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    self.coeffs[v] = c
        self.const = Fraction(const)

    @classmethod
    def var(cls, name: str) -> "LinExpr":
        return cls({name: Fraction(1)})

    @classmethod
    def constant(cls, c) -> "LinExpr":
        return cls({}, c)

    def __add__(self, other: "LinExpr") -> "LinExpr":
        out = dict(self.coeffs)
        for v, c in other.coeffs.items():
            out[v] = out.get(v, Fraction(0)) + c
        return LinExpr(out, self.const + other.const)

    def __sub__(self, other: "LinExpr") -> "LinExpr":
        return self + other.scale(-1)

    def scale(self, k) -> "LinExpr":
        k = Fraction(k)
        return LinExpr({v: c * k for v, c in self.coeffs.items()}, self.const * k)

    def coeff(self, var: str) -> Fraction:
        return self.coeffs.get(var, Fraction(0))

    def variables(self) -> set[str]:
        return set(self.coeffs)

    def substitute(self, repl: dict[str, "LinExpr"]) -> "LinExpr":
        out = LinExpr({}, self.const)
        for v, c in self.coeffs.items():
            if v in repl:
                out = out + repl[v].scale(c)
            else:
                out = out + LinExpr({v: c})
        return out

    def evaluate(self, point: dict[str, Fraction]) -> Fraction:
        total = self.const
        for v, c in self.coeffs.items():
            total += c * Fraction(point.get(v, 0))
        return total

    def is_constant(self) -> bool:
        return not self.coeffs

    def _key(self):
        return (tuple(sorted(self.coeffs.items())), self.const)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinExpr) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return "LinExpr(%s)" % render_linexpr(self)


def render_linexpr(e: LinExpr) -> str:
    parts = []
    for v in sorted(e.coeffs):
        c = e.coeffs[v]
        term = v if abs(c) == 1 else "%s*%s" % (abs(c), v)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    if e.const != 0 or not parts:
        k = e.const
        if not parts:
            parts.append(str(k))
        else:
            parts.append(("+ " if k > 0 else "- ") + str(abs(k)))
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Constraints

EQ, GE = "=", ">="

_TRUE = "true"
_FALSE = "false"


class LinConstraint:
    """A normalized constraint `expr REL 0` with REL in {=, >=}.

    Coefficients and constant are integers with overall gcd 1; equalities fix
    their sign so the first variable (in name order) has a positive
    coefficient.
    """

    __slots__ = ("coeffs", "const", "rel")

    def __init__(self, coeffs: tuple[tuple[str, int], ...], const: int, rel: str):
        self.coeffs = coeffs
        self.const = const
        self.rel = rel

    @property
    def expr(self) -> LinExpr:
        return LinExpr({v: Fraction(c) for v, c in self.coeffs}, Fraction(self.const))

    def variables(self) -> set[str]:
        return {v for v, _ in self.coeffs}

    def _key(self):
        return (self.rel, self.coeffs, self.const)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinConstraint) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return "<%s>" % render_constraint(self)


def normalize_constraint(expr: LinExpr, rel: str):
    """Canonical LinConstraint, or the _TRUE/_FALSE sentinel for constants.

    `rel` may be '=', '>=' or '=<' (the latter is flipped).
    """
    if rel == "=<" or rel == "<=":
        expr, rel = expr.scale(-1), GE
    if rel not in (EQ, GE):
        raise ValueError("bad relation %r" % rel)
    if not expr.coeffs:
        if rel == EQ:
            return _TRUE if expr.const == 0 else _FALSE
        return _TRUE if expr.const >= 0 else _FALSE
    denom = lcm(*(c.denominator for c in expr.coeffs.values()),
                expr.const.denominator)
    items = sorted((v, int(c * denom)) for v, c in expr.coeffs.items())
    const = int(expr.const * denom)
    g = 0
    for _, c in items:
        g = gcd(g, abs(c))
    g = gcd(g, abs(const))
    if g > 1:
        items = [(v, c // g) for v, c in items]
        const //= g
    if rel == EQ and items[0][1] < 0:
        items = [(v, -c) for v, c in items]
        const = -const
    return LinConstraint(tuple(items), const, rel)


def render_constraint(c: LinConstraint) -> str:
    return "%s %s 0" % (render_linexpr(c.expr), c.rel)


# ---------------------------------------------------------------------------
# Exact two-phase simplex (Bland's rule) for LPs with x >= 0

OPT, UNBOUNDED, INFEASIBLE = "optimal", "unbounded", "infeasible"


def simplex_min(var_names: list[str], rows: list[tuple[LinExpr, str]],
                objective: LinExpr):
    """Minimize `objective` subject to `rows` (each `expr REL 0`) and x >= 0.

    Returns (status, value, point); value/point are None unless optimal.
    """
    n = len(var_names)
    index = {v: i for i, v in enumerate(var_names)}

    # Equality rows a.x = b with b >= 0; '>=' rows get a surplus column.
    surplus = sum(1 for _, rel in rows if rel == GE)
    m = len(rows)
    total = n + surplus + m  # + artificial per row
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    si = 0
    for expr, rel in rows:
        row = [Fraction(0)] * total
        for v, c in expr.coeffs.items():
            row[index[v]] = Fraction(c)
        rhs = -Fraction(expr.const)
        if rel == GE:
            row[n + si] = Fraction(-1)
            si += 1
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        A.append(row)
        b.append(rhs)
    art0 = n + surplus
    for i in range(m):
        A[i][art0 + i] = Fraction(1)
    basis = [art0 + i for i in range(m)]

    def pivot(r: int, c: int) -> None:
        piv = A[r][c]
        A[r] = [x / piv for x in A[r]]
        b[r] /= piv
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
                b[i] -= f * b[r]
        basis[r] = c

    def solve_phase(cost: list[Fraction], allowed: int) -> str:
        # reduced costs maintained implicitly: z_j - c_j via basis rows
        while True:
            # compute reduced costs for candidate columns (Bland: first negative)
            y = [cost[basis[i]] for i in range(m)]
            enter = -1
            for j in range(allowed):
                if j in basis:
                    continue
                red = cost[j] - sum(y[i] * A[i][j] for i in range(m))
                if red < 0:
                    enter = j
                    break
            if enter < 0:
                return OPT
            leave, best = -1, None
            for i in range(m):
                if A[i][enter] > 0:
                    ratio = b[i] / A[i][enter]
                    if best is None or ratio < best or (
                            ratio == best and basis[i] < basis[leave]):
                        best, leave = ratio, i
            if leave < 0:
                return UNBOUNDED
            pivot(leave, enter)

    if m:
        cost1 = [Fraction(0)] * total
        for j in range(art0, total):
            cost1[j] = Fraction(1)
        solve_phase(cost1, total)
        val1 = sum(cost1[basis[i]] * b[i] for i in range(m))
        if val1 > 0:
            return INFEASIBLE, None, None
        # drive leftover zero-valued artificials out of the basis
        for i in range(m):
            if basis[i] >= art0:
                for j in range(art0):
                    if A[i][j] != 0:
                        pivot(i, j)
                        break

    cost2 = [Fraction(0)] * total
    for v, c in objective.coeffs.items():
        cost2[index[v]] = Fraction(c)
    status = solve_phase(cost2, art0) if m else (
        OPT if all(c >= 0 for c in objective.coeffs.values()) else UNBOUNDED)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    point = {v: Fraction(0) for v in var_names}
    for i in range(m):
        if basis[i] < n:
            point[var_names[basis[i]]] = b[i]
    value = objective.const + sum(
        Fraction(c) * point[v] for v, c in objective.coeffs.items())
    return OPT, value, point


# ---------------------------------------------------------------------------
# Polyhedra


class Polyhedron:
    """Immutable polyhedron; construct through `make`, `top` or `bottom`."""

    __slots__ = ("vars", "cons", "empty")

    def __init__(self, vars: tuple[str, ...], cons: tuple[LinConstraint, ...],
                 empty: bool):
        self.vars = vars
        self.cons = cons
        self.empty = empty

    # -- constructors --------------------------------------------------------

    @classmethod
    def top(cls, vars) -> "Polyhedron":
        return cls(tuple(vars), (), False)

    @classmethod
    def bottom(cls, vars) -> "Polyhedron":
        return cls(tuple(vars), (), True)

    @classmethod
    def make(cls, vars, raw: list[tuple[LinExpr, str]],
             minimize: bool = True) -> "Polyhedron":
        """Normalize, decide satisfiability, remove redundancy."""
        vars = tuple(vars)
        known = set(vars)
        cons: list[LinConstraint] = []
        for expr, rel in raw:
            extra = expr.variables() - known
            if extra:
                raise DimensionError("constraint mentions unknown variables %s"
                                     % sorted(extra))
            norm = normalize_constraint(expr, rel)
            if norm is _TRUE:
                continue
            if norm is _FALSE:
                return cls.bottom(vars)
            if norm not in cons:
                cons.append(norm)
        cons = _merge_equalities(cons)
        if not _satisfiable(list(vars), cons):
            return cls.bottom(vars)
        if minimize:
            cons = _drop_redundant(list(vars), cons)
        return cls(vars, tuple(sorted(cons, key=lambda c: c._key())), False)

    # -- predicates -----------------------------------------------------------

    def is_empty(self) -> bool:
        return self.empty

    def is_top(self) -> bool:
        return not self.empty and not self.cons

    def entails(self, c: LinConstraint | tuple[LinExpr, str]) -> bool:
        """True iff every rational point of the polyhedron satisfies c."""
        if self.empty:
            return True
        if isinstance(c, tuple):
            norm = normalize_constraint(*c)
        else:
            norm = c
        if norm is _TRUE:
            return True
        if norm is _FALSE:
            return False
        extra = norm.variables() - set(self.vars)
        if extra:
            raise DimensionError("constraint over foreign variables %s" % sorted(extra))
        return _entails(list(self.vars), list(self.cons), norm)

    def entails_all(self, other: "Polyhedron") -> bool:
        if self.empty:
            return True
        if other.empty:
            return False
        return all(self.entails(c) for c in other.cons)

    def equals(self, other: "Polyhedron") -> bool:
        if set(self.vars) != set(other.vars):
            return False
        if self.empty or other.empty:
            return self.empty == other.empty
        if self.cons == other.cons and self.vars == other.vars:
            return True
        return self.entails_all(other) and other.entails_all(self)

    def contains_point(self, point: dict[str, Fraction]) -> bool:
        if self.empty:
            return False
        if any(Fraction(point.get(v, 0)) < 0 for v in self.vars):
            return False
        for c in self.cons:
            val = c.expr.evaluate(point)
            if c.rel == EQ and val != 0:
                return False
            if c.rel == GE and val < 0:
                return False
        return True

    # -- lattice operations ----------------------------------------------------

    def meet(self, other: "Polyhedron") -> "Polyhedron":
        if set(self.vars) != set(other.vars):
            raise DimensionError("meet of polyhedra over different spaces")
        if self.empty or other.empty:
            return Polyhedron.bottom(self.vars)
        raw = [(c.expr, c.rel) for c in self.cons + other.cons]
        return Polyhedron.make(self.vars, raw)

    def hull(self, other: "Polyhedron") -> "Polyhedron":
        """Smallest polyhedron containing both (closed convex hull of the union)."""
        if set(self.vars) != set(other.vars):
            raise DimensionError("hull of polyhedra over different spaces")
        if self.empty:
            return other
        if other.empty:
            return self
        if self.entails_all(other):  # self inside other
            return other
        if other.entails_all(self):
            return self
        xs = list(self.vars)
        y1 = {v: "$1" + v for v in xs}
        y2 = {v: "$2" + v for v in xs}
        l1, l2 = "$l1", "$l2"
        raw: list[tuple[LinExpr, str]] = []
        for c in self.cons:
            e = LinExpr({y1[v]: Fraction(k) for v, k in c.coeffs},
                        0) + LinExpr({l1: Fraction(c.const)})
            raw.append((e, c.rel))
        for c in other.cons:
            e = LinExpr({y2[v]: Fraction(k) for v, k in c.coeffs},
                        0) + LinExpr({l2: Fraction(c.const)})
            raw.append((e, c.rel))
        for v in xs:
            raw.append((LinExpr.var(v) - LinExpr.var(y1[v]) - LinExpr.var(y2[v]), EQ))
        raw.append((LinExpr.var(l1) + LinExpr.var(l2) - LinExpr.constant(1), EQ))
        allvars = xs + [y1[v] for v in xs] + [y2[v] for v in xs] + [l1, l2]
        lifted = Polyhedron.make(allvars, raw, minimize=False)
        return lifted.project(xs)

    def project(self, keep) -> "Polyhedron":
        """Shadow on `keep`: exact existential elimination of the rest."""
        keep = list(keep)
        missing = set(keep) - set(self.vars)
        if missing:
            raise DimensionError("cannot keep unknown variables %s" % sorted(missing))
        new_vars = tuple(v for v in self.vars if v in set(keep))
        if self.empty:
            return Polyhedron.bottom(new_vars)
        cons = list(self.cons)
        for v in self._elimination_order(set(keep)):
            cons = _eliminate(cons, v)
            if cons is None:
                return Polyhedron.bottom(new_vars)
        return Polyhedron.make(new_vars, [(c.expr, c.rel) for c in cons])

    def _elimination_order(self, keep: set[str]) -> list[str]:
        # cheap heuristic: variables in some equality first, then the rest
        out = [v for v in self.vars if v not in keep]
        eq_vars = set()
        for c in self.cons:
            if c.rel == EQ:
                eq_vars |= c.variables()
        out.sort(key=lambda v: (v not in eq_vars, v))
        return out

    def widen(self, other: "Polyhedron") -> "Polyhedron":
        """Standard widening: constraints of self still entailed by other.

        Callers guarantee self is entailed by other (an ascending chain).
        Equalities are split into two inequalities before filtering, so a
        stable direction of an equality survives on its own.
        """
        if self.empty:
            return other
        if other.empty:
            return other
        raw: list[tuple[LinExpr, str]] = []
        for c in self.cons:
            if c.rel == EQ:
                halves = [(c.expr, GE), (c.expr.scale(-1), GE)]
            else:
                halves = [(c.expr, GE)]
            for expr, rel in halves:
                if other.entails((expr, rel)):
                    raw.append((expr, rel))
        return Polyhedron.make(self.vars, raw)

    # -- renaming / substitution ------------------------------------------------

    def rename(self, mapping: dict[str, str]) -> "Polyhedron":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise DimensionError("renaming collapses variables")
        cons = tuple(
            LinConstraint(tuple(sorted((mapping.get(v, v), k) for v, k in c.coeffs)),
                          c.const, c.rel)
            for c in self.cons)
        return Polyhedron(new_vars, cons, self.empty)

    def instantiated(self, repl: dict[str, LinExpr]) -> list[tuple[LinExpr, str]]:
        """Constraints with variables replaced by expressions (raw form)."""
        return [(c.expr.substitute(repl), c.rel) for c in self.cons]

    def __repr__(self) -> str:
        if self.empty:
            return "Polyhedron<empty %s>" % (self.vars,)
        if not self.cons:
            return "Polyhedron<top %s>" % (self.vars,)
        return "Polyhedron<%s>" % "; ".join(render_constraint(c) for c in self.cons)


def _copy_onto(p: Polyhedron, vars: tuple[str, ...]) -> Polyhedron:
    return Polyhedron(vars, p.cons, p.empty)


def _merge_equalities(cons: list[LinConstraint]) -> list[LinConstraint]:
    """Replace complementary inequality pairs e>=0, -e>=0 by e=0."""
    out: list[LinConstraint] = []
    ges = {c._key(): c for c in cons if c.rel == GE}
    seen = set()
    for c in cons:
        if c in seen:
            continue
        if c.rel == GE:
            neg = normalize_constraint(c.expr.scale(-1), GE)
            if isinstance(neg, LinConstraint) and neg._key() in ges:
                eq = normalize_constraint(c.expr, EQ)
                if isinstance(eq, LinConstraint) and eq not in out:
                    out.append(eq)
                seen.add(c)
                seen.add(ges[neg._key()])
                continue
        if c not in out:
            out.append(c)
        seen.add(c)
    return out


def _satisfiable(vars: list[str], cons: list[LinConstraint]) -> bool:
    if not cons:
        return True
    status, _, _ = simplex_min(vars, [(c.expr, c.rel) for c in cons], LinExpr())
    return status != INFEASIBLE


def _entails(vars: list[str], cons: list[LinConstraint], c: LinConstraint) -> bool:
    rows = [(k.expr, k.rel) for k in cons]
    expr = c.expr
    # e = s + k with s the variable part: entailed (>=) iff min s over P >= -k
    status, val, _ = simplex_min(vars, rows, LinExpr(dict(expr.coeffs)))
    if status == UNBOUNDED:
        return False
    if status == INFEASIBLE:
        return True
    if val + expr.const < 0:
        return False
    if c.rel == EQ:
        # additionally max s <= -k, i.e. min(-s) >= k
        status2, val2, _ = simplex_min(
            vars, rows, LinExpr({v: -k for v, k in expr.coeffs.items()}))
        if status2 == UNBOUNDED:
            return False
        return val2 - expr.const >= 0
    return True


def _drop_redundant(vars: list[str], cons: list[LinConstraint]) -> list[LinConstraint]:
    kept = list(cons)
    i = 0
    while i < len(kept):
        candidate = kept[i]
        rest = kept[:i] + kept[i + 1:]
        if _entails(vars, rest, candidate):
            kept = rest
        else:
            i += 1
    return kept


def _eliminate(cons: list[LinConstraint], v: str):
    """Eliminate v from the system; None means unsatisfiable surfaced.

    Every variable is implicitly >= 0, so `v >= 0` takes part as a lower
    bound, and an equality substitution re-adds the solved expression as a
    `>= 0` constraint.
    """
    for c in cons:
        if c.rel == EQ and v in c.variables():
            a = dict(c.coeffs)[v]
            rest = LinExpr({w: Fraction(k) for w, k in c.coeffs if w != v},
                           Fraction(c.const))
            solved = rest.scale(Fraction(-1, a))  # v = solved
            out: list[LinConstraint] = []
            for d in cons:
                if d is c:
                    continue
                cv = dict(d.coeffs).get(v, 0)
                if cv == 0:
                    out.append(d)
                    continue
                norm = normalize_constraint(d.expr.substitute({v: solved}), d.rel)
                if norm is _FALSE:
                    return None
                if norm is not _TRUE and norm not in out:
                    out.append(norm)
            norm = normalize_constraint(solved, GE)  # implicit v >= 0
            if norm is _FALSE:
                return None
            if norm is not _TRUE and norm not in out:
                out.append(norm)
            return out

    lowers: list[tuple[Fraction, LinExpr]] = [(Fraction(1), LinExpr.var(v))]
    uppers: list[tuple[Fraction, LinExpr]] = []
    out = []
    for c in cons:
        a = Fraction(dict(c.coeffs).get(v, 0))
        if a == 0:
            out.append(c)
        elif a > 0:
            lowers.append((a, c.expr))
        else:
            uppers.append((a, c.expr))
    for a_lo, e_lo in lowers:
        for a_up, e_up in uppers:
            combined = e_lo.scale(-a_up) + e_up.scale(a_lo)
            norm = normalize_constraint(combined, GE)
            if norm is _FALSE:
                return None
            if norm is not _TRUE and norm not in out:
                out.append(norm)
    return out


# ---------------------------------------------------------------------------
# Vertex enumeration (small systems only: coefficient spaces, test oracles)


def _solve_square(rows: list[LinExpr], vars: list[str]):
    """Unique solution of {e = 0 for e in rows}, or None."""
    n = len(vars)
    idx = {v: i for i, v in enumerate(vars)}
    mat = []
    for e in rows:
        row = [Fraction(0)] * (n + 1)
        for v, c in e.coeffs.items():
            row[idx[v]] = Fraction(c)
        row[n] = Fraction(e.const)
        mat.append(row)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        sel = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if sel is None:
            return None  # underdetermined in this column
        mat[r], mat[sel] = mat[sel], mat[r]
        piv = mat[r][col]
        mat[r] = [x / piv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    if r < n:
        return None
    for i in range(r, len(mat)):
        if mat[i][n] != 0:
            return None  # inconsistent
    return {vars[pivots[i]]: -mat[i][n] for i in range(n)}


def enumerate_vertices(p: Polyhedron, tick=None) -> list[dict[str, Fraction]]:
    """All vertices of p (p pointed since it lives in the orthant)."""
    if p.empty:
        return []
    vars = list(p.vars)
    n = len(vars)
    if n == 0:
        return [{}]
    eqs = [c.expr for c in p.cons if c.rel == EQ]
    ineqs = [c.expr for c in p.cons if c.rel == GE]
    ineqs += [LinExpr.var(v) for v in vars]  # implicit nonnegativity
    rank = _matrix_rank(eqs, vars)
    need = n - rank
    verts: list[dict[str, Fraction]] = []
    seen = set()
    for combo in itertools.combinations(range(len(ineqs)), need):
        if tick is not None:
            tick()
        rows = eqs + [ineqs[i] for i in combo]
        point = _solve_square(rows, vars)
        if point is None:
            continue
        if not p.contains_point(point):
            continue
        key = tuple(point[v] for v in vars)
        if key not in seen:
            seen.add(key)
            verts.append(point)
    return verts


def _matrix_rank(exprs: list[LinExpr], vars: list[str]) -> int:
    idx = {v: i for i, v in enumerate(vars)}
    rows = []
    for e in exprs:
        row = [Fraction(0)] * len(vars)
        for v, c in e.coeffs.items():
            row[idx[v]] = Fraction(c)
        rows.append(row)
    rank = 0
    for col in range(len(vars)):
        sel = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        piv = rows[rank][col]
        rows[rank] = [x / piv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank

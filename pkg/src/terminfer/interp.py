"""Depth-bounded LD-resolution interpreter.

Explores the derivation tree of a query under the leftmost selection rule
with textual clause order, up to a resolution-step depth per branch, and
reports whether the whole tree was exhausted.  This is the executable ground
truth the test suite samples against: a universally terminating query is one
whose tree the interpreter exhausts.

Unification performs the occurs-check (analyzed programs are assumed not to
build infinite terms, so this only rejects pathological queries).  Cut is
supported so that cut-erasure in the frontend can be checked against real
cut semantics; arithmetic instantiation or type errors terminate the branch
without a solution, matching the convention that errors count as
termination.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import Atom, Const, PredId, Program, Struct, Term, Var

CUT = PredId("!", 0)


class _ArithError(Exception):
    pass


@dataclass
class InterpResult:
    exhausted: bool
    solutions: int
    depth_hit: bool
    answers: list[tuple[Term, ...]]

    @property
    def outcome(self) -> str:
        if self.depth_hit:
            return "depth-limit-hit"
        return "failure" if self.solutions == 0 else "all-solutions-exhausted"


def bounded_interpreter(program: Program, query, depth: int,
                        max_solutions: int | None = None) -> InterpResult:
    """Run `query` (an Atom or list of Atoms) to at most `depth` resolution
    steps per branch; collects the answer instances of the query arguments."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    goals = [query] if isinstance(query, Atom) else list(query)

    bindings: dict[str, Term] = {}
    trail: list[str] = []
    fresh = [0]

    def walk(t: Term) -> Term:
        while isinstance(t, Var):
            b = bindings.get(t.name)
            if b is None:
                return t
            t = b
        return t

    def resolve(t: Term) -> Term:
        t = walk(t)
        if isinstance(t, Struct):
            return Struct(t.functor, tuple(resolve(a) for a in t.args))
        return t

    def occurs(name: str, t: Term) -> bool:
        t = walk(t)
        if isinstance(t, Var):
            return t.name == name
        if isinstance(t, Struct):
            return any(occurs(name, a) for a in t.args)
        return False

    def bind(name: str, t: Term) -> None:
        bindings[name] = t
        trail.append(name)

    def unify(a: Term, b: Term) -> bool:
        a, b = walk(a), walk(b)
        if isinstance(a, Var):
            if isinstance(b, Var) and b.name == a.name:
                return True
            if occurs(a.name, b):
                return False
            bind(a.name, b)
            return True
        if isinstance(b, Var):
            if occurs(b.name, a):
                return False
            bind(b.name, a)
            return True
        if isinstance(a, Const) and isinstance(b, Const):
            return a.name == b.name
        if isinstance(a, Struct) and isinstance(b, Struct):
            if a.functor != b.functor or len(a.args) != len(b.args):
                return False
            return all(unify(x, y) for x, y in zip(a.args, b.args))
        return False

    def undo(mark: int) -> None:
        while len(trail) > mark:
            del bindings[trail.pop()]

    def rename(t: Term, mapping: dict[str, Var]) -> Term:
        if isinstance(t, Var):
            got = mapping.get(t.name)
            if got is None:
                fresh[0] += 1
                got = Var("_R%d" % fresh[0])
                mapping[t.name] = got
            return got
        if isinstance(t, Struct):
            return Struct(t.functor, tuple(rename(a, mapping) for a in t.args))
        return t

    # goal list as cons cells: (atom, barrier, rest) or None
    def push_all(atoms, barrier, rest):
        for a in reversed(atoms):
            rest = (a, barrier, rest)
        return rest

    query_terms = tuple(Struct("q", a.args) if a.args else Const("q") for a in goals)
    start = push_all(goals, 0, None)

    solutions = 0
    depth_hit = False
    complete = True
    answers: list[tuple[Term, ...]] = []
    # choicepoint: [goals, clauses, next_idx, trail_mark, depth, call_atom, barrier]
    cps: list[list] = []
    state = (start, 0)
    failed = False

    while True:
        if failed:
            while cps and cps[-1][2] >= len(cps[-1][1]):
                cps.pop()
            if not cps:
                break
            cp = cps[-1]
            undo(cp[3])
            clause = cp[1][cp[2]]
            cp[2] += 1
            mapping: dict[str, Var] = {}
            head = rename_atom(clause.head, rename, mapping)
            if not unify_args(head, cp[5], unify):
                continue
            body = [rename_atom(a, rename, mapping) for a in clause.body]
            barrier = cp[6]
            state = (push_all(body, barrier, cp[0]), cp[4] + 1)
            failed = False
            continue

        goals_list, d = state
        if goals_list is None:
            solutions += 1
            answers.append(tuple(resolve(t) for t in query_terms))
            if max_solutions is not None and solutions >= max_solutions:
                complete = False
                break
            failed = True
            continue
        goal, barrier, rest = goals_list
        if goal.pred == CUT:
            del cps[barrier:]
            state = (rest, d)
            continue
        if d >= depth:
            depth_hit = True
            failed = True
            continue
        handler = _BUILTINS.get(goal.pred)
        if handler is not None:
            ok = handler(goal, walk, unify, resolve, bindings, trail, undo)
            if ok:
                state = (rest, d + 1)
            else:
                failed = True
            continue
        clauses = program.clauses.get(goal.pred)
        if not clauses:
            failed = True  # undefined predicates fail
            continue
        cps.append([rest, clauses, 0, len(trail), d, goal, len(cps)])
        failed = True  # route through the retry path to pick clause 0

    return InterpResult(exhausted=complete and not depth_hit,
                        solutions=solutions, depth_hit=depth_hit,
                        answers=answers)


def rename_atom(a: Atom, rename, mapping) -> Atom:
    return Atom(a.pred, tuple(rename(t, mapping) for t in a.args))


def unify_args(head: Atom, goal: Atom, unify) -> bool:
    return all(unify(h, g) for h, g in zip(head.args, goal.args))


# ---------------------------------------------------------------------------
# Builtin execution


def _eval_arith(t: Term, walk) -> int:
    t = walk(t)
    if isinstance(t, Const):
        if isinstance(t.name, int):
            return t.name
        raise _ArithError(t.name)
    if isinstance(t, Var):
        raise _ArithError("unbound")
    assert isinstance(t, Struct)
    f, args = t.functor, [(_eval_arith(a, walk)) for a in t.args]
    if f == "+" and len(args) == 2:
        return args[0] + args[1]
    if f == "-" and len(args) == 2:
        return args[0] - args[1]
    if f == "-" and len(args) == 1:
        return -args[0]
    if f == "*" and len(args) == 2:
        return args[0] * args[1]
    if f == "//" and len(args) == 2:
        if args[1] == 0:
            raise _ArithError("zero divisor")
        return args[0] // args[1]
    if f == "mod" and len(args) == 2:
        if args[1] == 0:
            raise _ArithError("zero divisor")
        return args[0] % args[1]
    if f == ">>" and len(args) == 2:
        return args[0] >> args[1]
    if f == "<<" and len(args) == 2:
        return args[0] << args[1]
    if f == "min" and len(args) == 2:
        return min(args)
    if f == "max" and len(args) == 2:
        return max(args)
    if f == "abs" and len(args) == 1:
        return abs(args[0])
    raise _ArithError("unknown function %s/%d" % (f, len(args)))


def _term_order_key(t: Term, walk):
    t = walk(t)
    if isinstance(t, Var):
        return (0, t.name)
    if isinstance(t, Const) and isinstance(t.name, int):
        return (1, t.name)
    if isinstance(t, Const):
        return (2, t.name)
    assert isinstance(t, Struct)
    return (3, len(t.args), t.functor,
            tuple(_term_order_key(a, walk) for a in t.args))


def _builtin_true(goal, walk, unify, resolve, bindings, trail, undo):
    return True


def _builtin_fail(goal, walk, unify, resolve, bindings, trail, undo):
    return False


def _builtin_unify(goal, walk, unify, resolve, bindings, trail, undo):
    return unify(goal.args[0], goal.args[1])


def _builtin_not_unify(goal, walk, unify, resolve, bindings, trail, undo):
    mark = len(trail)
    ok = unify(goal.args[0], goal.args[1])
    undo(mark)
    return not ok


def _builtin_struct_eq(goal, walk, unify, resolve, bindings, trail, undo):
    return resolve(goal.args[0]) == resolve(goal.args[1])


def _builtin_struct_ne(goal, walk, unify, resolve, bindings, trail, undo):
    return resolve(goal.args[0]) != resolve(goal.args[1])


def _builtin_is(goal, walk, unify, resolve, bindings, trail, undo):
    try:
        val = _eval_arith(goal.args[1], walk)
    except _ArithError:
        return False  # the branch simply ends; errors count as termination
    return unify(goal.args[0], Const(val))


def _arith_cmp(op):
    def run(goal, walk, unify, resolve, bindings, trail, undo):
        try:
            a = _eval_arith(goal.args[0], walk)
            b = _eval_arith(goal.args[1], walk)
        except _ArithError:
            return False
        return op(a, b)
    return run


def _order_cmp(op):
    def run(goal, walk, unify, resolve, bindings, trail, undo):
        return op(_term_order_key(resolve(goal.args[0]), walk),
                  _term_order_key(resolve(goal.args[1]), walk))
    return run


_BUILTINS = {
    PredId("true", 0): _builtin_true,
    PredId("fail", 0): _builtin_fail,
    PredId("false", 0): _builtin_fail,
    PredId("=", 2): _builtin_unify,
    PredId("\\=", 2): _builtin_not_unify,
    PredId("==", 2): _builtin_struct_eq,
    PredId("\\==", 2): _builtin_struct_ne,
    PredId("is", 2): _builtin_is,
    PredId("<", 2): _arith_cmp(lambda a, b: a < b),
    PredId(">", 2): _arith_cmp(lambda a, b: a > b),
    PredId("=<", 2): _arith_cmp(lambda a, b: a <= b),
    PredId(">=", 2): _arith_cmp(lambda a, b: a >= b),
    PredId("=:=", 2): _arith_cmp(lambda a, b: a == b),
    PredId("=\\=", 2): _arith_cmp(lambda a, b: a != b),
    PredId("@<", 2): _order_cmp(lambda a, b: a < b),
    PredId("@>", 2): _order_cmp(lambda a, b: a > b),
    PredId("@=<", 2): _order_cmp(lambda a, b: a <= b),
    PredId("@>=", 2): _order_cmp(lambda a, b: a >= b),
}

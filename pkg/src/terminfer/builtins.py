"""Builtin predicate abstractions and the import mechanism behind `-p`.

Each entry carries three facts about a predicate the analyzer will not see
clauses for: a polyhedron over the argument sizes of its computed answers, a
boolean groundness pattern of those answers, and the boolean condition under
which a call is guaranteed to terminate (arithmetic instantiation errors
count as termination, since the derivation ends).

Only a small documented set ships by default; anything else must be imported
from a table file.  A table file is a sequence of facts

    builtin(name/arity, num([C1, ..., Ck]), bool(F), pre(G)).

where each Ci is a linear constraint `a1*x1 + ... + aN*xN + k OP 0` with
integer coefficients and OP one of `=`, `=<`, `>=` (terms of the form `xJ`
and bare integers are also accepted, and the two sides of OP may be any
linear terms), and F, G are boolean formulas built from `*` (and), `+`
(or), `<->` (iff), `1`, `0` and the argument variables x1..xN.  Later
entries shadow earlier ones; entries shadow the default table.  Imported
predicates cannot be redefined by the analyzed program.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .boolfun import FALSE, TRUE, BoolFun
from .parser import FrontendError, read_clause_terms
from .polyhedra import EQ, GE, LinExpr, Polyhedron
from .terms import Const, PredId, Struct, Term

_ARGVAR = re.compile(r"^x([1-9][0-9]*)$")


@dataclass(frozen=True)
class BuiltinEntry:
    pred: PredId
    num_post: Polyhedron  # over x1..xN
    bool_post: BoolFun  # over x1..xN
    pre: BoolFun


@dataclass
class BuiltinTable:
    entries: dict[PredId, BuiltinEntry] = field(default_factory=dict)

    def defines(self, pred: PredId) -> bool:
        return pred in self.entries

    def entry(self, pred: PredId) -> BuiltinEntry:
        return self.entries[pred]

    def merged(self, other: "BuiltinTable") -> "BuiltinTable":
        out = dict(self.entries)
        out.update(other.entries)
        return BuiltinTable(out)


def _args(n: int) -> list[str]:
    return ["x%d" % i for i in range(1, n + 1)]


def _entry(name: str, arity: int, num_raw, bool_post: BoolFun,
           pre: BoolFun) -> BuiltinEntry:
    pred = PredId(name, arity)
    if num_raw is None:
        num = Polyhedron.top(_args(arity))
    elif num_raw == "bottom":
        num = Polyhedron.bottom(_args(arity))
    else:
        num = Polyhedron.make(_args(arity), num_raw)
    return BuiltinEntry(pred, num, bool_post, pre)


def default_table() -> BuiltinTable:
    x1, x2 = BoolFun.var("x1"), BoolFun.var("x2")
    eq_sizes = [(LinExpr.var("x1") - LinExpr.var("x2"), EQ)]
    entries = [
        _entry("=", 2, eq_sizes, x1.iff(x2), TRUE),
        _entry("==", 2, eq_sizes, x1.iff(x2), TRUE),
        _entry("\\=", 2, None, TRUE, TRUE),
        _entry("\\==", 2, None, TRUE, TRUE),
        _entry("is", 2, None, x1, TRUE),
        _entry("true", 0, None, TRUE, TRUE),
        _entry("fail", 0, "bottom", FALSE, TRUE),
        _entry("false", 0, "bottom", FALSE, TRUE),
        _entry("functor", 3, None, TRUE, TRUE),
        _entry("arg", 3, None, TRUE, TRUE),
    ]
    for cmp_name in ("<", ">", "=<", ">=", "=:=", "=\\="):
        entries.append(_entry(cmp_name, 2, None, x1.conj(x2), TRUE))
    for cmp_name in ("@<", "@>", "@=<", "@>="):
        entries.append(_entry(cmp_name, 2, None, TRUE, TRUE))
    return BuiltinTable({e.pred: e for e in entries})


# ---------------------------------------------------------------------------
# Table files


def _linearize(t: Term, arity: int) -> LinExpr:
    if isinstance(t, Const):
        if isinstance(t.name, int):
            return LinExpr.constant(t.name)
        m = _ARGVAR.match(t.name)
        if m and int(m.group(1)) <= arity:
            return LinExpr.var(t.name)
        raise FrontendError("ill-formed constraint: unknown symbol %s" % t)
    if isinstance(t, Struct):
        if t.functor == "+" and len(t.args) == 2:
            return _linearize(t.args[0], arity) + _linearize(t.args[1], arity)
        if t.functor == "-" and len(t.args) == 2:
            return _linearize(t.args[0], arity) - _linearize(t.args[1], arity)
        if t.functor == "-" and len(t.args) == 1:
            return _linearize(t.args[0], arity).scale(-1)
        if t.functor == "*" and len(t.args) == 2:
            lhs = _linearize(t.args[0], arity)
            rhs = _linearize(t.args[1], arity)
            if lhs.is_constant():
                return rhs.scale(lhs.const)
            if rhs.is_constant():
                return lhs.scale(rhs.const)
            raise FrontendError("ill-formed constraint: nonlinear product in %s" % t)
    raise FrontendError("ill-formed constraint term: %s" % t)


def parse_constraint(t: Term, arity: int) -> tuple[LinExpr, str]:
    if isinstance(t, Struct) and len(t.args) == 2 and t.functor in ("=", "=<", ">="):
        expr = _linearize(t.args[0], arity) - _linearize(t.args[1], arity)
        rel = EQ if t.functor == "=" else (GE if t.functor == ">=" else "=<")
        return expr, rel
    raise FrontendError("ill-formed constraint (expected =, =< or >=): %s" % t)


def parse_formula(t: Term, arity: int) -> BoolFun:
    if isinstance(t, Const):
        if t.name == 1:
            return TRUE
        if t.name == 0:
            return FALSE
        if isinstance(t.name, str):
            m = _ARGVAR.match(t.name)
            if m and int(m.group(1)) <= arity:
                return BoolFun.var(t.name)
        raise FrontendError("ill-formed boolean formula: unknown symbol %s" % t)
    if isinstance(t, Struct) and len(t.args) == 2:
        if t.functor == "*":
            return parse_formula(t.args[0], arity).conj(parse_formula(t.args[1], arity))
        if t.functor == "+":
            return parse_formula(t.args[0], arity).disj(parse_formula(t.args[1], arity))
        if t.functor == "<->":
            return parse_formula(t.args[0], arity).iff(parse_formula(t.args[1], arity))
    raise FrontendError("ill-formed boolean formula: %s" % t)


def _parse_entry(raw: Term) -> BuiltinEntry:
    if not (isinstance(raw, Struct) and raw.functor == "builtin"
            and len(raw.args) == 4):
        raise FrontendError("expected builtin(name/arity, num(...), bool(...), "
                            "pre(...)), got: %s" % raw)
    spec, num_t, bool_t, pre_t = raw.args
    if not (isinstance(spec, Struct) and spec.functor == "/" and len(spec.args) == 2
            and isinstance(spec.args[0], Const) and isinstance(spec.args[0].name, str)
            and isinstance(spec.args[1], Const)
            and isinstance(spec.args[1].name, int)):
        raise FrontendError("bad predicate indicator: %s" % spec)
    name = spec.args[0].name
    arity = spec.args[1].name
    if arity < 0:
        raise FrontendError("negative arity in %s" % spec)

    if not (isinstance(num_t, Struct) and num_t.functor == "num"
            and len(num_t.args) == 1):
        raise FrontendError("expected num([...]) in %s" % raw)
    constraints = []
    lst = num_t.args[0]
    while isinstance(lst, Struct) and lst.functor == "." and len(lst.args) == 2:
        constraints.append(parse_constraint(lst.args[0], arity))
        lst = lst.args[1]
    if not (isinstance(lst, Const) and lst.name == "[]"):
        raise FrontendError("num(...) must carry a proper list in %s" % raw)

    if not (isinstance(bool_t, Struct) and bool_t.functor == "bool"
            and len(bool_t.args) == 1):
        raise FrontendError("expected bool(F) in %s" % raw)
    bool_post = parse_formula(bool_t.args[0], arity)
    if not bool_post.is_positive():
        raise FrontendError("non-positive boolean post for %s/%d" % (name, arity))

    if not (isinstance(pre_t, Struct) and pre_t.functor == "pre"
            and len(pre_t.args) == 1):
        raise FrontendError("expected pre(G) in %s" % raw)
    pre = parse_formula(pre_t.args[0], arity)

    num = Polyhedron.make(_args(arity), constraints)
    return BuiltinEntry(PredId(name, arity), num, bool_post, pre)


def parse_builtin_table(text: str, base: BuiltinTable | None = None) -> BuiltinTable:
    table = base if base is not None else default_table()
    new = {}
    for raw in read_clause_terms(text):
        entry = _parse_entry(raw)
        new[entry.pred] = entry  # later entries shadow earlier ones
    return table.merged(BuiltinTable(new))


def load_builtin_table(path, base: BuiltinTable | None = None) -> BuiltinTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_builtin_table(fh.read(), base)

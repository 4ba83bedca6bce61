"""Herbrand-level data model: terms, atoms, clauses, programs.

Terms are finite trees (the analyzer assumes occurs-check / NSTO execution,
so no rational trees ever arise).  All values are immutable and hashable;
structural equality is term equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Term:
    """Base class for terms; use Var, Const or Struct."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    name: str
    __slots__ = ("name",)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const(Term):
    """An atom or an integer (arity 0)."""

    name: str | int
    __slots__ = ("name",)

    def __str__(self) -> str:
        if isinstance(self.name, int):
            return str(self.name)
        return _quote_atom(self.name)


@dataclass(frozen=True)
class Struct(Term):
    """Compound term; arity >= 1 by construction."""

    functor: str
    args: tuple[Term, ...]
    __slots__ = ("functor", "args")

    def __post_init__(self) -> None:
        if not self.args:
            raise ValueError("compound term needs at least one argument")

    def __str__(self) -> str:
        if self.functor == "." and len(self.args) == 2:
            return _format_list(self)
        return "%s(%s)" % (_quote_atom(self.functor), ", ".join(map(str, self.args)))


_PLAIN_ATOM_FIRST = "abcdefghijklmnopqrstuvwxyz"
_SYMBOL_CHARS = set("+-*/\\^<>=~:.?@#&$")


def _quote_atom(name: str) -> str:
    if name and name[0] in _PLAIN_ATOM_FIRST and all(c.isalnum() or c == "_" for c in name):
        return name
    if name and all(c in _SYMBOL_CHARS for c in name):
        return name
    if name in ("[]", "!", ";", "{}"):
        return name
    return "'%s'" % name.replace("\\", "\\\\").replace("'", "\\'")


def _format_list(t: Term) -> str:
    items: list[str] = []
    while isinstance(t, Struct) and t.functor == "." and len(t.args) == 2:
        items.append(str(t.args[0]))
        t = t.args[1]
    if isinstance(t, Const) and t.name == "[]":
        return "[%s]" % ", ".join(items)
    return "[%s|%s]" % (", ".join(items), t)


def cons(head: Term, tail: Term) -> Struct:
    return Struct(".", (head, tail))


NIL = Const("[]")


def make_list(items: list[Term], tail: Term = NIL) -> Term:
    out = tail
    for item in reversed(items):
        out = cons(item, out)
    return out


def term_vars(t: Term, acc: list[str] | None = None) -> list[str]:
    """Variable names of t in first-occurrence order."""
    if acc is None:
        acc = []
    if isinstance(t, Var):
        if t.name not in acc:
            acc.append(t.name)
    elif isinstance(t, Struct):
        for a in t.args:
            term_vars(a, acc)
    return acc


def is_ground(t: Term) -> bool:
    if isinstance(t, Var):
        return False
    if isinstance(t, Struct):
        return all(is_ground(a) for a in t.args)
    return True


@dataclass(frozen=True, order=True)
class PredId:
    """Key of a predicate: (name, arity) pairs are unique in a program."""

    name: str
    arity: int
    __slots__ = ("name", "arity")

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ValueError("negative arity")

    def __str__(self) -> str:
        return "%s/%d" % (self.name, self.arity)


@dataclass(frozen=True)
class Atom:
    """A predicate applied to argument terms."""

    pred: PredId
    args: tuple[Term, ...]
    __slots__ = ("pred", "args")

    def __post_init__(self) -> None:
        if len(self.args) != self.pred.arity:
            raise ValueError("arity mismatch for %s" % self.pred)

    def __str__(self) -> str:
        if not self.args:
            return _quote_atom(self.pred.name)
        infix = _INFIX_PRINTABLE.get((self.pred.name, self.pred.arity))
        if infix:
            return "%s %s %s" % (self.args[0], self.pred.name, self.args[1])
        return "%s(%s)" % (_quote_atom(self.pred.name), ", ".join(map(str, self.args)))


# Binary builtins that read better infix; round-trips through the parser.
_INFIX_PRINTABLE = {
    (n, 2): True
    for n in ("=", "\\=", "==", "\\==", "is", "<", ">", "=<", ">=",
              "=:=", "=\\=", "@<", "@>", "@=<", "@>=")
}


def atom(name: str, *args: Term) -> Atom:
    return Atom(PredId(name, len(args)), tuple(args))


@dataclass(frozen=True)
class Clause:
    """head :- body.  Normalized: the body is a flat conjunction of atoms."""

    head: Atom
    body: tuple[Atom, ...]
    __slots__ = ("head", "body")

    def __str__(self) -> str:
        if not self.body:
            return "%s." % self.head
        return "%s :-\n    %s." % (self.head, ",\n    ".join(map(str, self.body)))

    def variables(self) -> list[str]:
        acc: list[str] = []
        for t in self.head.args:
            term_vars(t, acc)
        for a in self.body:
            for t in a.args:
                term_vars(t, acc)
        return acc


@dataclass
class Program:
    """Normalized clause database plus the builtin table in force.

    `clauses` preserves textual clause order per predicate; predicates appear
    in order of first definition.  Body atoms reference either a key of
    `clauses`, a builtin, or an undefined predicate (assumed to fail).
    """

    clauses: dict[PredId, list[Clause]]
    builtins: "object" = None  # BuiltinTable; untyped here to avoid an import cycle
    aux_preds: set[PredId] = field(default_factory=set)

    def predicates(self) -> list[PredId]:
        return list(self.clauses.keys())

    def user_predicates(self) -> list[PredId]:
        """Predicates written by the user (auxiliaries from normalization excluded)."""
        return [p for p in self.clauses if p not in self.aux_preds]

    def pretty(self) -> str:
        chunks = []
        for preds in self.clauses.values():
            for c in preds:
                chunks.append(str(c))
        return "\n".join(chunks) + ("\n" if chunks else "")

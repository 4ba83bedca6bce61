"""Reader for a fixed ISO-style subset of Prolog.

Supported syntax: facts and rules, lists, integers, quoted atoms, a fixed
operator table (no user op/3 directives), comments.  Control constructs in
bodies (`,`, `;`, `->`, `\\+`, `call/1`, `!`) are compiled away during
normalization, so every clause stored in the database has a flat conjunction
of plain atoms as its body:

  * `(A ; B)` and `(C -> T ; E)` become a fresh auxiliary predicate with one
    clause per branch (`C -> T` contributes the branch `(C, T)`);
  * `\\+ G` becomes an auxiliary defined by `aux :- G, false.` and `aux.`;
  * `!` is erased: removing a cut only adds derivations, so termination of
    the cut-free program implies termination of the original;
  * a bare `C -> T` is inlined as `(C, T)`.

Directives are rejected; so are meta-calls whose goal is not statically
known (variable `call/1`, `call/N`, assert/retract).
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import (Atom, Clause, Const, PredId, Program, Struct, Term, Var,
                    term_vars)


class FrontendError(Exception):
    """Any error that makes the source program unusable."""


class ParseError(FrontendError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__("%s (line %d, column %d)" % (message, line, col))
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Tokenizer


@dataclass
class Token:
    kind: str  # atom | var | int | punct | end | eof
    value: object
    line: int
    col: int
    functor_paren: bool = False  # atom immediately followed by '('


_SYMBOL_CHARS = set("+-*/\\^<>=~:.?@#&$")
_SOLO = {"(": "(", ")": ")", "[": "[", "]": "]", "{": "{", "}": "}",
         ",": ",", "|": "|"}


def tokenize(text: str) -> list[Token]:
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def err(msg: str) -> ParseError:
        return ParseError(msg, line, col)

    def advance(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c in " \t\r\n":
            advance(1)
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if text.startswith("/*", i):
            end = text.find("*/", i + 2)
            if end < 0:
                raise err("unterminated block comment")
            advance(end + 2 - i)
            continue
        tl, tc = line, col
        if c in _SOLO:
            toks.append(Token("punct", c, tl, tc))
            advance(1)
            continue
        if c == "!" or c == ";":
            toks.append(_atom_token(text, i, n, c, tl, tc))
            advance(1)
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("int", int(text[i:j]), tl, tc))
            advance(j - i)
            continue
        if c.isupper() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("var", text[i:j], tl, tc))
            advance(j - i)
            continue
        if c.islower():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            advance(j - i)
            toks.append(_atom_token(text, i, n, name, tl, tc))
            continue
        if c == "'":
            j = i + 1
            buf: list[str] = []
            while True:
                if j >= n:
                    raise err("unterminated quoted atom")
                if text[j] == "'":
                    if j + 1 < n and text[j + 1] == "'":
                        buf.append("'")
                        j += 2
                        continue
                    j += 1
                    break
                if text[j] == "\\" and j + 1 < n:
                    esc = text[j + 1]
                    mapped = {"n": "\n", "t": "\t", "\\": "\\", "'": "'"}.get(esc)
                    if mapped is None:
                        raise err("unknown escape \\%s in quoted atom" % esc)
                    buf.append(mapped)
                    j += 2
                    continue
                buf.append(text[j])
                j += 1
            advance(j - i)
            toks.append(_atom_token(text, i, n, "".join(buf), tl, tc))
            continue
        if c in _SYMBOL_CHARS:
            j = i
            while j < n and text[j] in _SYMBOL_CHARS:
                j += 1
            name = text[i:j]
            # A lone '.' followed by layout or EOF ends a clause.
            if name == "." and (j >= n or text[j] in " \t\r\n%"):
                toks.append(Token("end", ".", tl, tc))
                advance(1)
                continue
            advance(j - i)
            toks.append(_atom_token(text, i, n, name, tl, tc))
            continue
        raise err("unexpected character %r" % c)
    toks.append(Token("eof", None, line, col))
    return toks


def _atom_token(text: str, pos: int, n: int, name: str, line: int, col: int) -> Token:
    return Token("atom", name, line, col, functor_paren=(pos < n and text[pos] == "("))


# ---------------------------------------------------------------------------
# Operator table (fixed; user op/3 directives are out of scope)

XFX, XFY, YFX, FY, FX = "xfx", "xfy", "yfx", "fy", "fx"

INFIX_OPS: dict[str, tuple[int, str]] = {
    ":-": (1200, XFX), "-->": (1200, XFX),
    ";": (1100, XFY),
    "->": (1050, XFY),
    ",": (1000, XFY),
    "=": (700, XFX), "\\=": (700, XFX), "==": (700, XFX), "\\==": (700, XFX),
    "@<": (700, XFX), "@>": (700, XFX), "@=<": (700, XFX), "@>=": (700, XFX),
    "is": (700, XFX), "=:=": (700, XFX), "=\\=": (700, XFX),
    "<": (700, XFX), ">": (700, XFX), "=<": (700, XFX), ">=": (700, XFX),
    "=..": (700, XFX), "<->": (700, XFX),
    "+": (500, YFX), "-": (500, YFX), "/\\": (500, YFX), "\\/": (500, YFX),
    "xor": (500, YFX),
    "*": (400, YFX), "/": (400, YFX), "//": (400, YFX),
    "mod": (400, YFX), "rem": (400, YFX), "<<": (400, YFX), ">>": (400, YFX),
    "**": (200, XFX), "^": (200, XFY),
}

PREFIX_OPS: dict[str, tuple[int, str]] = {
    ":-": (1200, FX), "?-": (1200, FX),
    "\\+": (900, FY),
    "-": (200, FY), "+": (200, FY), "\\": (200, FY),
}


class _TermParser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def err(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, tok.line, tok.col)

    def expect_punct(self, which: str) -> None:
        t = self.next()
        if t.kind != "punct" or t.value != which:
            raise self.err("expected %r" % which, t)

    # -- precedence climbing ------------------------------------------------

    def parse(self, max_prec: int) -> Term:
        left, left_prec = self.parse_primary(max_prec)
        while True:
            t = self.peek()
            name = None
            if t.kind == "atom" and t.value in INFIX_OPS:
                name = t.value
            elif t.kind == "punct" and t.value == ",":
                name = ","
            if name is None:
                return left
            prec, kind = INFIX_OPS[name]
            if prec > max_prec:
                return left
            left_max = prec if kind == YFX else prec - 1
            right_max = prec if kind == XFY else prec - 1
            if left_prec > left_max:
                return left
            self.next()
            right = self.parse(right_max)
            left = Struct(name, (left, right))
            left_prec = prec

    def parse_primary(self, max_prec: int) -> tuple[Term, int]:
        t = self.next()
        if t.kind == "int":
            return Const(t.value), 0
        if t.kind == "var":
            return Var(t.value), 0
        if t.kind == "punct":
            if t.value == "(":
                inner = self.parse(1200)
                self.expect_punct(")")
                return inner, 0
            if t.value == "[":
                return self.parse_list(), 0
            if t.value == "{":
                raise self.err("curly-brace terms are not supported", t)
            raise self.err("unexpected %r" % t.value, t)
        if t.kind == "atom":
            name = t.value
            if t.functor_paren:
                self.expect_punct("(")
                args = [self.parse(999)]
                while self.peek().kind == "punct" and self.peek().value == ",":
                    self.next()
                    args.append(self.parse(999))
                self.expect_punct(")")
                return Struct(name, tuple(args)), 0
            if name in PREFIX_OPS and self._starts_term(self.peek()):
                prec, kind = PREFIX_OPS[name]
                if prec <= max_prec:
                    if name == "-" and self.peek().kind == "int":
                        return Const(-self.next().value), 0
                    arg_max = prec if kind == FY else prec - 1
                    arg = self.parse(arg_max)
                    return Struct(name, (arg,)), prec
            return Const(name), 0
        raise self.err("unexpected end of input", t)

    def _starts_term(self, t: Token) -> bool:
        if t.kind in ("int", "var"):
            return True
        if t.kind == "atom":
            return True
        if t.kind == "punct" and t.value in "([":
            return True
        return False

    def parse_list(self) -> Term:
        if self.peek().kind == "punct" and self.peek().value == "]":
            self.next()
            return Const("[]")
        items = [self.parse(999)]
        while self.peek().kind == "punct" and self.peek().value == ",":
            self.next()
            items.append(self.parse(999))
        tail: Term = Const("[]")
        if self.peek().kind == "punct" and self.peek().value == "|":
            self.next()
            tail = self.parse(999)
        self.expect_punct("]")
        out = tail
        for item in reversed(items):
            out = Struct(".", (item, out))
        return out


def parse_term(text: str) -> Term:
    """Parse a single term (no trailing '.')."""
    p = _TermParser(tokenize(text))
    t = p.parse(1200)
    tok = p.peek()
    if tok.kind == "end":
        p.next()
        tok = p.peek()
    if tok.kind != "eof":
        raise p.err("unexpected trailing input", tok)
    return t


def read_clause_terms(text: str) -> list[Term]:
    """Split source text into raw clause terms (before normalization)."""
    p = _TermParser(tokenize(text))
    out = []
    while p.peek().kind != "eof":
        t = p.parse(1200)
        end = p.next()
        if end.kind != "end":
            raise p.err("operator priority clash or missing '.'", end)
        out.append(t)
    return out


# ---------------------------------------------------------------------------
# Normalization into the clause database

_META_REJECT = {("assert", 1), ("asserta", 1), ("assertz", 1),
                ("retract", 1), ("abolish", 1)}


class _Namer:
    """Fresh auxiliary predicate names, guaranteed not to clash."""

    def __init__(self, taken: set[str]):
        self.taken = set(taken)
        self.counter = 0
        self.fresh_var = 0

    def aux(self) -> str:
        while True:
            name = "aux%d" % self.counter
            self.counter += 1
            if name not in self.taken:
                self.taken.add(name)
                return name

    def anon(self) -> str:
        self.fresh_var += 1
        return "_G%d" % self.fresh_var


def _rename_anonymous(t: Term, namer: _Namer) -> Term:
    if isinstance(t, Var):
        if t.name == "_":
            return Var(namer.anon())
        return t
    if isinstance(t, Struct):
        return Struct(t.functor, tuple(_rename_anonymous(a, namer) for a in t.args))
    return t


def _goal_vars(t: Term) -> list[str]:
    return term_vars(t, [])


def _to_atom(g: Term) -> Atom:
    if isinstance(g, Const) and isinstance(g.name, str):
        return Atom(PredId(g.name, 0), ())
    if isinstance(g, Struct):
        return Atom(PredId(g.functor, len(g.args)), g.args)
    raise FrontendError("goal is not callable: %s" % g)


def normalize_body(head: Atom, body: Term | None, namer: _Namer,
                   aux_preds: set[PredId]) -> list[Clause]:
    """Compile one raw clause into flat-bodied clauses (main clause first).

    Every disjunctive construct becomes a fresh auxiliary predicate whose
    arguments are the variables shared with the rest of the clause, so the
    auxiliary's termination condition carries exactly the bindings that can
    flow into the branch.
    """
    aux_clauses: list[Clause] = []

    def walk(g: Term, ctx_vars: set[str]) -> list[Atom]:
        if isinstance(g, Var):
            raise FrontendError("unbound goal (variable meta-call): %s" % g)
        if isinstance(g, Const) and g.name == "true":
            return []
        if isinstance(g, Const) and g.name == "!":
            return []  # cut erased
        if isinstance(g, Const) and isinstance(g.name, int):
            raise FrontendError("goal is not callable: %s" % g)
        if isinstance(g, Struct):
            if g.functor == "," and len(g.args) == 2:
                a, b = g.args
                left = walk(a, ctx_vars | set(_goal_vars(b)))
                right = walk(b, ctx_vars | set(_goal_vars(a)))
                return left + right
            if g.functor == ";" and len(g.args) == 2:
                return [make_aux(_disj_branches(g), g, ctx_vars)]
            if g.functor == "->" and len(g.args) == 2:
                # bare if-then: over-approximated by (Cond, Then)
                return walk(Struct(",", g.args), ctx_vars)
            if g.functor == "\\+" and len(g.args) == 1:
                inner = g.args[0]
                branches = [Struct(",", (inner, Const("false"))), Const("true")]
                return [make_aux(branches, g, ctx_vars)]
            if g.functor == "call":
                if len(g.args) == 1:
                    target = g.args[0]
                    if isinstance(target, Var):
                        raise FrontendError("call/1 with unbound goal")
                    return walk(target, ctx_vars)
                raise FrontendError("call/%d is not supported" % len(g.args))
            if (g.functor, len(g.args)) in _META_REJECT:
                raise FrontendError("%s/%d is not supported (dynamic database)"
                                    % (g.functor, len(g.args)))
        return [_to_atom(g)]

    def make_aux(branches: list[Term], construct: Term, ctx_vars: set[str]) -> Atom:
        gvars = _goal_vars(construct)
        shared = tuple(v for v in gvars if v in ctx_vars)
        pred = PredId(namer.aux(), len(shared))
        aux_preds.add(pred)
        aux_head = Atom(pred, tuple(Var(v) for v in shared))
        for br in branches:
            aux_clauses.extend(normalize_body(aux_head, br, namer, aux_preds))
        return Atom(pred, tuple(Var(v) for v in shared))

    if body is None:
        return [Clause(head, ())] + aux_clauses

    head_vars = set()
    for t in head.args:
        term_vars(t, acc := [])
        head_vars.update(acc)
    main = Clause(head, tuple(walk(body, head_vars)))
    return [main] + aux_clauses


def _disj_branches(g: Term) -> list[Term]:
    """Branches of a ';' tree; an if-then-else arm contributes (Cond, Then)."""
    if isinstance(g, Struct) and g.functor == ";" and len(g.args) == 2:
        left, right = g.args
        if isinstance(left, Struct) and left.functor == "->" and len(left.args) == 2:
            return [Struct(",", left.args)] + _disj_branches(right)
        return _disj_branches(left) + _disj_branches(right)
    return [g]


def _split_clause(raw: Term) -> tuple[Term, Term | None]:
    if isinstance(raw, Struct) and raw.functor == ":-":
        if len(raw.args) == 2:
            return raw.args[0], raw.args[1]
        raise FrontendError("directives are not supported: %s" % raw)
    if isinstance(raw, Struct) and raw.functor == "-->" and len(raw.args) == 2:
        raise FrontendError("DCG rules are not supported")
    if isinstance(raw, Struct) and raw.functor == "?-":
        raise FrontendError("queries are not supported in source files")
    return raw, None


def _head_atom(h: Term) -> Atom:
    if isinstance(h, Const) and isinstance(h.name, str):
        return Atom(PredId(h.name, 0), ())
    if isinstance(h, Struct) and h.functor not in (",", ";", "->"):
        return Atom(PredId(h.functor, len(h.args)), h.args)
    raise FrontendError("invalid clause head: %s" % h)


def parse_program(text: str, builtins=None) -> Program:
    """Parse and normalize a source program.

    `builtins` is the BuiltinTable in force (defaults to the shipped table);
    defining a clause for a table predicate is an error, since imported
    predicates cannot be redefined.
    """
    if builtins is None:
        from .builtins import default_table
        builtins = default_table()

    raw_clauses = read_clause_terms(text)
    split = [_split_clause(r) for r in raw_clauses]

    taken = set()
    for h, _ in split:
        try:
            taken.add(_head_atom(h).pred.name)
        except FrontendError:
            pass
    namer = _Namer(taken)

    clauses: dict[PredId, list[Clause]] = {}
    aux_preds: set[PredId] = set()
    for h, b in split:
        h = _rename_anonymous(h, namer)
        b = _rename_anonymous(b, namer) if b is not None else None
        head = _head_atom(h)
        for c in normalize_body(head, b, namer, aux_preds):
            clauses.setdefault(c.head.pred, []).append(c)

    for pred in clauses:
        if builtins.defines(pred):
            raise FrontendError(
                "predicate %s is imported as a builtin and cannot be redefined" % pred)

    return Program(clauses=clauses, builtins=builtins, aux_preds=aux_preds)

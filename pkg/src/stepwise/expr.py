"""Core expression language: syntax tree, parser, pretty printer, substitution.

The term language is a small Haskell subset: integer literals, variables,
lambda abstractions and left-associative application. List syntax is sugar
for the constructors ":" and "[]"; the infix operators are "+", "++" and ":".
Operators never nest without parentheses, so no precedence table is needed
beyond "application binds tighter than any operator".
"""

from __future__ import annotations

import string
from collections.abc import Iterable
from dataclasses import dataclass

INFIX_OPS = ("+", "++", ":")
NIL_NAME = "[]"
CONS_NAME = ":"

_RESERVED = {"let", "in", "case", "of", "where", "if", "then", "else", "do"}


class ParseError(Exception):
    """Input text is not an expression of the supported subset."""


@dataclass(frozen=True)
class App:
    function: Expr
    argument: Expr


@dataclass(frozen=True)
class Abs:
    binder: str
    body: Expr


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lit:
    value: int


Expr = App | Abs | Var | Lit

nil = Var(NIL_NAME)


def app_n(fn: Expr, args: Iterable[Expr]) -> Expr:
    """Apply fn to several arguments, left associated."""
    for a in args:
        fn = App(fn, a)
    return fn


def cons(head: Expr, tail: Expr) -> Expr:
    return App(App(Var(CONS_NAME), head), tail)


def spine(e: Expr) -> tuple[Expr, list[Expr]]:
    """Split e into its head and the list of arguments applied to it."""
    args: list[Expr] = []
    while isinstance(e, App):
        args.append(e.argument)
        e = e.function
    args.reverse()
    return e, args


def is_app(e: Expr) -> bool:
    return isinstance(e, App)


def is_fun(name: str, arity: int, e: Expr) -> bool:
    """True iff e is Var(name) applied to exactly `arity` arguments."""
    for _ in range(arity):
        if not isinstance(e, App):
            return False
        e = e.function
    return isinstance(e, Var) and e.name == name


def list_elements(e: Expr) -> list[Expr] | None:
    """Elements of a complete cons chain ending in [], else None."""
    items: list[Expr] = []
    while e != nil:
        if (
            isinstance(e, App)
            and isinstance(e.function, App)
            and e.function.function == Var(CONS_NAME)
        ):
            items.append(e.function.argument)
            e = e.argument
        else:
            return None
    return items


def from_list(items: Iterable[Expr]) -> Expr:
    out: Expr = nil
    for x in reversed(list(items)):
        out = cons(x, out)
    return out


# ---------------------------------------------------------------------------
# Paths. App children: 0 = function, 1 = argument. Abs child: 0 = body.

Path = tuple[int, ...]


def children(e: Expr) -> tuple[Expr, ...]:
    if isinstance(e, App):
        return (e.function, e.argument)
    if isinstance(e, Abs):
        return (e.body,)
    return ()


def subterm(e: Expr, path: Path) -> Expr:
    for i in path:
        kids = children(e)
        if i >= len(kids):
            raise IndexError(f"path {path} does not address a node")
        e = kids[i]
    return e


def replace_at(e: Expr, path: Path, new: Expr) -> Expr:
    if not path:
        return new
    i, rest = path[0], path[1:]
    if isinstance(e, App):
        if i == 0:
            return App(replace_at(e.function, rest, new), e.argument)
        if i == 1:
            return App(e.function, replace_at(e.argument, rest, new))
    if isinstance(e, Abs) and i == 0:
        return Abs(e.binder, replace_at(e.body, rest, new))
    raise IndexError(f"path component {i} does not exist at {e!r}")


def all_paths(e: Expr) -> list[Path]:
    """Every node position of e in preorder (root first, left before right)."""
    out: list[Path] = [()]
    for i, kid in enumerate(children(e)):
        out.extend((i, *p) for p in all_paths(kid))
    return out


# ---------------------------------------------------------------------------
# Free variables and capture-avoiding substitution.


def free_vars(e: Expr) -> set[str]:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Lit):
        return set()
    if isinstance(e, Abs):
        return free_vars(e.body) - {e.binder}
    return free_vars(e.function) | free_vars(e.argument)


def fresh_name(base: str, avoid: set[str]) -> str:
    """Smallest positive integer suffix on base's stem that avoids `avoid`."""
    stem = base.rstrip("'").rstrip(string.digits) or "x"
    n = 1
    while stem + str(n) in avoid:
        n += 1
    return stem + str(n)


def substitute(binder: str, replacement: Expr, body: Expr) -> Expr:
    """Replace free occurrences of binder in body, avoiding capture."""
    return substitute_many({binder: replacement}, body)


def substitute_many(bindings: dict[str, Expr], e: Expr) -> Expr:
    """Simultaneous capture-avoiding substitution."""
    if not bindings:
        return e
    if isinstance(e, Var):
        return bindings.get(e.name, e)
    if isinstance(e, Lit):
        return e
    if isinstance(e, App):
        return App(
            substitute_many(bindings, e.function),
            substitute_many(bindings, e.argument),
        )
    body_free = free_vars(e.body)
    live = {
        k: v for k, v in bindings.items() if k != e.binder and k in body_free
    }
    if not live:
        return e
    binder, body = e.binder, e.body
    if any(binder in free_vars(v) for v in live.values()):
        avoid = body_free | set(live)
        for v in live.values():
            avoid |= free_vars(v)
        binder = fresh_name(e.binder, avoid)
        body = substitute_many({e.binder: Var(binder)}, body)
    return Abs(binder, substitute_many(live, body))


# ---------------------------------------------------------------------------
# Parser.

_IDENT_START = set(string.ascii_letters + "_")
_IDENT_CHARS = set(string.ascii_letters + string.digits + "_")
_ATOM_START = {"int", "ident", "(", "["}

_Token = tuple[str, object, int]


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()[],":
            toks.append((c, c, i))
            i += 1
        elif c == "\\":
            toks.append(("lambda", c, i))
            i += 1
        elif c == "-":
            if text.startswith("->", i):
                toks.append(("arrow", "->", i))
                i += 2
            elif i + 1 < n and text[i + 1].isdigit():
                j = i + 1
                while j < n and text[j].isdigit():
                    j += 1
                toks.append(("int", -int(text[i + 1 : j]), i))
                i = j
            else:
                raise ParseError(f"unexpected '-' at position {i}")
        elif c == "+":
            if text.startswith("++", i):
                toks.append(("op", "++", i))
                i += 2
            else:
                toks.append(("op", "+", i))
                i += 1
        elif c == ":":
            toks.append(("op", ":", i))
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
        elif c in _IDENT_START:
            j = i + 1
            while j < n and text[j] in _IDENT_CHARS:
                j += 1
            while j < n and text[j] == "'":
                j += 1
            toks.append(("ident", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r} at position {i}")
    toks.append(("eof", None, n))
    return toks


class _Parser:
    def __init__(self, toks: list[_Token]):
        self.toks = toks
        self.pos = 0

    def peek(self, k: int = 0) -> _Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def take(self) -> _Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str) -> _Token:
        t = self.take()
        if t[0] != kind:
            raise ParseError(f"expected {kind!r}, found {_shown(t)} at position {t[2]}")
        return t

    def expr(self) -> Expr:
        if self.peek()[0] == "lambda":
            return self.lam()
        return self.opexpr()

    def lam(self) -> Expr:
        self.expect("lambda")
        binders: list[str] = []
        while self.peek()[0] == "ident":
            binders.append(self.take()[1])  # type: ignore[arg-type]
        if not binders:
            t = self.peek()
            raise ParseError(f"expected a binder after '\\' at position {t[2]}")
        self.expect("arrow")
        body = self.expr()
        for b in reversed(binders):
            body = Abs(b, body)
        return body

    def opexpr(self) -> Expr:
        left = self.appexpr()
        if self.peek()[0] != "op":
            return left
        op = self.take()[1]
        right = self.appexpr()
        nxt = self.peek()
        if nxt[0] == "op":
            raise ParseError(
                f"operators need explicit parentheses (at position {nxt[2]})"
            )
        return App(App(Var(op), left), right)  # type: ignore[arg-type]

    def appexpr(self) -> Expr:
        e = self.atom()
        while self.peek()[0] in _ATOM_START:
            e = App(e, self.atom())
        return e

    def atom(self) -> Expr:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return Lit(val)  # type: ignore[arg-type]
        if kind == "ident":
            if val in _RESERVED:
                raise ParseError(f"reserved word {val!r} at position {pos}")
            self.take()
            return Var(val)  # type: ignore[arg-type]
        if kind == "(":
            self.take()
            if self.peek()[0] == "op" and self.peek(1)[0] == ")":
                op = self.take()[1]
                self.take()
                return Var(op)  # type: ignore[arg-type]
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "[":
            return self.listlit()
        raise ParseError(f"unexpected {_shown((kind, val, pos))} at position {pos}")

    def listlit(self) -> Expr:
        self.expect("[")
        if self.peek()[0] == "]":
            self.take()
            return nil
        items = [self.expr()]
        while self.peek()[0] == ",":
            self.take()
            items.append(self.expr())
        self.expect("]")
        return from_list(items)


def _shown(t: _Token) -> str:
    kind, val, _pos = t
    return "end of input" if kind == "eof" else repr(val)


def parse(text: str) -> Expr:
    p = _Parser(_tokenize(text))
    e = p.expr()
    kind, val, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"unexpected {val!r} at position {pos}")
    return e


# ---------------------------------------------------------------------------
# Pretty printer. Complete cons chains render as list literals; operators
# applied to exactly two arguments render infix, otherwise as sections.


def pretty(e: Expr) -> str:
    if isinstance(e, Lit):
        return str(e.value)
    if isinstance(e, Var):
        return f"({e.name})" if e.name in INFIX_OPS else e.name
    if isinstance(e, Abs):
        return f"\\{e.binder} -> {pretty(e.body)}"
    elems = list_elements(e)
    if elems is not None:
        return "[" + ",".join(pretty(x) for x in elems) + "]"
    head, args = spine(e)
    if isinstance(head, Var) and head.name in INFIX_OPS and len(args) >= 2:
        part = f"{_operand(args[0])} {head.name} {_operand(args[1])}"
        if len(args) == 2:
            return part
        return " ".join(["(" + part + ")"] + [_argument(a) for a in args[2:]])
    return " ".join([_function(head)] + [_argument(a) for a in args])


def _prints_infix(e: Expr) -> bool:
    if not isinstance(e, App) or list_elements(e) is not None:
        return False
    head, args = spine(e)
    return isinstance(head, Var) and head.name in INFIX_OPS and len(args) == 2


def _operand(e: Expr) -> str:
    s = pretty(e)
    if _prints_infix(e) or isinstance(e, Abs) or (isinstance(e, Lit) and e.value < 0):
        return "(" + s + ")"
    return s


def _argument(e: Expr) -> str:
    s = pretty(e)
    if isinstance(e, Abs) or (isinstance(e, Lit) and e.value < 0):
        return "(" + s + ")"
    if isinstance(e, App) and list_elements(e) is None:
        return "(" + s + ")"
    return s


def _function(head: Expr) -> str:
    s = pretty(head)
    return "(" + s + ")" if isinstance(head, Abs) else s

"""Loading function definitions and turning them into rules and strategies.

A prelude is a small Haskell-like source file: one definition per line
group, `--` comments, and `{-# DESC ... #-}` pragmas that attach a
human-readable description to the definition that follows. Every
definition becomes a rewrite rule (one alternative per clause, matched in
source order) and an evaluation strategy that demands just enough
evaluation of the arguments to decide which clause fires.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from importlib import resources

from .expr import (
    CONS_NAME,
    NIL_NAME,
    App,
    Expr,
    Lit,
    ParseError,
    Var,
    app_n,
    is_fun,
    nil,
    parse,
    spine,
)
from .rules import Rule, RuleAlternative, rewrite_rule
from .strategy import (
    SUCCEED,
    CheckCurrent,
    LeftBiased,
    RuleStep,
    Strategy,
    arg,
    check_current,
    check_is_fun,
    partial_sequence,
)


class PreludeError(Exception):
    """A prelude file could not be loaded."""


@dataclass(frozen=True)
class PVar:
    name: str


@dataclass(frozen=True)
class PLit:
    value: int


@dataclass(frozen=True)
class PCon:
    name: str
    subpatterns: tuple[Pattern, ...] = ()


Pattern = PVar | PLit | PCon


@dataclass(frozen=True)
class Clause:
    patterns: tuple[Pattern, ...]
    rhs: Expr
    line: int


@dataclass(frozen=True)
class Definition:
    name: str
    clauses: tuple[Clause, ...]
    description: str
    line: int

    @property
    def arity(self) -> int:
        return len(self.clauses[0].patterns)


@dataclass
class Prelude:
    definitions: list[Definition]
    warnings: list[str]

    def rules(self) -> list[Rule]:
        return [generate_rule(d) for d in self.definitions]

    def names(self) -> list[str]:
        return [d.name for d in self.definitions]


_OP_RULE_NAMES = {"++": "append", "+": "add", "*": "mul", "-": "sub", ":": "cons"}
_BUILTIN_HEADS = {"+", ":", NIL_NAME}


def rule_id_for(name: str) -> str:
    return f"eval.{_OP_RULE_NAMES.get(name, name)}.rule"


def pattern_to_expr(p: Pattern) -> Expr:
    if isinstance(p, PVar):
        return Var(p.name)
    if isinstance(p, PLit):
        return Lit(p.value)
    if p.name == NIL_NAME:
        return nil
    return app_n(Var(p.name), [pattern_to_expr(s) for s in p.subpatterns])


def _expr_to_pattern(e: Expr, line: int) -> Pattern:
    if isinstance(e, Var):
        if e.name == NIL_NAME:
            return PCon(NIL_NAME)
        return PVar(e.name)
    if isinstance(e, Lit):
        return PLit(e.value)
    if isinstance(e, App):
        head, parts = spine(e)
        if head == Var(CONS_NAME) and len(parts) == 2:
            return PCon(
                CONS_NAME,
                (_expr_to_pattern(parts[0], line), _expr_to_pattern(parts[1], line)),
            )
    raise PreludeError(f"line {line}: not a valid pattern: {e!r}")


def _pattern_vars(p: Pattern) -> list[str]:
    if isinstance(p, PVar):
        return [p.name]
    if isinstance(p, PLit):
        return []
    out: list[str] = []
    for s in p.subpatterns:
        out.extend(_pattern_vars(s))
    return out


# ---------------------------------------------------------------------------
# Parsing.

_PRAGMA = re.compile(r"\{-#\s*DESC\b(.*?)#-\}", re.DOTALL)


@dataclass
class _Binding:
    line: int
    name: str
    patterns: tuple[Pattern, ...]
    rhs: Expr


def _logical_lines(text: str) -> list[tuple[int, str]]:
    """Join indented continuation lines onto the line they continue."""
    out: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        if raw[0].isspace() and out:
            prev_no, prev = out[-1]
            out[-1] = (prev_no, prev + " " + raw.strip())
        else:
            out.append((lineno, raw.rstrip()))
    return out


def _strip_comment(src: str) -> str:
    idx = src.find("--")
    return src if idx < 0 else src[:idx]


def _parse_binding(src: str, line: int) -> _Binding:
    if "|" in src:
        raise PreludeError(f"line {line}: guards are not supported")
    if re.search(r"\bwhere\b", src):
        raise PreludeError(f"line {line}: where clauses are not supported")
    lhs_src, eq, rhs_src = src.partition("=")
    if not eq:
        raise PreludeError(f"line {line}: expected '=' in definition")
    try:
        lhs = parse(lhs_src)
        rhs = parse(rhs_src)
    except ParseError as exc:
        raise PreludeError(f"line {line}: {exc}") from exc
    head, parts = spine(lhs)
    if not isinstance(head, Var) or head.name == NIL_NAME:
        raise PreludeError(
            f"line {line}: left-hand side must start with a function name"
        )
    if head.name in _BUILTIN_HEADS:
        raise PreludeError(f"line {line}: {head.name} is built in and cannot be redefined")
    patterns = tuple(_expr_to_pattern(p, line) for p in parts)
    seen: set[str] = set()
    for v in (v for p in patterns for v in _pattern_vars(p)):
        if v in seen:
            raise PreludeError(
                f"line {line}: variable {v} occurs twice in the patterns of {head.name}"
            )
        seen.add(v)
    return _Binding(line, head.name, patterns, rhs)


def load_prelude(text: str) -> Prelude:
    warnings: list[str] = []
    pragmas: dict[int, str] = {}

    def stash(m: re.Match) -> str:
        start_line = text.count("\n", 0, m.start()) + 1
        pragmas[start_line] = " ".join(m.group(1).split())
        return "\n" * m.group(0).count("\n")

    without_pragmas = _PRAGMA.sub(stash, text)

    bindings: list[tuple[_Binding, str]] = []
    pending = sorted(pragmas.items())
    for lineno, raw in _logical_lines(without_pragmas):
        src = _strip_comment(raw)
        if not src.strip():
            continue
        desc = ""
        while pending and pending[0][0] < lineno:
            desc = pending.pop(0)[1]
        bindings.append((_parse_binding(src, lineno), desc))
    if pending:
        warnings.append(
            f"line {pending[0][0]}: description pragma is not followed by a definition"
        )

    groups: list[tuple[str, list[_Binding], str]] = []
    for b, desc in bindings:
        if groups and groups[-1][0] == b.name:
            groups[-1][1].append(b)
            if desc:
                groups[-1] = (b.name, groups[-1][1], desc)
            continue
        shadowed = next((i for i, g in enumerate(groups) if g[0] == b.name), None)
        if shadowed is not None:
            warnings.append(
                f"line {b.line}: definition of {b.name} shadows the one at "
                f"line {groups[shadowed][1][0].line}"
            )
            del groups[shadowed]
        groups.append((b.name, [b], desc))

    definitions: list[Definition] = []
    for name, bs, desc in groups:
        arity = len(bs[0].patterns)
        for b in bs[1:]:
            if len(b.patterns) != arity:
                raise PreludeError(
                    f"line {b.line}: definition of {name} takes {len(b.patterns)} "
                    f"patterns here but {arity} at line {bs[0].line}"
                )
        clauses = tuple(Clause(b.patterns, b.rhs, b.line) for b in bs)
        definitions.append(Definition(name, clauses, desc, bs[0].line))
    return Prelude(definitions, warnings)


def load_prelude_file(path: str) -> Prelude:
    with open(path, encoding="utf-8") as fh:
        return load_prelude(fh.read())


@cache
def default_prelude_text() -> str:
    return resources.files("stepwise").joinpath("data/prelude.hs").read_text("utf-8")


def default_prelude() -> Prelude:
    return load_prelude(default_prelude_text())


# ---------------------------------------------------------------------------
# Rule and strategy generation.


def _clause_alternative(defn_name: str, clause: Clause) -> RuleAlternative:
    metas = tuple(v for p in clause.patterns for v in _pattern_vars(p))
    lhs = app_n(Var(defn_name), [pattern_to_expr(p) for p in clause.patterns])
    return RuleAlternative(metas, lhs, clause.rhs)


def generate_rule(defn: Definition) -> Rule:
    return rewrite_rule(
        rule_id_for(defn.name),
        [_clause_alternative(defn.name, c) for c in defn.clauses],
        description=defn.description,
        annotation=f"definition {defn.name}",
    )


def _constructor_check(p: PCon) -> CheckCurrent:
    if p.name == NIL_NAME:
        return check_current(lambda e: e == nil, "is []")
    arity = len(p.subpatterns)
    return check_current(
        lambda e, n=p.name, a=arity: is_fun(n, a, e), f"is {p.name}/{arity}"
    )


def pattern_strategy(p: Pattern, whnf: Strategy) -> Strategy:
    """Evaluate the focus just enough to decide whether it matches p."""
    if isinstance(p, PVar):
        return SUCCEED
    if isinstance(p, PLit):
        return partial_sequence(
            [whnf, check_current(lambda e, v=p.value: e == Lit(v), f"is {p.value}")]
        )
    parts: list[Strategy] = [whnf, _constructor_check(p)]
    n = len(p.subpatterns)
    for i, sub in enumerate(p.subpatterns, 1):
        if not isinstance(sub, PVar):
            parts.append(arg(i, n, pattern_strategy(sub, whnf)))
    return partial_sequence(parts)


def _clause_strategy(defn: Definition, clause: Clause, whnf: Strategy) -> Strategy:
    n = len(clause.patterns)
    rule = rewrite_rule(
        rule_id_for(defn.name),
        [_clause_alternative(defn.name, clause)],
        description=defn.description,
        annotation=f"definition {defn.name}",
    )
    parts: list[Strategy] = [check_is_fun(defn.name, n)]
    for i, p in enumerate(clause.patterns, 1):
        if not isinstance(p, PVar):
            parts.append(arg(i, n, pattern_strategy(p, whnf)))
    parts.append(RuleStep(rule))
    return partial_sequence(parts)


def definition_strategy(defn: Definition, whnf: Strategy) -> Strategy:
    """Clause strategies tried in source order; a later clause only fires
    when every earlier one is dead."""
    out: Strategy | None = None
    for clause in defn.clauses:
        s = _clause_strategy(defn, clause, whnf)
        out = s if out is None else LeftBiased(out, s)
    assert out is not None
    return out

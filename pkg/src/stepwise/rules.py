"""Rewrite rules: named and described, either pattern-based or primitive.

A pattern-based rule carries one or more (meta-variables, lhs, rhs)
alternatives tried in order. Meta-variables live in their own namespace:
instantiation is plain first-order replacement, not capture-avoiding
object-level substitution.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .expr import (
    Abs,
    App,
    Expr,
    Lit,
    Var,
    app_n,
    cons,
    free_vars,
    nil,
    substitute,
)


@dataclass(frozen=True)
class RuleAlternative:
    meta_vars: tuple[str, ...]
    lhs: Expr
    rhs: Expr


@dataclass(frozen=True)
class Rule:
    rule_id: str
    description: str = ""
    annotation: str = ""
    alternatives: tuple[RuleAlternative, ...] = ()
    primitive: Callable[[Expr], Expr | None] | None = None

    def apply(self, e: Expr) -> Expr | None:
        """Result of the rule at the root of e, or None when it does not fit."""
        if self.primitive is not None:
            return self.primitive(e)
        for alt in self.alternatives:
            b = match(alt.lhs, e, alt.meta_vars)
            if b is not None:
                return instantiate(alt.rhs, b)
        return None


def match(pattern: Expr, subject: Expr, meta_vars: Iterable[str]) -> dict[str, Expr] | None:
    """First-order match of pattern against subject; meta-variables bind
    whole sub-expressions, everything else must be structurally equal."""
    bindings: dict[str, Expr] = {}
    if _match(pattern, subject, frozenset(meta_vars), bindings):
        return bindings
    return None


def _match(p: Expr, s: Expr, metas: frozenset[str], b: dict[str, Expr]) -> bool:
    if isinstance(p, Var) and p.name in metas:
        if p.name in b:
            return b[p.name] == s
        b[p.name] = s
        return True
    if isinstance(p, (Var, Lit)):
        return p == s
    if isinstance(p, App):
        return (
            isinstance(s, App)
            and _match(p.function, s.function, metas, b)
            and _match(p.argument, s.argument, metas, b)
        )
    return isinstance(s, Abs) and p.binder == s.binder and _match(p.body, s.body, metas, b)


def instantiate(rhs: Expr, bindings: dict[str, Expr]) -> Expr:
    """Plain meta-variable replacement; object binders shadow but are never
    renamed."""
    if isinstance(rhs, Var):
        return bindings.get(rhs.name, rhs)
    if isinstance(rhs, Lit):
        return rhs
    if isinstance(rhs, App):
        return App(instantiate(rhs.function, bindings), instantiate(rhs.argument, bindings))
    inner = {k: v for k, v in bindings.items() if k != rhs.binder}
    return Abs(rhs.binder, instantiate(rhs.body, inner)) if inner else rhs


def rewrite_rule(
    rule_id: str,
    alternatives: Iterable[RuleAlternative],
    description: str = "",
    annotation: str = "",
) -> Rule:
    alts = tuple(alternatives)
    for alt in alts:
        lhs_vars = free_vars(alt.lhs)
        loose = (free_vars(alt.rhs) & set(alt.meta_vars)) - lhs_vars
        if loose:
            raise ValueError(
                f"rule {rule_id}: meta-variables {sorted(loose)} missing from lhs"
            )
    return Rule(rule_id, description, annotation, alternatives=alts)


def primitive_rule(
    rule_id: str,
    fn: Callable[[Expr], Expr | None],
    description: str = "",
    annotation: str = "",
) -> Rule:
    return Rule(rule_id, description, annotation, primitive=fn)


def match_rule(rule: Rule, e: Expr) -> dict[str, Expr] | None:
    """Binding map of the first alternative that fits e, or None."""
    if rule.primitive is not None:
        raise ValueError(f"rule {rule.rule_id} is primitive and has no pattern")
    for alt in rule.alternatives:
        b = match(alt.lhs, e, alt.meta_vars)
        if b is not None:
            return b
    return None


def apply_rule_at_root(rule: Rule, e: Expr) -> Expr | None:
    return rule.apply(e)


# ---------------------------------------------------------------------------
# Built-in rule set.


def _add(e: Expr) -> Expr | None:
    if (
        isinstance(e, App)
        and isinstance(e.function, App)
        and e.function.function == Var("+")
        and isinstance(e.function.argument, Lit)
        and isinstance(e.argument, Lit)
    ):
        return Lit(e.function.argument.value + e.argument.value)
    return None


def _beta(e: Expr) -> Expr | None:
    if isinstance(e, App) and isinstance(e.function, Abs):
        return substitute(e.function.binder, e.argument, e.function.body)
    return None


sum_rule = rewrite_rule(
    "eval.sum.rule",
    [RuleAlternative((), Var("sum"), app_n(Var("foldl"), [Var("+"), Lit(0)]))],
    description="Calculate the sum of a list of numbers",
    annotation="definition sum",
)

foldl_rule = rewrite_rule(
    "eval.foldl.rule",
    [
        RuleAlternative(
            ("f", "v"),
            app_n(Var("foldl"), [Var("f"), Var("v"), nil]),
            Var("v"),
        ),
        RuleAlternative(
            ("f", "v", "x", "xs"),
            app_n(Var("foldl"), [Var("f"), Var("v"), cons(Var("x"), Var("xs"))]),
            app_n(Var("foldl"), [Var("f"), app_n(Var("f"), [Var("v"), Var("x")]), Var("xs")]),
        ),
    ],
    description="Process a list using an operator that associates to the left",
    annotation="definition foldl",
)

append_rule = rewrite_rule(
    "eval.append.rule",
    [
        RuleAlternative(("ys",), app_n(Var("++"), [nil, Var("ys")]), Var("ys")),
        RuleAlternative(
            ("x", "xs", "ys"),
            app_n(Var("++"), [cons(Var("x"), Var("xs")), Var("ys")]),
            cons(Var("x"), app_n(Var("++"), [Var("xs"), Var("ys")])),
        ),
    ],
    description="Append two lists",
    annotation="definition ++",
)

add_rule = primitive_rule(
    "eval.add.rule", _add, description="Add two integers", annotation="applying +"
)

beta_rule = primitive_rule(
    "eval.beta.rule",
    _beta,
    description="Apply a lambda abstraction to its argument",
    annotation="beta reduction",
)


def builtin_rules() -> list[Rule]:
    return [sum_rule, foldl_rule, append_rule, add_rule, beta_rule]


def rule_map(rules: Iterable[Rule]) -> dict[str, Rule]:
    return {r.rule_id: r for r in rules}

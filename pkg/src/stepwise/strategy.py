"""Strategy combinators over a zipper context.

A strategy denotes a set of permitted rewrite sequences. The interpreter
enumerates, for a given focus, every single step that can come next
(`firsts`) together with the remainder strategy that continues the
sentence, and whether the strategy may finish without a step (`succeeds`).

Recursion is a named binder (Fix/SVar), not a host-language closure, so
strategies are plain serializable trees and remainders can be resumed
mid-derivation.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .expr import Expr, Path, children, is_app, replace_at, subterm
from .rules import Rule


class BudgetExceededError(Exception):
    """A strategy search passed its step budget."""


class StrategyError(Exception):
    """Malformed strategy, e.g. an unbound recursion variable."""


@dataclass(frozen=True)
class Context:
    term: Expr
    path: Path = ()

    @functools.cached_property
    def focused(self) -> Expr:
        return subterm(self.term, self.path)

    def replace_focus(self, new: Expr) -> Context:
        return Context(replace_at(self.term, self.path, new), self.path)

    def down(self, i: int) -> Context:
        child = Context(self.term, self.path + (i,))
        child.__dict__["focused"] = children(self.focused)[i]
        return child


@dataclass(frozen=True)
class Succeed:
    pass


@dataclass(frozen=True)
class RuleStep:
    rule: Rule


@dataclass(frozen=True)
class CheckCurrent:
    predicate: Callable[[Expr], bool]
    name: str = ""


@dataclass(frozen=True)
class Sequence:
    first: Strategy
    second: Strategy


@dataclass(frozen=True)
class Choice:
    left: Strategy
    right: Strategy


@dataclass(frozen=True)
class LeftBiased:
    left: Strategy
    right: Strategy


@dataclass(frozen=True)
class PartialSequence:
    """s <* t: run s, then t if it can act, else stop after s."""

    first: Strategy
    second: Strategy


@dataclass(frozen=True)
class Child:
    index: int
    strategy: Strategy


@dataclass(frozen=True)
class Label:
    name: str
    strategy: Strategy


@dataclass(frozen=True)
class Fix:
    var: str
    body: Strategy


@dataclass(frozen=True)
class SVar:
    name: str


Strategy = (
    Succeed
    | RuleStep
    | CheckCurrent
    | Sequence
    | Choice
    | LeftBiased
    | PartialSequence
    | Child
    | Label
    | Fix
    | SVar
)

SUCCEED = Succeed()
FAIL = CheckCurrent(lambda _e: False, "fail")


@dataclass(frozen=True)
class StepChoice:
    rule_id: str
    focus: Path
    result: Expr  # the whole term after rewriting at focus
    rule: Rule = field(compare=False)
    # What is left of the sentence after this step; None when enumerated
    # with remainders switched off.
    remainder: Strategy | None = field(default=None, compare=False)


# ---------------------------------------------------------------------------
# Constructors.

_fix_names = itertools.count(1)


def fix(build: Callable[[SVar], Strategy]) -> Fix:
    name = f"_s{next(_fix_names)}"
    return Fix(name, build(SVar(name)))


def lift(rule: Rule) -> RuleStep:
    """Lift a rule to a strategy acting at the current focus."""
    return RuleStep(rule)


def check_current(predicate: Callable[[Expr], bool], name: str = "") -> CheckCurrent:
    return CheckCurrent(predicate, name)


def check_is_fun(name: str, arity: int) -> CheckCurrent:
    from .expr import is_fun

    return CheckCurrent(lambda e: is_fun(name, arity, e), f"isFun {name} {arity}")


def sequence(strategies: Iterable[Strategy]) -> Strategy:
    out: Strategy | None = None
    for s in reversed(list(strategies)):
        out = s if out is None else Sequence(s, out)
    return SUCCEED if out is None else out


def alternatives(strategies: Iterable[Strategy]) -> Strategy:
    out: Strategy | None = None
    for s in reversed(list(strategies)):
        out = s if out is None else Choice(s, out)
    return FAIL if out is None else out


def partial_sequence(strategies: Iterable[Strategy]) -> Strategy:
    out: Strategy | None = None
    for s in reversed(list(strategies)):
        out = s if out is None else PartialSequence(s, out)
    return SUCCEED if out is None else out


def repeat(s: Strategy) -> Strategy:
    """Apply s as long as possible (greedy, possibly zero times)."""
    return fix(lambda x: LeftBiased(Sequence(s, x), SUCCEED))


def outermost(s: Strategy) -> Strategy:
    """Exhaustively apply s at the left-most outermost position."""
    once = fix(lambda x: LeftBiased(s, LeftBiased(Child(0, x), Child(1, x))))
    return repeat(once)


def innermost(s: Strategy) -> Strategy:
    """Exhaustively apply s at the left-most innermost position."""
    once = fix(lambda x: LeftBiased(LeftBiased(Child(0, x), Child(1, x)), s))
    return repeat(once)


def spinebu(s: Strategy) -> Strategy:
    """Apply s at the deepest possible node of the application spine."""
    return fix(
        lambda x: LeftBiased(
            Sequence(check_current(is_app, "isApp"), Child(0, x)), s
        )
    )


def child(i: int, s: Strategy) -> Strategy:
    return Child(i, s)


def arg(i: int, n: int, s: Strategy) -> Strategy:
    """Apply s to the i-th argument (1-based) of an n-argument application."""
    if not 1 <= i <= n:
        raise ValueError(f"arg: need 1 <= i <= n, got i={i}, n={n}")
    return Child(1, s) if i == n else Child(0, arg(i, n - 1, s))


def args(strategies: Iterable[Strategy]) -> Strategy:
    ss = list(strategies)
    n = len(ss)
    return sequence(arg(i, n, s) for i, s in enumerate(ss, 1))


def label(name: str, s: Strategy) -> Strategy:
    return Label(name, s)


# ---------------------------------------------------------------------------
# Interpretation.


def firsts(
    s: Strategy, c: Context, *, remainders: bool = True
) -> list[StepChoice]:
    """Complete, duplicate-free, deterministically ordered list of permitted
    next steps. With remainders=False the steps carry no continuation,
    which is much cheaper; use it when every step re-scans from the root."""
    steps, _ = _outcomes(s, c, {}, set(), remainders)
    out: list[StepChoice] = []
    seen: set[tuple[str, Path, Expr]] = set()
    for st in steps:
        key = (st.rule_id, st.focus, st.result)
        if key not in seen:
            seen.add(key)
            out.append(st)
    return out


def succeeds(s: Strategy, c: Context) -> bool:
    """Whether s may finish at c without taking a step."""
    return _outcomes(s, c, {}, set(), False)[1]


def _with_remainder(st: StepChoice, rem: Strategy) -> StepChoice:
    return StepChoice(st.rule_id, st.focus, st.result, st.rule, rem)


_Outcome = tuple[list[StepChoice], bool]


def _run_succeed(s, ctx, env, active, rem) -> _Outcome:
    return [], True


def _run_rule(s, ctx, env, active, rem) -> _Outcome:
    out = s.rule.apply(ctx.focused)
    if out is None:
        return [], False
    whole = replace_at(ctx.term, ctx.path, out)
    step = StepChoice(s.rule.rule_id, ctx.path, whole, s.rule, SUCCEED if rem else None)
    return [step], False


def _run_check(s, ctx, env, active, rem) -> _Outcome:
    return [], bool(s.predicate(ctx.focused))


def _run_label(s, ctx, env, active, rem) -> _Outcome:
    return _outcomes(s.strategy, ctx, env, active, rem)


def _run_sequence(s, ctx, env, active, rem) -> _Outcome:
    left, le = _outcomes(s.first, ctx, env, active, rem)
    if rem and left:
        left = [_with_remainder(st, _then(st.remainder, s.second)) for st in left]
    if not le:
        return left, False
    right, re_ = _outcomes(s.second, ctx, env, active, rem)
    return left + right, re_


def _run_partial_sequence(s, ctx, env, active, rem) -> _Outcome:
    # s <* t is Sequence(s, LeftBiased(t, Succeed)).
    left, le = _outcomes(s.first, ctx, env, active, rem)
    if rem and left:
        left = [
            _with_remainder(st, PartialSequence(st.remainder, s.second))
            for st in left
        ]
    if not le:
        return left, False
    right, re_ = _outcomes(s.second, ctx, env, active, rem)
    if right:
        return left + right, re_
    return left, True


def _run_choice(s, ctx, env, active, rem) -> _Outcome:
    left, le = _outcomes(s.left, ctx, env, active, rem)
    right, re_ = _outcomes(s.right, ctx, env, active, rem)
    return left + right, le or re_


def _run_left_biased(s, ctx, env, active, rem) -> _Outcome:
    left, le = _outcomes(s.left, ctx, env, active, rem)
    if left:
        return left, le
    right, re_ = _outcomes(s.right, ctx, env, active, rem)
    return right, True if le else re_


def _run_child(s, ctx, env, active, rem) -> _Outcome:
    kids = children(ctx.focused)
    if s.index >= len(kids):
        return [], False
    inner, ie = _outcomes(s.strategy, ctx.down(s.index), env, active, rem)
    if rem and inner:
        inner = [_with_remainder(st, Child(s.index, st.remainder)) for st in inner]
    return inner, ie


def _run_fix(s, ctx, env, active, rem) -> _Outcome:
    return _enter_fix(s, ctx, env, active, rem)


def _run_svar(s, ctx, env, active, rem) -> _Outcome:
    fx = env.get(s.name)
    if fx is None:
        raise StrategyError(f"unbound strategy variable {s.name!r}")
    return _enter_fix(fx, ctx, env, active, rem)


_HANDLERS = {
    Succeed: _run_succeed,
    RuleStep: _run_rule,
    CheckCurrent: _run_check,
    Label: _run_label,
    Sequence: _run_sequence,
    PartialSequence: _run_partial_sequence,
    Choice: _run_choice,
    LeftBiased: _run_left_biased,
    Child: _run_child,
    Fix: _run_fix,
    SVar: _run_svar,
}


def _outcomes(
    s: Strategy,
    ctx: Context,
    env: dict[str, Fix],
    active: set[tuple[int, Path]],
    rem: bool,
) -> _Outcome:
    handler = _HANDLERS.get(type(s))
    if handler is None:
        raise StrategyError(f"unknown strategy node {s!r}")
    return handler(s, ctx, env, active, rem)


def _enter_fix(
    fx: Fix,
    ctx: Context,
    env: dict[str, Fix],
    active: set[tuple[int, Path]],
    rem: bool,
) -> _Outcome:
    # Re-entering the same fix at the same focus without a step in between
    # is an empty cycle; prune it so enumeration terminates.
    key = (id(fx), ctx.path)
    if key in active:
        return [], False
    active.add(key)
    shadowed = env.get(fx.var)
    env[fx.var] = fx
    try:
        steps, emp = _outcomes(fx.body, ctx, env, active, rem)
    finally:
        active.discard(key)
        if shadowed is None:
            del env[fx.var]
        else:
            env[fx.var] = shadowed
    if rem and steps:
        steps = [_with_remainder(st, _close(st.remainder, fx.var, fx)) for st in steps]
    return steps, emp


def _then(rem: Strategy, second: Strategy) -> Strategy:
    return second if isinstance(rem, Succeed) else Sequence(rem, second)


def _close(s: Strategy, var: str, fx: Fix) -> Strategy:
    """Substitute the fix node for its variable so remainders are closed."""
    if isinstance(s, SVar):
        return fx if s.name == var else s
    if isinstance(s, (Succeed, RuleStep, CheckCurrent)):
        return s
    if isinstance(s, Sequence):
        return Sequence(_close(s.first, var, fx), _close(s.second, var, fx))
    if isinstance(s, PartialSequence):
        return PartialSequence(_close(s.first, var, fx), _close(s.second, var, fx))
    if isinstance(s, Choice):
        return Choice(_close(s.left, var, fx), _close(s.right, var, fx))
    if isinstance(s, LeftBiased):
        return LeftBiased(_close(s.left, var, fx), _close(s.right, var, fx))
    if isinstance(s, Child):
        return Child(s.index, _close(s.strategy, var, fx))
    if isinstance(s, Label):
        return Label(s.name, _close(s.strategy, var, fx))
    if isinstance(s, Fix):
        if s.var == var:
            return s
        return Fix(s.var, _close(s.body, var, fx))
    return s


def apply_all(s: Strategy, c: Context, budget: int = 10000) -> list[Context]:
    """All terminal contexts reachable by exhausting s from c, depth-first in
    firsts order, deduplicated. Raises BudgetExceededError past the budget."""
    terminals: list[Context] = []
    seen_terms: set[Expr] = set()
    steps_used = 0
    stack: list[tuple[Strategy, Context]] = [(s, c)]
    while stack:
        strategy, ctx = stack.pop()
        if succeeds(strategy, ctx) and ctx.term not in seen_terms:
            seen_terms.add(ctx.term)
            terminals.append(ctx)
        for st in reversed(firsts(strategy, ctx)):
            steps_used += 1
            if steps_used > budget:
                raise BudgetExceededError(
                    f"strategy exceeded the step budget of {budget}"
                )
            stack.append((st.remainder, Context(st.result, c.path)))
    return terminals

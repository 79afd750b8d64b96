"""Derivations, diagnosis, and hints over a loaded prelude.

The engine owns two evaluation strategies built from the prelude's
definitions: a lazy one (weak-head evaluation extended to full normal
forms by recursing into list cells) and a left-most innermost one. A
third mode, "free", accepts any single rule application anywhere.
Every operation re-scans from the root, so the engine is stateless and a
derivation is just the fixpoint of "take the first permitted step".
"""

from __future__ import annotations

from dataclasses import dataclass

from .expr import (
    CONS_NAME,
    NIL_NAME,
    Abs,
    Expr,
    Lit,
    ParseError,
    Path,
    Var,
    all_paths,
    nil,
    parse,
    pretty,
    replace_at,
    spine,
    subterm,
)
from .prelude import Prelude, default_prelude, definition_strategy, generate_rule
from .rules import Rule, add_rule, beta_rule
from .strategy import (
    SUCCEED,
    Choice,
    Context,
    Label,
    LeftBiased,
    RuleStep,
    Sequence,
    StepChoice,
    Strategy,
    arg,
    check_is_fun,
    fix,
    firsts,
    innermost,
    lift,
    partial_sequence,
    repeat,
    spinebu,
)

DEFAULT_BUDGET = 10_000

MODES = ("innermost", "outermost", "free")


class EngineError(Exception):
    pass


class BudgetExceeded(EngineError):
    """A derivation did not finish within the step budget."""


@dataclass(frozen=True)
class Step:
    rule_id: str
    annotation: str
    focus: Path
    before: Expr
    after: Expr


@dataclass(frozen=True)
class Derivation:
    start: Expr
    steps: tuple[Step, ...]
    status: str  # "complete" | "stuck" | "budget"

    @property
    def final(self) -> Expr:
        return self.steps[-1].after if self.steps else self.start


@dataclass(frozen=True)
class Diagnosis:
    kind: str  # CorrectStep | EquivalentButOffStrategy | CorrectResultWrongPath
    #           | Incorrect | ParseError
    rule_id: str | None = None
    steps_remaining: int | None = None
    message: str = ""
    expected: tuple[str, ...] = ()


class Engine:
    def __init__(self, prelude: Prelude | None = None, budget: int = DEFAULT_BUDGET):
        self.prelude = prelude if prelude is not None else default_prelude()
        self.budget = budget
        self.def_rules = self.prelude.rules()
        self.rules: list[Rule] = [beta_rule, *self.def_rules, add_rule]
        self.rule_map = {r.rule_id: r for r in self.rules}
        self._arities = {d.name: d.arity for d in self.prelude.definitions}
        self._arities["+"] = 2
        self._arities[CONS_NAME] = 2
        self.whnf = self._build_whnf()
        self.strategies: dict[str, Strategy] = {
            "outermost": self._build_nf(),
            "innermost": self._build_innermost(),
        }
        # (expr, mode) -> (status, final, count); pure cache over immutable
        # strategies, never holds "budget" entries.
        self._walk_memo: dict[tuple[Expr, str], tuple[str, Expr, int]] = {}
        self._firsts_memo: dict[tuple[Expr, str], list[StepChoice]] = {}

    # -- strategy construction ------------------------------------------------

    def _build_whnf(self) -> Strategy:
        def body(w: Strategy) -> Strategy:
            by_def = [definition_strategy(d, w) for d in self.prelude.definitions]
            add = partial_sequence(
                [check_is_fun("+", 2), arg(1, 2, w), arg(2, 2, w), lift(add_rule)]
            )
            step = lift(beta_rule)
            for s in [*by_def, add]:
                step = Choice(step, s)
            return repeat(spinebu(step))

        return Label("eval.whnf", fix(body))

    def _build_nf(self) -> Strategy:
        whnf = self.whnf

        def body(nf: Strategy) -> Strategy:
            into_cells = Sequence(
                check_is_fun(CONS_NAME, 2), Sequence(arg(1, 2, nf), arg(2, 2, nf))
            )
            return Sequence(whnf, LeftBiased(into_cells, SUCCEED))

        return Label("eval.nf", fix(body))

    def _build_innermost(self) -> Strategy:
        step: Strategy = lift(beta_rule)
        for r in [*self.def_rules, add_rule]:
            step = Choice(step, lift(r))
        return Label("eval.innermost", innermost(step))

    # -- step enumeration -----------------------------------------------------

    def firsts(self, e: Expr, mode: str = "outermost") -> list[StepChoice]:
        key = (e, mode)
        cached = self._firsts_memo.get(key)
        if cached is None:
            if mode == "free":
                cached = self._free_firsts(e)
            else:
                cached = firsts(self.strategies[mode], Context(e), remainders=False)
            if len(self._firsts_memo) >= 100_000:
                self._firsts_memo.clear()
            self._firsts_memo[key] = cached
        return cached

    def _free_firsts(self, e: Expr) -> list[StepChoice]:
        out: list[StepChoice] = []
        seen: set[tuple[str, Path, Expr]] = set()
        anywhere = [
            StepChoice(r.rule_id, path, replace_at(e, path, rewritten), r)
            for path in all_paths(e)
            for r in self.rules
            if (rewritten := r.apply(subterm(e, path))) is not None
        ]
        for st in self.firsts(e, "outermost") + self.firsts(e, "innermost") + anywhere:
            key = (st.rule_id, st.focus, st.result)
            if key not in seen:
                seen.add(key)
                out.append(st)
        return out

    # -- values and derivations ----------------------------------------------

    def is_value(self, e: Expr) -> bool:
        """Fully evaluated: literals, lambdas, lists of values, and partial
        applications of known functions."""
        if isinstance(e, (Lit, Abs)):
            return True
        if e == nil:
            return True
        head, parts = spine(e)
        if head == Var(CONS_NAME) and len(parts) == 2:
            return all(self.is_value(p) for p in parts)
        if isinstance(head, Var):
            arity = self._arities.get(head.name)
            return arity is not None and len(parts) < arity
        return False

    def derive(self, e: Expr, mode: str = "outermost") -> Derivation:
        scan_mode = "outermost" if mode == "free" else mode
        steps: list[Step] = []
        current = e
        while True:
            cands = self.firsts(current, scan_mode)
            if not cands:
                status = "complete" if self.is_value(current) else "stuck"
                return Derivation(e, tuple(steps), status)
            if len(steps) >= self.budget:
                return Derivation(e, tuple(steps), "budget")
            st = cands[0]
            steps.append(
                Step(st.rule_id, st.rule.annotation, st.focus, current, st.result)
            )
            current = st.result

    def _walk(self, e: Expr, mode: str) -> tuple[str, Expr, int]:
        """Like derive but memoized and without step records: the status,
        final term, and step count reachable from e."""
        path: list[Expr] = []
        current = e
        while True:
            cached = self._walk_memo.get((current, mode))
            if cached is not None:
                status, final, count = cached
                break
            cands = self.firsts(current, mode)
            if not cands:
                status = "complete" if self.is_value(current) else "stuck"
                final, count = current, 0
                self._walk_memo[(current, mode)] = (status, final, 0)
                break
            path.append(current)
            if len(path) > self.budget:
                return "budget", current, len(path)
            current = cands[0].result
        for i, node in enumerate(reversed(path), 1):
            self._walk_memo[(node, mode)] = (status, final, count + i)
        total = count + len(path)
        if total > self.budget:
            return "budget", final, total
        return status, final, total

    def steps_remaining(self, e: Expr, mode: str = "outermost") -> int:
        status, _, count = self._walk(e, mode)
        if status == "budget":
            raise BudgetExceeded(
                f"no normal form within {self.budget} steps for {pretty(e)}"
            )
        return count

    def normal_form(self, e: Expr) -> Expr:
        """Outermost normal form, used for semantic comparisons in every mode."""
        status, final, _ = self._walk(e, "outermost")
        if status == "budget":
            raise BudgetExceeded(
                f"no normal form within {self.budget} steps for {pretty(e)}"
            )
        return final

    def hint(self, e: Expr, mode: str = "outermost") -> StepChoice | None:
        cands = self.firsts(e, mode)
        return cands[0] if cands else None

    # -- diagnosis ------------------------------------------------------------

    def diagnose(self, current: Expr, submitted_text: str, mode: str) -> Diagnosis:
        try:
            submitted = parse(submitted_text)
        except ParseError as exc:
            return Diagnosis("ParseError", message=str(exc))
        permitted = self.firsts(current, mode)
        expected = tuple(pretty(st.result) for st in permitted)
        if submitted == current:
            return Diagnosis(
                "Incorrect", message="(no step taken)", expected=expected
            )
        for st in permitted:
            if st.result == submitted:
                return Diagnosis(
                    "CorrectStep",
                    rule_id=st.rule_id,
                    steps_remaining=self._countdown(submitted, mode),
                )
        try:
            nf_sub = self.normal_form(submitted)
            if permitted and nf_sub == self.normal_form(permitted[0].result):
                return Diagnosis(
                    "EquivalentButOffStrategy",
                    steps_remaining=self._countdown(submitted, mode),
                    expected=expected,
                )
            if nf_sub == self.normal_form(current):
                return Diagnosis(
                    "CorrectResultWrongPath",
                    steps_remaining=self._countdown(submitted, mode),
                    expected=expected,
                )
        except BudgetExceeded:
            return Diagnosis(
                "Incorrect",
                message=f"no normal form within {self.budget} steps",
                expected=expected,
            )
        return Diagnosis("Incorrect", expected=expected)

    def _countdown(self, e: Expr, mode: str) -> int | None:
        try:
            return self.steps_remaining(e, "outermost" if mode == "free" else mode)
        except BudgetExceeded:
            return None

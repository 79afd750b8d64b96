"""Command-line front-end: derivations, comparisons, practice, serving.

Derivations print in the textbook layout, one block per step:

      sum ([3,7] ++ [5])
    = { definition sum }
      foldl (+) 0 ([3,7] ++ [5])

Exit codes: 0 success, 1 bad input (expression or configuration), 2 when a
derivation stops on a stuck term or the step budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import zip_longest

from .engine import DEFAULT_BUDGET, BudgetExceeded, Derivation
from .expr import Expr, ParseError, parse, pretty
from .feedback import ScriptError, message_for
from .prelude import PreludeError
from .service import DEFAULT_PORT, AppState, load_state, serve

ENV_PREFIX = "STEPWISE_"


def _fail(message: str) -> int:
    print(f"stepwise: {message}", file=sys.stderr)
    return 1


def _load(args: argparse.Namespace) -> AppState:
    return load_state(
        prelude_path=args.prelude,
        script_path=args.script,
        budget=args.budget,
    )


def _steps_phrase(n: int) -> str:
    return "1 step remaining" if n == 1 else f"{n} steps remaining"


# -- derive -------------------------------------------------------------------


def format_derivation(d: Derivation, numbered: bool = False) -> list[str]:
    def state_line(index: int, e: Expr) -> str:
        if numbered:
            return f"{index:>3}  {pretty(e)}"
        return f"  {pretty(e)}"

    lines = [state_line(0, d.start)]
    for index, step in enumerate(d.steps, start=1):
        lines.append(f"= {{ {step.annotation} }}")
        lines.append(state_line(index, step.after))
    return lines


def _finish(d: Derivation, budget: int) -> int:
    if d.status == "stuck":
        print(f"stepwise: stuck, no rule applies to {pretty(d.final)}", file=sys.stderr)
        return 2
    if d.status == "budget":
        print(f"stepwise: stopped after {budget} steps", file=sys.stderr)
        return 2
    return 0


def cmd_derive(args: argparse.Namespace) -> int:
    try:
        state = _load(args)
        e = parse(args.expr)
    except (ParseError, PreludeError, ScriptError, OSError, ValueError) as exc:
        return _fail(str(exc))
    d = state.engine.derive(e, args.strategy)
    print("\n".join(format_derivation(d, args.numbered)))
    return _finish(d, state.engine.budget)


# -- compare ------------------------------------------------------------------


def format_comparison(inner: Derivation, outer: Derivation) -> list[str]:
    left = ["innermost", *format_derivation(inner)]
    right = ["outermost", *format_derivation(outer)]
    width = max(len(line) for line in left) + 4
    lines = [
        f"{a:<{width}}{b}".rstrip()
        for a, b in zip_longest(left, right, fillvalue="")
    ]
    footer = (
        f"innermost: {len(inner.steps)} steps   outermost: {len(outer.steps)} steps"
    )
    return lines + ["", footer]


def cmd_compare(args: argparse.Namespace) -> int:
    try:
        state = _load(args)
        e = parse(args.expr)
    except (ParseError, PreludeError, ScriptError, OSError, ValueError) as exc:
        return _fail(str(exc))
    inner = state.engine.derive(e, "innermost")
    outer = state.engine.derive(e, "outermost")
    print("\n".join(format_comparison(inner, outer)))
    code_inner = _finish(inner, state.engine.budget)
    code_outer = _finish(outer, state.engine.budget)
    return max(code_inner, code_outer)


# -- practice -----------------------------------------------------------------


def _print_expected(expected: tuple[str, ...]) -> None:
    if expected:
        print("Permitted next steps:")
        for text in expected:
            print(f"  {text}")


def _practice_round(state: AppState, current: Expr, line: str, mode: str) -> Expr:
    """Handle one submission; returns the (possibly advanced) current term."""
    engine = state.engine
    diag = engine.diagnose(current, line, mode)
    if diag.kind == "ParseError":
        print(diag.message)
        return current
    if diag.kind == "CorrectStep":
        annotation = engine.rule_map[diag.rule_id].annotation
        detail = (
            f" ({_steps_phrase(diag.steps_remaining)})"
            if diag.steps_remaining is not None
            else ""
        )
        print(f"Correct — {annotation}{detail}")
        return parse(line)
    if diag.kind == "EquivalentButOffStrategy":
        print("Equivalent, but not the strategy's next step.")
        _print_expected(diag.expected)
        return current
    if diag.kind == "CorrectResultWrongPath":
        print("That result is reachable, but not by a permitted next step.")
        _print_expected(diag.expected)
        return current
    message = f" — {diag.message}" if diag.message else ""
    print(f"Incorrect{message}")
    _print_expected(diag.expected)
    return current


def _countdown_mode(mode: str) -> str:
    return "outermost" if mode == "free" else mode


def cmd_practice(args: argparse.Namespace) -> int:
    try:
        state = _load(args)
        current = parse(args.expr)
    except (ParseError, PreludeError, ScriptError, OSError, ValueError) as exc:
        return _fail(str(exc))
    engine = state.engine
    mode = args.strategy
    print(f"Practicing {mode} evaluation. Enter the next step,")
    print("or :hint, :steps, :quit.")
    print()
    print(f"  {pretty(current)}")
    while engine.firsts(current, mode):
        try:
            line = input("> ").strip()
        except EOFError:
            print()
            return 0
        if not line:
            continue
        if line == ":quit":
            return 0
        if line == ":hint":
            st = engine.hint(current, mode)
            print(f"Hint: {message_for(state.script, st.rule_id, engine.rule_map)}")
            continue
        if line == ":steps":
            try:
                n = engine.steps_remaining(current, _countdown_mode(mode))
                print(_steps_phrase(n).capitalize())
            except BudgetExceeded as exc:
                print(str(exc))
            continue
        if line.startswith(":"):
            print(f"Unknown command {line}. Commands: :hint, :steps, :quit.")
            continue
        advanced = _practice_round(state, current, line, mode)
        if advanced is not current:
            current = advanced
            print(f"  {pretty(current)}")
    if engine.is_value(current):
        print(f"Done: {pretty(current)} is in normal form.")
        return 0
    print(f"stepwise: stuck, no rule applies to {pretty(current)}", file=sys.stderr)
    return 2


# -- serve --------------------------------------------------------------------


def _env(name: str, default: str | None = None) -> str | None:
    return os.environ.get(ENV_PREFIX + name, default)


def resolve_serve_settings(args: argparse.Namespace) -> dict:
    """Flag beats environment beats default."""
    port = args.port if args.port is not None else _env("PORT", str(DEFAULT_PORT))
    budget = args.budget if args.budget is not None else _env("BUDGET")
    cors = args.cors if args.cors is not None else _env("CORS", "*")
    settings = {
        "port": int(port),
        "prelude_path": args.prelude or _env("PRELUDE"),
        "script_path": args.script or _env("SCRIPT"),
        "examples_path": args.examples or _env("EXAMPLES"),
        "budget": int(budget) if budget is not None else None,
        "cors_origins": tuple(o for o in str(cors).split(",") if o),
    }
    return settings


def cmd_serve(args: argparse.Namespace) -> int:
    try:
        settings = resolve_serve_settings(args)
    except ValueError as exc:
        return _fail(f"bad serve configuration: {exc}")
    load_kwargs = dict(
        prelude_path=settings["prelude_path"],
        script_path=settings["script_path"],
        examples_path=settings["examples_path"],
    )
    if settings["budget"] is not None:
        load_kwargs["budget"] = settings["budget"]
    try:
        state = load_state(**load_kwargs)
    except (PreludeError, ScriptError, OSError, ValueError) as exc:
        return _fail(str(exc))
    serve(state, port=settings["port"], cors_origins=settings["cors_origins"])
    return 0


# -- argument parsing ---------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--prelude", help="path to a prelude of function definitions")
    parser.add_argument("--script", help="path to a feedback script")
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="maximum number of rewrite steps",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stepwise",
        description="Stepwise evaluation of lazy functional expressions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    derive = sub.add_parser("derive", help="print a full derivation")
    derive.add_argument("expr")
    derive.add_argument(
        "--strategy",
        choices=("innermost", "outermost", "free"),
        default="outermost",
    )
    derive.add_argument(
        "--numbered", action="store_true", help="number the derivation states"
    )
    _add_common(derive)
    derive.set_defaults(run=cmd_derive)

    compare = sub.add_parser(
        "compare", help="innermost and outermost derivations side by side"
    )
    compare.add_argument("expr")
    _add_common(compare)
    compare.set_defaults(run=cmd_compare)

    practice = sub.add_parser("practice", help="interactive next-step practice")
    practice.add_argument("expr")
    practice.add_argument(
        "--strategy",
        choices=("innermost", "outermost", "free"),
        default="outermost",
    )
    _add_common(practice)
    practice.set_defaults(run=cmd_practice)

    srv = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    srv.add_argument("--port", type=int, default=None)
    srv.add_argument("--prelude", default=None)
    srv.add_argument("--script", default=None)
    srv.add_argument("--budget", type=int, default=None)
    srv.add_argument("--examples", default=None)
    srv.add_argument(
        "--cors",
        default=None,
        help="comma-separated allowed origins; empty disables CORS",
    )
    srv.set_defaults(run=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())

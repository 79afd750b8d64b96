"""Stepwise evaluator and practice tutor for a small functional language."""

from .engine import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Derivation,
    Diagnosis,
    Engine,
    Step,
)
from .expr import Abs, App, Expr, Lit, ParseError, Var, parse, pretty
from .feedback import FeedbackScript, ScriptError, load_script, message_for
from .prelude import Prelude, PreludeError, default_prelude, load_prelude
from .rules import Rule, builtin_rules
from .service import create_app, load_state
from .strategy import Context, StepChoice, firsts, succeeds

__version__ = "0.1.0"

__all__ = [
    "Abs",
    "App",
    "BudgetExceeded",
    "Context",
    "DEFAULT_BUDGET",
    "Derivation",
    "Diagnosis",
    "Engine",
    "Expr",
    "FeedbackScript",
    "Lit",
    "ParseError",
    "Prelude",
    "PreludeError",
    "Rule",
    "ScriptError",
    "Step",
    "StepChoice",
    "Var",
    "builtin_rules",
    "create_app",
    "default_prelude",
    "firsts",
    "load_prelude",
    "load_script",
    "load_state",
    "message_for",
    "parse",
    "pretty",
    "succeeds",
]

"""JSON-over-HTTP back-end exposing the engine to front-ends.

One POST endpoint carries every service; the request names the service and
supplies expressions as plain text. Responses always come back with HTTP
200 and an `ok` flag, so a front-end only ever deals with one failure
shape. The prelude and rule set are read-only after startup; the feedback
script can be swapped atomically while serving.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import metadata

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .engine import DEFAULT_BUDGET, MODES, BudgetExceeded, Derivation, Engine
from .expr import Expr, ParseError, parse, pretty
from .feedback import EMPTY_SCRIPT, FeedbackScript, load_script_file, message_for
from .prelude import default_prelude, load_prelude_file
from .strategy import StepChoice

DEFAULT_PORT = 8315

DEFAULT_EXAMPLES = [
    "sum ([3,7] ++ [5])",
    "double (1 + 2)",
    "sum [1,2,3,4]",
    "sum' [1,2]",
    "sum'' [1,2]",
    "foldl (+) 0 [3,7,5]",
    "(id id) 3",
]

SERVICES = (
    "examples",
    "derivation",
    "onefirst",
    "stepsremaining",
    "apply",
    "diagnose",
)


class ServiceError(Exception):
    """Per-request failure reported as ok=false, never as a transport error."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind
        self.message = message


@dataclass
class AppState:
    engine: Engine
    script: FeedbackScript
    examples: list[str]
    prelude_path: str | None = None
    script_path: str | None = None

    def swap_script(self, script: FeedbackScript) -> None:
        # Attribute assignment is the atomic swap; requests read it once.
        self.script = script


def load_state(
    prelude_path: str | None = None,
    script_path: str | None = None,
    budget: int = DEFAULT_BUDGET,
    examples_path: str | None = None,
) -> AppState:
    """Build the shared state, raising on any bad input file."""
    prelude = load_prelude_file(prelude_path) if prelude_path else default_prelude()
    script = load_script_file(script_path) if script_path else EMPTY_SCRIPT
    examples = list(DEFAULT_EXAMPLES)
    if examples_path:
        with open(examples_path, encoding="utf-8") as handle:
            loaded = json.load(handle)
        if not isinstance(loaded, list) or not all(
            isinstance(x, str) for x in loaded
        ):
            raise ValueError(f"{examples_path}: expected a JSON list of strings")
        examples = loaded
    engine = Engine(prelude, budget=budget)
    return AppState(engine, script, examples, prelude_path, script_path)


def _version() -> str:
    try:
        return metadata.version("stepwise")
    except metadata.PackageNotFoundError:
        return "unknown"


# -- request handling ---------------------------------------------------------


def _parse_expr(state: AppState, body: dict) -> Expr:
    text = body.get("expr")
    if not isinstance(text, str):
        raise ServiceError("BadRequest", "missing field 'expr'")
    try:
        return parse(text)
    except ParseError as exc:
        raise ServiceError("ParseError", str(exc)) from exc


def _mode(body: dict) -> str:
    mode = body.get("strategy", "outermost")
    if mode not in MODES:
        raise ServiceError(
            "BadRequest", f"unknown strategy {mode!r}; expected one of {MODES}"
        )
    return mode


def _step_json(state: AppState, st: StepChoice) -> dict:
    return {
        "ruleId": st.rule_id,
        "message": message_for(state.script, st.rule_id, state.engine.rule_map),
        "focus": list(st.focus),
        "result": pretty(st.result),
    }


def _derivation_json(state: AppState, d: Derivation, mode: str) -> dict:
    steps = [
        {
            "ruleId": step.rule_id,
            "annotation": step.annotation,
            "message": message_for(state.script, step.rule_id, state.engine.rule_map),
            "focus": list(step.focus),
            "result": pretty(step.after),
        }
        for step in d.steps
    ]
    return {
        "start": pretty(d.start),
        "strategy": mode,
        "status": d.status,
        "steps": steps,
        "final": pretty(d.final),
        "stepCount": len(steps),
    }


def _svc_examples(state: AppState, body: dict) -> dict:
    return {"examples": list(state.examples)}


def _svc_derivation(state: AppState, body: dict) -> dict:
    e = _parse_expr(state, body)
    mode = _mode(body)
    return _derivation_json(state, state.engine.derive(e, mode), mode)


def _svc_onefirst(state: AppState, body: dict) -> dict:
    e = _parse_expr(state, body)
    st = state.engine.hint(e, _mode(body))
    return {"hint": None if st is None else _step_json(state, st)}


def _svc_stepsremaining(state: AppState, body: dict) -> dict:
    e = _parse_expr(state, body)
    try:
        return {"stepsRemaining": state.engine.steps_remaining(e, _mode(body))}
    except BudgetExceeded as exc:
        raise ServiceError("BudgetExceeded", str(exc)) from exc


def _svc_apply(state: AppState, body: dict) -> dict:
    e = _parse_expr(state, body)
    st = state.engine.hint(e, _mode(body))
    if st is None:
        raise ServiceError("NoStep", f"no step applies to {pretty(e)}")
    return _step_json(state, st)


def _svc_diagnose(state: AppState, body: dict) -> dict:
    e = _parse_expr(state, body)
    submitted = body.get("submitted")
    if not isinstance(submitted, str):
        raise ServiceError("BadRequest", "missing field 'submitted'")
    diag = state.engine.diagnose(e, submitted, _mode(body))
    if diag.rule_id is not None:
        message = message_for(state.script, diag.rule_id, state.engine.rule_map)
    else:
        message = diag.message
    return {
        "kind": diag.kind,
        "ruleId": diag.rule_id,
        "message": message,
        "stepsRemaining": diag.steps_remaining,
        "expected": list(diag.expected),
    }


_SERVICES = {
    "examples": _svc_examples,
    "derivation": _svc_derivation,
    "onefirst": _svc_onefirst,
    "stepsremaining": _svc_stepsremaining,
    "apply": _svc_apply,
    "diagnose": _svc_diagnose,
}


def _ok(service: str, payload) -> JSONResponse:
    return JSONResponse({"ok": True, "service": service, "payload": payload})


def _fail(service: str, kind: str, message: str) -> JSONResponse:
    return JSONResponse(
        {"ok": False, "service": service, "error": {"kind": kind, "message": message}}
    )


def create_app(state: AppState, cors_origins: tuple[str, ...] = ("*",)) -> FastAPI:
    app = FastAPI(title="stepwise", version=_version())
    app.state.stepwise = state

    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.post("/api")
    async def api(request: Request) -> JSONResponse:
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return _fail("", "BadRequest", "request body is not valid JSON")
        if not isinstance(body, dict):
            return _fail("", "BadRequest", "request body must be a JSON object")
        service = body.get("service", "")
        handler = _SERVICES.get(service)
        if handler is None:
            return _fail(
                service, "UnknownService",
                f"unknown service {service!r}; expected one of {SERVICES}",
            )
        try:
            return _ok(service, handler(state, body))
        except ServiceError as exc:
            return _fail(service, exc.kind, exc.message)

    @app.get("/api/examples")
    async def examples() -> JSONResponse:
        return _ok("examples", _svc_examples(state, {}))

    @app.get("/health")
    async def health() -> dict:
        return {
            "status": "ok",
            "version": _version(),
            "budget": state.engine.budget,
            "strategies": list(MODES),
            "prelude": {
                "path": state.prelude_path,
                "definitions": state.engine.prelude.names(),
            },
            "script": {
                "path": state.script_path,
                "entries": len(state.script.entries),
            },
        }

    return app


def serve(
    state: AppState,
    port: int = DEFAULT_PORT,
    cors_origins: tuple[str, ...] = ("*",),
) -> None:
    import uvicorn

    uvicorn.run(create_app(state, cors_origins), host="0.0.0.0", port=port)

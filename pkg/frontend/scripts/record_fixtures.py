"""Record service responses into test/fixtures.ts.

Runs the Python service in process and captures the exact JSON envelopes
for every request the frontend tests replay. The generated module is the
single source of wire truth for the tests; regenerate it after any change
to the service schema:

    python3 scripts/record_fixtures.py
"""
from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from stepwise import Engine, parse, pretty
from stepwise.service import create_app, load_state

RUNNING = "sum ([3,7] ++ [5])"
WRONG_AT = 1
WRONG_SUBMITTED = "foldl (+) 1 ([3,7] ++ [5])"
OFF_STRATEGY_AT = 2
OFF_STRATEGY_SUBMITTED = "foldl (+) 3 ([7] ++ [5])"
PARSE_ERROR_SUBMITTED = "sum (("

OUT = Path(__file__).resolve().parent.parent / "test" / "fixtures.ts"


def fixture_key(body: dict) -> str:
    parts = (
        body["service"],
        body.get("strategy", ""),
        body.get("expr", ""),
        body.get("submitted", ""),
    )
    return "|".join(parts)


def outermost_states() -> list[str]:
    derivation = Engine().derive(parse(RUNNING), "outermost")
    assert derivation.status == "complete"
    return [RUNNING] + [pretty(step.after) for step in derivation.steps]


def main() -> None:
    states = outermost_states()
    client = TestClient(create_app(load_state()))
    recorded: dict[str, dict] = {}

    def record(body: dict) -> None:
        response = client.post("/api", json=body)
        assert response.status_code == 200, body
        recorded[fixture_key(body)] = response.json()

    record({"service": "examples"})
    for before, after in zip(states, states[1:]):
        record(
            {
                "service": "diagnose",
                "expr": before,
                "submitted": after,
                "strategy": "outermost",
            }
        )
    record(
        {
            "service": "diagnose",
            "expr": states[WRONG_AT],
            "submitted": WRONG_SUBMITTED,
            "strategy": "outermost",
        }
    )
    record(
        {
            "service": "diagnose",
            "expr": states[OFF_STRATEGY_AT],
            "submitted": OFF_STRATEGY_SUBMITTED,
            "strategy": "outermost",
        }
    )
    record(
        {
            "service": "diagnose",
            "expr": states[0],
            "submitted": PARSE_ERROR_SUBMITTED,
            "strategy": "outermost",
        }
    )
    for expr in (states[0], states[-1]):
        record({"service": "onefirst", "expr": expr, "strategy": "outermost"})
        record({"service": "stepsremaining", "expr": expr, "strategy": "outermost"})

    body = json.dumps(recorded, indent=2, ensure_ascii=False)
    OUT.write_text(
        "// Generated by scripts/record_fixtures.py. Do not edit by hand.\n"
        "//\n"
        "// Every value is a verbatim response from the practice service; the\n"
        "// tests replay them through a fake fetch that rejects any request\n"
        "// whose key is not recorded here.\n"
        "\n"
        f"export const RUNNING_EXAMPLE = {json.dumps(RUNNING)};\n"
        "\n"
        f"export const OUTERMOST_STATES: string[] = {json.dumps(states, indent=2)};\n"
        "\n"
        "export const WRONG_STEP = {\n"
        f"  atIndex: {WRONG_AT},\n"
        f"  submitted: {json.dumps(WRONG_SUBMITTED)},\n"
        "};\n"
        "\n"
        "export const OFF_STRATEGY_STEP = {\n"
        f"  atIndex: {OFF_STRATEGY_AT},\n"
        f"  submitted: {json.dumps(OFF_STRATEGY_SUBMITTED)},\n"
        "};\n"
        "\n"
        f"export const PARSE_ERROR_SUBMITTED = {json.dumps(PARSE_ERROR_SUBMITTED)};\n"
        "\n"
        f"export const RECORDED: Record<string, unknown> = {body};\n",
        encoding="utf-8",
    )
    print(f"wrote {OUT} ({len(recorded)} responses)")


if __name__ == "__main__":
    main()

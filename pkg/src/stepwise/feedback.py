"""Feedback texts for rule identifiers.

Rule ids are stable; the texts shown to a student are not. A small script
file maps ids to display text so wording (or language) can change without
touching the evaluator. Lookups always produce something: script entry
first, then the rule's own description, then the bare id.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .rules import Rule


class ScriptError(Exception):
    """A feedback script line that does not parse."""


@dataclass(frozen=True)
class FeedbackScript:
    entries: Mapping[str, str] = field(default_factory=dict)
    locale: str | None = None

    def get(self, rule_id: str) -> str | None:
        return self.entries.get(rule_id)


EMPTY_SCRIPT = FeedbackScript()


def load_script(source: str, locale: str | None = None) -> FeedbackScript:
    """Parse the line-oriented `<rule.id> = <text>` format.

    Blank lines and lines starting with `#` are skipped; `#` elsewhere is
    ordinary text. Later entries override earlier ones. Ids are not checked
    against any rule set, since scripts may address prelude-generated rules.
    """
    entries: dict[str, str] = {}
    for number, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, eq, text = line.partition("=")
        if not eq:
            raise ScriptError(f"line {number}: expected '<rule.id> = <text>'")
        rule_id = key.strip()
        if not rule_id:
            raise ScriptError(f"line {number}: missing rule id before '='")
        entries[rule_id] = text.strip()
    return FeedbackScript(entries, locale)


def load_script_file(path: str, locale: str | None = None) -> FeedbackScript:
    with open(path, encoding="utf-8") as handle:
        source = handle.read()
    try:
        return load_script(source, locale)
    except ScriptError as exc:
        raise ScriptError(f"{path}: {exc}") from exc


def message_for(
    script: FeedbackScript, rule_id: str, rules: Mapping[str, Rule]
) -> str:
    """Display text for a rule id: script entry, else description, else id."""
    text = script.get(rule_id)
    if text is not None:
        return text
    rule = rules.get(rule_id)
    if rule is not None and rule.description:
        return rule.description
    return rule_id

"""Tests for feedback script parsing and message resolution."""

from __future__ import annotations

import random
import string

import pytest

from stepwise.engine import Engine
from stepwise.expr import parse
from stepwise.feedback import (
    EMPTY_SCRIPT,
    FeedbackScript,
    ScriptError,
    load_script,
    load_script_file,
    message_for,
)
from stepwise.rules import Rule, builtin_rules

FOLDL_TEXT = (
    "Apply the fold left rule to process a list using an operator that "
    "associates to the left"
)


class TestLoadScript:
    def test_single_mapping(self):
        script = load_script(f"eval.foldl.rule = {FOLDL_TEXT}")
        assert script.get("eval.foldl.rule") == FOLDL_TEXT

    def test_empty_source_has_no_entries(self):
        assert load_script("").entries == {}
        assert load_script("\n\n  \n").entries == {}

    def test_later_entry_wins(self):
        script = load_script("eval.sum.rule = first\neval.sum.rule = second")
        assert script.get("eval.sum.rule") == "second"

    def test_comments_and_blank_lines_are_skipped(self):
        script = load_script(
            "# header comment\n"
            "\n"
            "eval.sum.rule = Sum it\n"
            "   # indented comment\n"
        )
        assert script.entries == {"eval.sum.rule": "Sum it"}

    def test_unknown_ids_are_retained(self):
        script = load_script("eval.mystery.rule = Who knows")
        assert script.get("eval.mystery.rule") == "Who knows"

    def test_surrounding_whitespace_is_trimmed(self):
        script = load_script("   eval.sum.rule   =   Sum it   ")
        assert script.entries == {"eval.sum.rule": "Sum it"}

    def test_text_may_contain_equals_sign(self):
        script = load_script("eval.add.rule = rewrite a + b = c")
        assert script.get("eval.add.rule") == "rewrite a + b = c"

    def test_text_may_contain_hash(self):
        # Only whole-line comments exist; '#' inside text is kept.
        script = load_script("eval.add.rule = step #1 of the sum")
        assert script.get("eval.add.rule") == "step #1 of the sum"

    def test_missing_equals_reports_line_number(self):
        with pytest.raises(ScriptError, match="line 3"):
            load_script("# ok\neval.sum.rule = fine\nthis line is broken\n")

    def test_missing_rule_id_reports_line_number(self):
        with pytest.raises(ScriptError, match="line 1"):
            load_script("= text without an id")

    def test_locale_tag_is_carried(self):
        assert load_script("", locale="nl").locale == "nl"
        assert load_script("").locale is None

    def test_load_script_file_round_trip(self, tmp_path):
        path = tmp_path / "feedback.txt"
        path.write_text(f"eval.foldl.rule = {FOLDL_TEXT}\n", encoding="utf-8")
        script = load_script_file(str(path))
        assert script.get("eval.foldl.rule") == FOLDL_TEXT

    def test_load_script_file_error_names_the_file(self, tmp_path):
        path = tmp_path / "broken.txt"
        path.write_text("no equals here\n", encoding="utf-8")
        with pytest.raises(ScriptError, match=r"broken\.txt.*line 1"):
            load_script_file(str(path))


@pytest.fixture(scope="module")
def rule_map():
    return Engine().rule_map


class TestMessageFor:
    def test_empty_script_falls_back_to_description(self, rule_map):
        text = message_for(EMPTY_SCRIPT, "eval.sum.rule", rule_map)
        assert text == "Calculate the sum of a list of numbers"

    def test_unknown_id_falls_back_to_the_id(self, rule_map):
        assert message_for(EMPTY_SCRIPT, "eval.nope.rule", rule_map) == "eval.nope.rule"

    def test_generated_rule_uses_its_pragma_description(self, rule_map):
        text = message_for(EMPTY_SCRIPT, "eval.double.rule", rule_map)
        assert text == "double function to double a number."

    def test_script_entry_overrides_description(self, rule_map):
        script = load_script(f"eval.foldl.rule = {FOLDL_TEXT}")
        assert message_for(script, "eval.foldl.rule", rule_map) == FOLDL_TEXT

    def test_rule_without_description_falls_back_to_id(self):
        bare = Rule("eval.bare.rule")
        assert message_for(EMPTY_SCRIPT, "eval.bare.rule", {"eval.bare.rule": bare}) == (
            "eval.bare.rule"
        )

    def test_builtin_descriptions_resolve(self, rule_map):
        by_id = {r.rule_id: r for r in builtin_rules()}
        for rule_id, rule in by_id.items():
            assert message_for(EMPTY_SCRIPT, rule_id, rule_map) == rule.description

    def test_total_and_deterministic_for_arbitrary_ids(self, rule_map):
        rng = random.Random(11)
        alphabet = string.ascii_letters + string.digits + "._-"
        scripts = [
            EMPTY_SCRIPT,
            load_script("eval.sum.rule = Sum override"),
            FeedbackScript({"weird id with spaces": "still fine"}),
        ]
        for _ in range(300):
            rule_id = "".join(
                rng.choice(alphabet) for _ in range(rng.randrange(0, 30))
            )
            for script in scripts:
                once = message_for(script, rule_id, rule_map)
                again = message_for(script, rule_id, rule_map)
                assert isinstance(once, str)
                assert once == again


class TestScriptIndependence:
    def test_swapping_scripts_never_changes_diagnosis(self):
        # The script feeds rendering only; step acceptance must not see it.
        eng = Engine()
        cases = [
            ("sum ([3,7] ++ [5])", "foldl (+) 0 ([3,7] ++ [5])", "outermost"),
            ("sum ([3,7] ++ [5])", "sum [3,7,5]", "outermost"),
            ("1 + 2", "4", "innermost"),
            ("double 3", "3 + 3", "free"),
        ]
        before = [eng.diagnose(parse(cur), sub, mode) for cur, sub, mode in cases]
        loud = load_script(
            "\n".join(f"{rid} = OVERRIDE {i}" for i, rid in enumerate(eng.rule_map))
        )
        for rule_id in eng.rule_map:
            assert message_for(loud, rule_id, eng.rule_map).startswith("OVERRIDE")
        after = [eng.diagnose(parse(cur), sub, mode) for cur, sub, mode in cases]
        assert before == after

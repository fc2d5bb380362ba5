"""Game and profile document parsing."""

import json
from fractions import Fraction

import pytest

from goalgames import DocumentError, parse_game_document
from goalgames.documents import (
    dump_game,
    game_from_mapping,
    game_to_mapping,
    parse_profile_document,
)

from helpers import abo_game

F = Fraction

AB_DOC = {
    "agents": 2,
    "goals": 2,
    "costs": ["0", "1/2", "1"],
    "thresholds": ["1", "1"],
    "motivations": [["5/4", "1/4"], ["1/4", "5/4"]],
}


def test_parse_matches_standard_game():
    game = parse_game_document(json.dumps(AB_DOC))
    assert game == abo_game("AB")


def test_round_trip():
    game = abo_game("AOB")
    assert game_from_mapping(game_to_mapping(game)) == game
    assert parse_game_document(dump_game(game)) == game


def test_decimal_strings_stay_exact():
    doc = dict(AB_DOC, costs=["0", "0.5", "1"])
    game = parse_game_document(json.dumps(doc))
    assert game.costs.choices == (F(0), F(1, 2), F(1))


def test_integer_literals_are_accepted():
    doc = dict(AB_DOC, thresholds=[1, 1])
    game = parse_game_document(json.dumps(doc))
    assert game.thresholds == (F(1), F(1))


def test_float_literals_are_rejected():
    doc = dict(AB_DOC, thresholds=[1.0, 1.0])
    with pytest.raises(DocumentError, match="rational string"):
        parse_game_document(json.dumps(doc))


def test_zero_denominator_reports_line_and_column():
    text = json.dumps(dict(AB_DOC, thresholds=["1/0", "1"]), indent=2)
    with pytest.raises(DocumentError) as err:
        parse_game_document(text, path="game.json")
    assert "1/0" in str(err.value)
    assert err.value.line is not None
    expected_line = next(
        i + 1 for i, line in enumerate(text.splitlines()) if '"1/0"' in line
    )
    assert err.value.line == expected_line
    assert str(err.value).startswith(f"game.json:{expected_line}:")


def test_json_syntax_error_reports_position():
    with pytest.raises(DocumentError) as err:
        parse_game_document("{ not json", path="bad.json")
    assert err.value.line == 1


@pytest.mark.parametrize(
    "mutate,message",
    [
        (lambda d: d.pop("costs"), "missing field"),
        (lambda d: d.update(extra=1), "unknown field"),
        (lambda d: d.update(agents=0), "positive integer"),
        (lambda d: d.update(thresholds=["-1", "1"]), "must be positive"),
        (lambda d: d.update(motivations=[["1", "1"]]), "N x M"),
        (lambda d: d.update(costs=["0", "0", "1"]), "strictly increasing"),
    ],
)
def test_structural_errors(mutate, message):
    doc = json.loads(json.dumps(AB_DOC))
    mutate(doc)
    with pytest.raises(DocumentError, match=message):
        game_from_mapping(doc)


def test_profile_document():
    game = abo_game("AB")
    profile = parse_profile_document(
        json.dumps({"contributions": [["1", "0"], ["0", "1"]]}), game
    )
    assert profile == ((2, 0), (0, 2))


def test_profile_value_must_be_a_cost_choice():
    game = abo_game("AB")
    with pytest.raises(DocumentError, match="not one of the cost choices"):
        parse_profile_document(
            json.dumps({"contributions": [["1", "0"], ["0", "1/3"]]}), game
        )


def test_profile_shape_must_match():
    game = abo_game("AB")
    with pytest.raises(DocumentError, match="N x M"):
        parse_profile_document(json.dumps({"contributions": [["1", "0"]]}), game)

"""Game and profile documents: JSON with exact rational strings.

A game document looks like::

    {
      "agents": 2,
      "goals": 2,
      "costs": ["0", "1/2", "1"],
      "thresholds": ["1", "1"],
      "motivations": [["5/4", "1/4"], ["1/4", "5/4"]]
    }

Rationals are written as strings so they stay exact; bare integers are also
accepted.  Parse failures report the line and column of the offending token
where it can be located.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping

from .core import CostSet, Game, Profile, profile_from_values
from .rational import format_exact, parse_rational


class DocumentError(ValueError):
    """A malformed game or profile document."""

    def __init__(self, message: str, path: str = "<document>",
                 line: int | None = None, column: int | None = None,
                 token: str | None = None):
        super().__init__(message)
        self.message = message
        self.path = path
        self.line = line
        self.column = column
        self.token = token

    def __str__(self) -> str:
        if self.line is not None:
            return f"{self.path}:{self.line}:{self.column}: {self.message}"
        return f"{self.path}: {self.message}"


def _rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(
            f"{where} must be a rational string (floats lose exactness)",
            token=value if isinstance(value, str) else None,
        )
    try:
        return parse_rational(str(value))
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}", token=str(value)) from None


def _positive_int(data: Mapping[str, Any], field: str) -> int:
    value = data.get(field)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise DocumentError(f"field {field!r} must be a positive integer")
    return value


def game_from_mapping(data: Mapping[str, Any]) -> Game:
    """Build a Game from a decoded document; thresholds must be positive."""
    if not isinstance(data, Mapping):
        raise DocumentError("game document must be an object")
    known = {"agents", "goals", "costs", "thresholds", "motivations"}
    unknown = set(data) - known
    if unknown:
        raise DocumentError(f"unknown field {sorted(unknown)[0]!r}")
    missing = known - set(data)
    if missing:
        raise DocumentError(f"missing field {sorted(missing)[0]!r}")
    n_agents = _positive_int(data, "agents")
    n_goals = _positive_int(data, "goals")
    raw_costs = data["costs"]
    if not isinstance(raw_costs, list):
        raise DocumentError("field 'costs' must be an array of rational strings")
    try:
        costs = CostSet(tuple(_rational(c, "cost") for c in raw_costs))
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc)) from None
    raw_thresholds = data["thresholds"]
    if not isinstance(raw_thresholds, list) or len(raw_thresholds) != n_goals:
        raise DocumentError("field 'thresholds' must list one rational per goal")
    thresholds = tuple(_rational(t, "threshold") for t in raw_thresholds)
    for t in thresholds:
        if t <= 0:
            raise DocumentError(
                f"threshold {format_exact(t)} must be positive", token=format_exact(t)
            )
    raw_w = data["motivations"]
    if (
        not isinstance(raw_w, list)
        or len(raw_w) != n_agents
        or any(not isinstance(row, list) or len(row) != n_goals for row in raw_w)
    ):
        raise DocumentError("field 'motivations' must be an N x M array of rationals")
    motivations = tuple(
        tuple(_rational(w, "motivation") for w in row) for row in raw_w
    )
    try:
        return Game(n_agents, n_goals, costs, thresholds, motivations)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _locate(text: str, token: str | None) -> tuple[int | None, int | None]:
    if not token:
        return None, None
    index = text.find(json.dumps(token))
    if index < 0:
        index = text.find(token)
    if index < 0:
        return None, None
    line = text.count("\n", 0, index) + 1
    column = index - (text.rfind("\n", 0, index) + 1) + 1
    return line, column


def _parse_json(text: str, path: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, path=path, line=exc.lineno, column=exc.colno) from None


def parse_game_document(text: str, path: str = "<game>") -> Game:
    data = _parse_json(text, path)
    try:
        return game_from_mapping(data)
    except DocumentError as exc:
        line, column = _locate(text, exc.token)
        raise DocumentError(exc.message, path=path, line=line, column=column,
                            token=exc.token) from None


def load_game(path: str) -> Game:
    with open(path, encoding="utf-8") as handle:
        return parse_game_document(handle.read(), path=path)


def profile_from_mapping(data: Mapping[str, Any], game: Game) -> Profile:
    if not isinstance(data, Mapping) or "contributions" not in data:
        raise DocumentError("profile document must carry a 'contributions' matrix")
    raw = data["contributions"]
    if (
        not isinstance(raw, list)
        or len(raw) != game.n_agents
        or any(not isinstance(row, list) or len(row) != game.n_goals for row in raw)
    ):
        raise DocumentError("'contributions' must be an N x M array of rationals")
    values = [[_rational(v, "contribution") for v in row] for row in raw]
    try:
        return profile_from_values(game, values)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def parse_profile_document(text: str, game: Game, path: str = "<profile>") -> Profile:
    data = _parse_json(text, path)
    try:
        return profile_from_mapping(data, game)
    except DocumentError as exc:
        line, column = _locate(text, exc.token)
        raise DocumentError(exc.message, path=path, line=line, column=column,
                            token=exc.token) from None


def load_profile(path: str, game: Game) -> Profile:
    with open(path, encoding="utf-8") as handle:
        return parse_profile_document(handle.read(), game, path=path)


def game_to_mapping(game: Game) -> dict[str, Any]:
    return {
        "agents": game.n_agents,
        "goals": game.n_goals,
        "costs": [format_exact(c) for c in game.costs.choices],
        "thresholds": [format_exact(t) for t in game.thresholds],
        "motivations": [[format_exact(w) for w in row] for row in game.motivations],
    }


def dump_game(game: Game) -> str:
    return json.dumps(game_to_mapping(game), indent=2)

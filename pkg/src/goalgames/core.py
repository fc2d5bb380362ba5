"""Exact multi-goal contribution games.

A game couples N agents with M goals.  Every agent picks one contribution
from a shared cost set for each goal; a goal counts as achieved when the
sum of the contributions in its column reaches the goal's threshold
(equality achieves).  An agent's utility is the negative of everything it
spent plus, for each achieved goal, that agent's motivation entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

# Agent-major matrix of choice indices into the game's cost set.
Profile = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CostSet:
    """Ordered contribution choices c_1 < ... < c_K, all non-negative, K >= 2."""

    choices: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        choices = tuple(Fraction(c) for c in self.choices)
        object.__setattr__(self, "choices", choices)
        if len(choices) < 2:
            raise ValueError("cost set needs at least two choices")
        if choices[0] < 0:
            raise ValueError("cost choices must be non-negative")
        if any(a >= b for a, b in zip(choices, choices[1:])):
            raise ValueError("cost choices must be strictly increasing")

    def __len__(self) -> int:
        return len(self.choices)

    def __getitem__(self, index: int) -> Fraction:
        return self.choices[index]

    def index_of(self, value: Fraction) -> int:
        """Index of an exact cost value; ValueError if it is not a choice."""
        try:
            return self.choices.index(Fraction(value))
        except ValueError:
            raise ValueError(f"{value} is not one of the cost choices") from None


@dataclass(frozen=True)
class Game:
    """An N-agent, M-goal contribution game.

    `thresholds` of variant games built by the scoring module may be zero
    or negative (such goals are achieved by any column); games built from
    user input must have positive thresholds, which `standard_game` and the
    document parser enforce.
    """

    n_agents: int
    n_goals: int
    costs: CostSet
    thresholds: tuple[Fraction, ...]
    motivations: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.n_agents < 1 or self.n_goals < 1:
            raise ValueError("a game needs at least one agent and one goal")
        thresholds = tuple(Fraction(t) for t in self.thresholds)
        motivations = tuple(tuple(Fraction(w) for w in row) for row in self.motivations)
        object.__setattr__(self, "thresholds", thresholds)
        object.__setattr__(self, "motivations", motivations)
        if len(thresholds) != self.n_goals:
            raise ValueError("thresholds must list one value per goal")
        if len(motivations) != self.n_agents or any(
            len(row) != self.n_goals for row in motivations
        ):
            raise ValueError("motivations must be an N x M matrix")

    @property
    def n_choices(self) -> int:
        return len(self.costs)

    def motivation_column(self, goal: int) -> tuple[Fraction, ...]:
        return tuple(row[goal] for row in self.motivations)


def validate_profile(game: Game, profile: Profile) -> None:
    """Reject profiles whose shape or indices do not match the game."""
    if len(profile) != game.n_agents or any(len(row) != game.n_goals for row in profile):
        raise ValueError("profile shape does not match the game")
    k = game.n_choices
    for row in profile:
        for index in row:
            if not 0 <= index < k:
                raise ValueError(f"choice index {index} out of range 0..{k - 1}")


def profile_from_values(game: Game, values: Sequence[Sequence[Fraction]]) -> Profile:
    """Convert a matrix of contribution values into a profile of choice indices."""
    if len(values) != game.n_agents or any(len(row) != game.n_goals for row in values):
        raise ValueError("contribution matrix shape does not match the game")
    return tuple(
        tuple(game.costs.index_of(value) for value in row) for row in values
    )


def profile_values(game: Game, profile: Profile) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(game.costs[k] for k in row) for row in profile)


def goal_achieved(game: Game, profile: Profile, goal: int) -> bool:
    """True iff the contributions toward `goal` sum to at least its threshold."""
    if not 0 <= goal < game.n_goals:
        raise IndexError(f"goal index {goal} out of range")
    total = sum(game.costs[row[goal]] for row in profile)
    return total >= game.thresholds[goal]


def utility(game: Game, profile: Profile, agent: int) -> Fraction:
    """Exact utility of one agent: spent contributions against achieved-goal rewards."""
    if not 0 <= agent < game.n_agents:
        raise IndexError(f"agent index {agent} out of range")
    total = Fraction(0)
    for goal in range(game.n_goals):
        total -= game.costs[profile[agent][goal]]
        if goal_achieved(game, profile, goal):
            total += game.motivations[agent][goal]
    return total


@dataclass(frozen=True)
class Classification:
    """Structural classification of a game.

    `is_even` and `is_extreme` qualify individual-purpose games only, so
    they are false whenever `is_individual_purpose` is.
    """

    is_individual_purpose: bool
    is_even: bool
    is_extreme: bool
    universal_threshold: Fraction | None


def classify(game: Game) -> Classification:
    """Check the individual-purpose / even / extreme structure of a game.

    Individual purpose: as many agents as goals, each agent motivated above
    the threshold for its own goal and below it for every other goal.
    Even: individual purpose with one universal threshold.  Extreme:
    individual purpose with every off-diagonal motivation below the
    smallest cost step.
    """
    w = game.motivations
    t = game.thresholds
    individual = game.n_agents == game.n_goals and all(
        (w[i][j] > t[j]) if i == j else (w[i][j] < t[j])
        for i in range(game.n_agents)
        for j in range(game.n_goals)
    )
    even = individual and len(set(t)) == 1
    step = game.costs[1] - game.costs[0]
    extreme = individual and all(
        w[i][j] < step
        for i in range(game.n_agents)
        for j in range(game.n_goals)
        if i != j
    )
    return Classification(
        is_individual_purpose=individual,
        is_even=even,
        is_extreme=extreme,
        universal_threshold=t[0] if even else None,
    )


# ---------------------------------------------------------------------------
# Typed groups and the standard game family used by tables and sweeps.
# ---------------------------------------------------------------------------

# Two-goal type codes have single-letter aliases: A favors goal 1, B favors
# goal 2, O is neutral.  Canonical label order is A < O < B.
ALIAS_TO_CODE = {"A": "20", "O": "11", "B": "02"}
CODE_TO_ALIAS = {code: alias for alias, code in ALIAS_TO_CODE.items()}


def parse_type_code(token: str, n_goals: int) -> str:
    """Normalize one agent type (alias or base-3 digit string) to digits."""
    code = ALIAS_TO_CODE.get(token, token) if n_goals == 2 else token
    if len(code) != n_goals:
        raise ValueError(f"type code {token!r} must have {n_goals} digits")
    if any(d not in "012" for d in code):
        raise ValueError(f"type code {token!r} may only use digits 0, 1, 2")
    return code


def canonical_code_key(code: str) -> tuple[int, ...]:
    # Descending digit order puts high-motivation types first; for two
    # goals this is exactly the A < O < B alias order.
    return tuple(-int(d) for d in code)


def canonical_codes(codes: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(codes, key=canonical_code_key))


def group_label(codes: Sequence[str]) -> str:
    """Canonical printable label: 'AOOB' style for two goals, else dashed codes."""
    ordered = canonical_codes(codes)
    if ordered and len(ordered[0]) == 2 and all(c in CODE_TO_ALIAS for c in ordered):
        return "".join(CODE_TO_ALIAS[c] for c in ordered)
    return "-".join(ordered)


@dataclass(frozen=True)
class GroupSpec:
    """A multiset of agent types plus the shared excess-motivation term."""

    codes: tuple[str, ...]
    delta: Fraction

    def __post_init__(self) -> None:
        codes = tuple(self.codes)
        object.__setattr__(self, "codes", codes)
        object.__setattr__(self, "delta", Fraction(self.delta))
        if not codes:
            raise ValueError("a group needs at least one agent type")
        width = len(codes[0])
        for code in codes:
            if len(code) != width or any(d not in "012" for d in code):
                raise ValueError(f"bad type code {code!r}")
        if self.delta < 0:
            raise ValueError("delta must be non-negative")

    @classmethod
    def parse(cls, tokens: Sequence[str], n_goals: int, delta: Fraction) -> "GroupSpec":
        return cls(tuple(parse_type_code(t, n_goals) for t in tokens), delta)

    @property
    def label(self) -> str:
        return group_label(self.codes)


def standard_choice_values(n_goals: int) -> tuple[Fraction, ...]:
    """The 'defect / cooperate / heroic' contribution levels 0, 1/M, 1."""
    return (Fraction(0), Fraction(1, n_goals), Fraction(1))


def standard_game(n_agents: int, n_goals: int, group: GroupSpec) -> Game:
    """Build the standard game for a typed group.

    Choices are 0, 1/M and 1 effort units (for one goal the middle choice
    collapses onto the heroic one, leaving two distinct costs); every
    threshold is N/M; motivations are the type-digit choice value plus the
    group's delta.  Agents are ordered canonically by type code.
    """
    if n_agents < 1 or n_goals < 1:
        raise ValueError("a game needs at least one agent and one goal")
    if len(group.codes) != n_agents:
        raise ValueError(f"group lists {len(group.codes)} agents, expected {n_agents}")
    if any(len(code) != n_goals for code in group.codes):
        raise ValueError(f"type codes must have {n_goals} digits")
    values = standard_choice_values(n_goals)
    costs = CostSet(tuple(sorted(set(values))))
    thresholds = (Fraction(n_agents, n_goals),) * n_goals
    rows = tuple(
        tuple(values[int(d)] + group.delta for d in code)
        for code in canonical_codes(group.codes)
    )
    return Game(
        n_agents=n_agents,
        n_goals=n_goals,
        costs=costs,
        thresholds=thresholds,
        motivations=rows,
    )


def all_type_codes(n_goals: int) -> list[str]:
    """All 3^M type codes in canonical order."""
    codes = ["".join(digits) for digits in product("012", repeat=n_goals)]
    return sorted(codes, key=canonical_code_key)

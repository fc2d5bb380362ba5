"""Pure-strategy equilibrium enumeration and dominance analysis.

Because utilities are additive across goals and a deviation in one column
never changes any other column's sum, the equilibrium set of the whole
game factors into a Cartesian product of per-goal column equilibria.  That
factoring is an implementation insight rather than a given, so the
exhaustive profile scan (`brute_force_equilibria`) ships permanently as an
independent cross-check.

All kernels run on integer-rescaled values: multiplying every cost,
threshold and motivation by the least common denominator preserves every
comparison exactly and keeps the inner loops in fast machine integers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .core import (
    Classification,
    CostSet,
    Game,
    Profile,
    classify,
    validate_profile,
)

Column = tuple[int, ...]     # one choice index per agent, single goal
Strategy = tuple[int, ...]   # one choice index per goal, single agent

DEFAULT_PROFILE_CAP = 10_000_000
DEFAULT_COLUMN_CAP = 10_000_000
DEFAULT_PAIR_CAP = 1_000_000


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured work cap."""

    def __init__(self, message: str, estimate: int):
        super().__init__(message)
        self.estimate = estimate


def _common_denominator(values: Sequence[Fraction]) -> int:
    return math.lcm(*(v.denominator for v in values))


def _scale_game(game: Game) -> tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], ...]]:
    values = list(game.costs.choices) + list(game.thresholds)
    for row in game.motivations:
        values.extend(row)
    lcd = _common_denominator(values)
    costs = tuple(int(c * lcd) for c in game.costs.choices)
    thresholds = tuple(int(t * lcd) for t in game.thresholds)
    motivations = tuple(tuple(int(w * lcd) for w in row) for row in game.motivations)
    return costs, thresholds, motivations


def _column_key(game: Game, goal: int) -> tuple[tuple[int, ...], int, tuple[int, ...]]:
    column = game.motivation_column(goal)
    values = list(game.costs.choices) + [game.thresholds[goal]] + list(column)
    lcd = _common_denominator(values)
    return (
        tuple(int(c * lcd) for c in game.costs.choices),
        int(game.thresholds[goal] * lcd),
        tuple(int(w * lcd) for w in column),
    )


@lru_cache(maxsize=None)
def _column_equilibria(costs: tuple[int, ...], threshold: int,
                       w_column: tuple[int, ...]) -> tuple[tuple[Column, ...], int]:
    """All stable columns of one goal's game, plus how many achieve the goal."""
    k = len(costs)
    n = len(w_column)
    stable_columns: list[Column] = []
    achieving = 0
    for column in product(range(k), repeat=n):
        total = sum(costs[c] for c in column)
        achieved = total >= threshold
        stable = True
        for agent, choice in enumerate(column):
            w = w_column[agent]
            others = total - costs[choice]
            current = -costs[choice] + (w if achieved else 0)
            for alt in range(k):
                if alt == choice:
                    continue
                gain = -costs[alt] + (w if others + costs[alt] >= threshold else 0)
                if gain > current:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            stable_columns.append(column)
            if achieved:
                achieving += 1
    return tuple(stable_columns), achieving


def goal_summary(game: Game, goal: int,
                 column_cap: int = DEFAULT_COLUMN_CAP) -> tuple[tuple[Column, ...], int]:
    """Equilibrium columns of one goal and the count of achieving ones."""
    if not 0 <= goal < game.n_goals:
        raise IndexError(f"goal index {goal} out of range")
    work = game.n_choices ** game.n_agents
    if work > column_cap:
        raise CapExceeded(
            f"goal enumeration needs {work} columns, above the cap of {column_cap}",
            work,
        )
    return _column_equilibria(*_column_key(game, goal))


def single_goal_equilibria(game: Game, goal: int,
                           column_cap: int = DEFAULT_COLUMN_CAP) -> list[Column]:
    """Columns of one goal where no agent can improve its per-goal term alone.

    Lexicographic in the choice indices, so output order is reproducible.
    """
    columns, _ = goal_summary(game, goal, column_cap)
    return list(columns)


@dataclass(frozen=True)
class EquilibriumSet:
    """Per-goal equilibrium columns; the full set is their Cartesian product."""

    per_goal: tuple[tuple[Column, ...], ...]
    achieved_counts: tuple[int, ...]

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(columns) for columns in self.per_goal)

    @property
    def total_count(self) -> int:
        return math.prod(self.counts)

    @property
    def achieved_fractions(self) -> tuple[Fraction | None, ...]:
        """Per-goal fraction of equilibria achieving the goal; None when empty."""
        return tuple(
            Fraction(achieved, len(columns)) if columns else None
            for columns, achieved in zip(self.per_goal, self.achieved_counts)
        )

    def profiles(self) -> Iterator[Profile]:
        """Materialize the product as agent-major profiles (small sets only)."""
        if any(not columns for columns in self.per_goal):
            return
        n_agents = len(self.per_goal[0][0])
        for combo in product(*self.per_goal):
            yield tuple(
                tuple(combo[j][i] for j in range(len(self.per_goal)))
                for i in range(n_agents)
            )


def equilibria(game: Game, column_cap: int = DEFAULT_COLUMN_CAP) -> EquilibriumSet:
    """Per-goal equilibrium columns for every goal of the game."""
    summaries = [goal_summary(game, j, column_cap) for j in range(game.n_goals)]
    return EquilibriumSet(
        per_goal=tuple(columns for columns, _ in summaries),
        achieved_counts=tuple(achieved for _, achieved in summaries),
    )


def is_equilibrium(game: Game, profile: Profile) -> bool:
    """True iff no agent can raise any single per-goal term by itself.

    Because utility is additive over goals this agrees with scanning all
    K^M whole-row deviations, which the brute-force oracle does.
    """
    validate_profile(game, profile)
    costs, thresholds, motivations = _scale_game(game)
    k = len(costs)
    for goal in range(game.n_goals):
        total = sum(costs[row[goal]] for row in profile)
        threshold = thresholds[goal]
        achieved = total >= threshold
        for agent, row in enumerate(profile):
            choice = row[goal]
            w = motivations[agent][goal]
            others = total - costs[choice]
            current = -costs[choice] + (w if achieved else 0)
            for alt in range(k):
                if alt == choice:
                    continue
                gain = -costs[alt] + (w if others + costs[alt] >= threshold else 0)
                if gain > current:
                    return False
    return True


def brute_force_equilibria(game: Game,
                           profile_cap: int = DEFAULT_PROFILE_CAP) -> list[Profile]:
    """Exhaustively scan all K^(MN) profiles with full-row deviation checks.

    The permanent oracle for the product decomposition: it never consults
    the per-goal factoring.  Profiles come back in lexicographic order.
    """
    total = game.n_choices ** (game.n_goals * game.n_agents)
    if total > profile_cap:
        raise CapExceeded(
            f"brute force needs {total} profiles, above the cap of {profile_cap}",
            total,
        )
    costs, thresholds, motivations = _scale_game(game)
    n, m = game.n_agents, game.n_goals
    strategies = tuple(product(range(game.n_choices), repeat=m))
    goals = range(m)
    results: list[Profile] = []
    for assignment in product(strategies, repeat=n):
        column_sums = [sum(costs[assignment[i][j]] for i in range(n)) for j in goals]
        stable = True
        for i in range(n):
            row = assignment[i]
            w = motivations[i]
            current = 0
            others = []
            for j in goals:
                current -= costs[row[j]]
                if column_sums[j] >= thresholds[j]:
                    current += w[j]
                others.append(column_sums[j] - costs[row[j]])
            for alt in strategies:
                if alt == row:
                    continue
                value = 0
                for j in goals:
                    value -= costs[alt[j]]
                    if others[j] + costs[alt[j]] >= thresholds[j]:
                        value += w[j]
                if value > current:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            results.append(assignment)
    return results


# ---------------------------------------------------------------------------
# Iterated elimination of strictly dominated strategies.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SurvivorSets:
    """Per-agent strategies that survive iterated strict-dominance elimination."""

    per_agent: tuple[tuple[Strategy, ...], ...]


def iesds(game: Game, order: str = "batch",
          pair_cap: int = DEFAULT_PAIR_CAP) -> SurvivorSets:
    """Remove strictly dominated strategies until a fixed point.

    A strategy goes when some other surviving strategy beats it against
    every combination of surviving opponent strategies.  Strict dominance
    makes the fixed point independent of elimination order; `order` picks
    "batch" (collect a round's removals, then apply) or "immediate"
    (remove each find on the spot) so tests can confirm that.
    """
    if order not in ("batch", "immediate"):
        raise ValueError("order must be 'batch' or 'immediate'")
    costs, thresholds, motivations = _scale_game(game)
    n, m = game.n_agents, game.n_goals
    goals = range(m)
    strategies = tuple(product(range(game.n_choices), repeat=m))
    survivors: list[list[Strategy]] = [list(strategies) for _ in range(n)]
    utility_cache: dict[tuple, int] = {}

    def agent_utility(agent: int, own: Strategy, opponents: tuple[Strategy, ...]) -> int:
        key = (agent, own, opponents)
        cached = utility_cache.get(key)
        if cached is not None:
            return cached
        w = motivations[agent]
        value = 0
        for j in goals:
            column = costs[own[j]] + sum(costs[opp[j]] for opp in opponents)
            value -= costs[own[j]]
            if column >= thresholds[j]:
                value += w[j]
        utility_cache[key] = value
        return value

    def dominated(agent: int, opponents: list[tuple[Strategy, ...]]) -> list[Strategy]:
        found = []
        pool = survivors[agent]
        for candidate in pool:
            for rival in pool:
                if rival == candidate:
                    continue
                if all(
                    agent_utility(agent, rival, opp) > agent_utility(agent, candidate, opp)
                    for opp in opponents
                ):
                    found.append(candidate)
                    break
        return found

    while True:
        sizes = [len(s) for s in survivors]
        round_work = sum(
            sizes[i] * (sizes[i] - 1) * math.prod(sizes[:i] + sizes[i + 1:])
            for i in range(n)
        )
        if round_work > pair_cap:
            raise CapExceeded(
                f"dominance round needs {round_work} comparisons, above the cap of {pair_cap}",
                round_work,
            )
        removed = False
        if order == "batch":
            marked = []
            for agent in range(n):
                opponents = list(product(*(survivors[j] for j in range(n) if j != agent)))
                marked.append(dominated(agent, opponents))
            for agent, losers in enumerate(marked):
                if losers:
                    removed = True
                    survivors[agent] = [s for s in survivors[agent] if s not in losers]
        else:
            for agent in range(n):
                opponents = list(product(*(survivors[j] for j in range(n) if j != agent)))
                for loser in dominated(agent, opponents):
                    survivors[agent].remove(loser)
                    removed = True
        if not removed:
            break
    return SurvivorSets(per_agent=tuple(tuple(sorted(s)) for s in survivors))


# ---------------------------------------------------------------------------
# Constructive check of the unique-diagonal-equilibrium theorem.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    """Result of checking the unique anti-coordination equilibrium claim.

    `applicable` records whether the game satisfies the hypotheses (extreme
    even individual purpose, cheapest choice 0, dearest choice equal to the
    universal threshold).  The remaining flags report what enumeration
    found; for applicable games a correct implementation must see all three
    true.  `equilibrium` carries the profile when it is unique.
    """

    applicable: bool
    unique_equilibrium: bool
    equilibrium_is_diagonal: bool
    all_goals_achieved: bool
    equilibrium: Profile | None


def verify_importance_of_being_different(game: Game) -> TheoremReport:
    """Enumerate equilibria and compare against the theorem's guarantees."""
    shape: Classification = classify(game)
    applicable = (
        shape.is_extreme
        and shape.is_even
        and game.costs[0] == 0
        and game.costs[len(game.costs) - 1] == shape.universal_threshold
    )
    found = equilibria(game)
    unique = all(found.counts) and found.total_count == 1
    profile: Profile | None = None
    diagonal = False
    if unique:
        profile = next(found.profiles())
        diagonal = game.n_agents == game.n_goals and all(
            game.costs[profile[i][j]]
            == (game.thresholds[j] if i == j else Fraction(0))
            for i in range(game.n_agents)
            for j in range(game.n_goals)
        )
    achieved = all(
        columns and achieved_count == len(columns)
        for columns, achieved_count in zip(found.per_goal, found.achieved_counts)
    )
    return TheoremReport(
        applicable=applicable,
        unique_equilibrium=unique,
        equilibrium_is_diagonal=diagonal,
        all_goals_achieved=achieved,
        equilibrium=profile,
    )


def random_applicable_game(n_agents: int, rng: random.Random) -> Game:
    """A random game satisfying the theorem hypotheses (exact rationals).

    Universal threshold g drawn from {1, 2, 3}; choices {0, g/2, g}; own-goal
    motivations g + 1 + r with r an eighth-grained rational in [0, 1];
    cross-goal motivations from {0, s/4, s/2} where s is the smallest cost
    step, keeping the game extreme.
    """
    if n_agents < 1:
        raise ValueError("need at least one agent")
    g = Fraction(rng.randint(1, 3))
    step = g / 2
    costs = CostSet((Fraction(0), step, g))
    rows = []
    for i in range(n_agents):
        row = []
        for j in range(n_agents):
            if i == j:
                row.append(g + 1 + Fraction(rng.randint(0, 8), 8))
            else:
                row.append(rng.choice((Fraction(0), step / 4, step / 2)))
        rows.append(tuple(row))
    return Game(
        n_agents=n_agents,
        n_goals=n_agents,
        costs=costs,
        thresholds=(g,) * n_agents,
        motivations=tuple(rows),
    )

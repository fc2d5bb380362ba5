"""Shared builders for the test suite."""

from fractions import Fraction
import random

from goalgames import GroupSpec, standard_game
from goalgames.core import CostSet, Game

QUARTER = Fraction(1, 4)

COST_POOL = [
    Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3),
    Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3),
]


def abo_game(codes, n_goals=2, delta=QUARTER) -> Game:
    """Standard game for a typed group given as 'A'/'O'/'B' letters or digit codes."""
    group = GroupSpec.parse(list(codes), n_goals, delta)
    return standard_game(len(codes), n_goals, group)


def random_game(rng: random.Random, max_agents=3, max_goals=3) -> Game:
    """A small random game with exact rational payoffs (seeded, reproducible)."""
    n = rng.randint(1, max_agents)
    m = rng.randint(1, max_goals)
    k = rng.choice((2, 3))
    costs = CostSet(tuple(sorted(rng.sample(COST_POOL, k))))
    thresholds = tuple(
        Fraction(rng.randint(1, 3 * n), rng.choice((1, 2, 3))) for _ in range(m)
    )
    motivations = tuple(
        tuple(Fraction(rng.randint(-2, 10), rng.choice((1, 2, 4))) for _ in range(m))
        for _ in range(n)
    )
    return Game(n, m, costs, thresholds, motivations)

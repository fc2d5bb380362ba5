"""Group performance scores, divergence, rank tables and binned comparisons.

The four scores all reduce to per-goal achieved fractions a_j (the share of
a goal's equilibrium columns that achieve it):

* MGA   mean of the a_j,
* ALL   product of the a_j (probability every goal is achieved),
* DD    mean MGA over the scenarios where one agent turns into a defector,
* VL    mean MGA over the scenarios where one threshold moves one effort
        unit up or down.

Scenario games with an empty equilibrium set contribute 0 to the DD/VL
averages and are counted; a base game with an empty set reports every score
as missing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Sequence

from .core import Game
from .equilibrium import goal_summary

if TYPE_CHECKING:  # pragma: no cover - only for annotations
    from .sweep import SweepRecord


def _achieved_fractions(game: Game) -> list[Fraction | None]:
    fractions = []
    for goal in range(game.n_goals):
        columns, achieved = goal_summary(game, goal)
        fractions.append(Fraction(achieved, len(columns)) if columns else None)
    return fractions


def _scenario_mga(game: Game) -> Fraction | None:
    fractions = _achieved_fractions(game)
    if any(f is None for f in fractions):
        return None
    return sum(fractions, Fraction(0)) / game.n_goals


def mga(game: Game) -> Fraction | None:
    """Mean achieved fraction across goals; None if any goal has no equilibrium."""
    return _scenario_mga(game)


def all_score(game: Game) -> Fraction | None:
    """Product of the per-goal achieved fractions; None on an empty goal set."""
    fractions = _achieved_fractions(game)
    if any(f is None for f in fractions):
        return None
    return math.prod(fractions, start=Fraction(1))


def _defector_variants(game: Game, motivation: Fraction) -> Iterable[Game]:
    low_row = (motivation,) * game.n_goals
    for i in range(game.n_agents):
        rows = list(game.motivations)
        rows[i] = low_row
        yield replace(game, motivations=tuple(rows))


def _load_variants(game: Game) -> Iterable[Game]:
    one = Fraction(1)
    for goal in range(game.n_goals):
        for shifted in (game.thresholds[goal] + one, game.thresholds[goal] - one):
            thresholds = list(game.thresholds)
            thresholds[goal] = shifted
            yield replace(game, thresholds=tuple(thresholds))


def _scenario_average(variants: Iterable[Game]) -> tuple[Fraction, int]:
    total = Fraction(0)
    count = 0
    empty = 0
    for variant in variants:
        count += 1
        value = _scenario_mga(variant)
        if value is None:
            empty += 1
        else:
            total += value
    return total / count, empty


def dd_score(game: Game, defector_motivation: Fraction) -> Fraction:
    """Mean scenario MGA when each agent in turn becomes a defector.

    The defector keeps playing but wants nothing: its motivation row is
    replaced by the given value toward every goal.
    """
    value, _ = _scenario_average(_defector_variants(game, defector_motivation))
    return value


def vl_score(game: Game) -> Fraction:
    """Mean scenario MGA when each threshold in turn moves one unit up or down.

    A threshold at or below zero is achieved by every column; one above
    what all agents can jointly pay is simply never achieved.
    """
    value, _ = _scenario_average(_load_variants(game))
    return value


@dataclass(frozen=True)
class ScoreReport:
    """The four scores of one game; None marks a missing value."""

    mga: Fraction | None
    all_score: Fraction | None
    dd: Fraction | None
    vl: Fraction | None
    no_equilibrium_scenarios: int


def score_report(game: Game, defector_motivation: Fraction) -> ScoreReport:
    """All four scores at once, sharing the per-goal enumeration work."""
    fractions = _achieved_fractions(game)
    if any(f is None for f in fractions):
        return ScoreReport(None, None, None, None, 0)
    mean = sum(fractions, Fraction(0)) / game.n_goals
    product = math.prod(fractions, start=Fraction(1))
    dd_value, dd_empty = _scenario_average(_defector_variants(game, defector_motivation))
    vl_value, vl_empty = _scenario_average(_load_variants(game))
    return ScoreReport(
        mga=mean,
        all_score=product,
        dd=dd_value,
        vl=vl_value,
        no_equilibrium_scenarios=dd_empty + vl_empty,
    )


def divergence(game: Game) -> Fraction:
    """Largest mean squared motivation difference over agent pairs."""
    worst = Fraction(0)
    rows = game.motivations
    for i in range(game.n_agents):
        for j in range(i + 1, game.n_agents):
            gap = sum(((a - b) ** 2 for a, b in zip(rows[i], rows[j])), Fraction(0))
            worst = max(worst, gap)
    return worst / game.n_goals


def mean_motivation(game: Game) -> Fraction:
    """Total motivation divided by the number of agents."""
    total = sum((w for row in game.motivations for w in row), Fraction(0))
    return total / game.n_agents


# ---------------------------------------------------------------------------
# Rank table: per-score minimum tied ranks plus pairwise wins and ties.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RankedRow:
    label: str
    mga: Fraction
    all_score: Fraction
    dd: Fraction
    vl: Fraction
    mga_rank: int
    all_rank: int
    dd_rank: int
    vl_rank: int
    wins: int
    ties: int


def _min_tied_ranks(values: Sequence[Fraction]) -> list[int]:
    return [1 + sum(other > value for other in values) for value in values]


def rank_table(rows: Sequence[tuple[str, ScoreReport]]) -> list[RankedRow]:
    """Rank groups on each score and settle every pairwise comparison.

    Ranks descend on the exact score values with minimum tied rank.  For
    each pair of groups, whichever holds strictly more better-ranked scores
    records a win; an equal split records a tie for both.  Rows come back
    sorted by wins, then ties, then label.
    """
    for label, report in rows:
        if None in (report.mga, report.all_score, report.dd, report.vl):
            raise ValueError(f"group {label} is missing a score; cannot rank")
    labels = [label for label, _ in rows]
    columns = [
        [report.mga for _, report in rows],
        [report.all_score for _, report in rows],
        [report.dd for _, report in rows],
        [report.vl for _, report in rows],
    ]
    ranks = [_min_tied_ranks(column) for column in columns]
    count = len(rows)
    wins = [0] * count
    ties = [0] * count
    for i in range(count):
        for j in range(i + 1, count):
            better_i = sum(ranks[s][i] < ranks[s][j] for s in range(4))
            better_j = sum(ranks[s][j] < ranks[s][i] for s in range(4))
            if better_i > better_j:
                wins[i] += 1
            elif better_j > better_i:
                wins[j] += 1
            else:
                ties[i] += 1
                ties[j] += 1
    order = sorted(range(count), key=lambda i: (-wins[i], -ties[i], labels[i]))
    return [
        RankedRow(
            label=labels[i],
            mga=columns[0][i],
            all_score=columns[1][i],
            dd=columns[2][i],
            vl=columns[3][i],
            mga_rank=ranks[0][i],
            all_rank=ranks[1][i],
            dd_rank=ranks[2][i],
            vl_rank=ranks[3][i],
            wins=wins[i],
            ties=ties[i],
        )
        for i in order
    ]


# ---------------------------------------------------------------------------
# Binned divergent-versus-non-divergent comparison (the ribbon data).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinnedComparison:
    """Top-group comparison inside one mean-motivation bin.

    Any field other than the bin bounds is None when its side of the split
    has no groups.
    """

    bin_low: Fraction
    bin_high: Fraction
    top_divergent_mga: Fraction | None
    top_nondivergent_mga: Fraction | None
    difference: Fraction | None
    ribbon_width: Fraction | None


def _median(values: Sequence[Fraction]) -> Fraction:
    ordered = sorted(values)
    middle = len(ordered) // 2
    if len(ordered) % 2:
        return ordered[middle]
    return (ordered[middle - 1] + ordered[middle]) / 2


def _mad(values: Sequence[Fraction]) -> Fraction:
    center = _median(values)
    return _median([abs(v - center) for v in values])


def binned_top_difference(records: Iterable["SweepRecord"], width: Fraction,
                          divergence_cutoff: Fraction) -> list[BinnedComparison]:
    """Split records into mean-motivation bins and compare the two top groups.

    Bins are [k*width, (k+1)*width).  Within a bin, groups split on
    divergence >= cutoff; the difference is top divergent MGA minus top
    non-divergent MGA, and the ribbon is the sum of the two sides' median
    absolute deviations (no scaling constant).  Records without an MGA are
    skipped.
    """
    if width <= 0:
        raise ValueError("bin width must be positive")
    bins: dict[int, tuple[list[Fraction], list[Fraction]]] = {}
    for record in records:
        if record.mga is None:
            continue
        index = math.floor(record.mean_motivation / width)
        divergent_side, other_side = bins.setdefault(index, ([], []))
        if record.divergence >= divergence_cutoff:
            divergent_side.append(record.mga)
        else:
            other_side.append(record.mga)
    comparisons = []
    for index in sorted(bins):
        divergent_side, other_side = bins[index]
        top_div = max(divergent_side) if divergent_side else None
        top_non = max(other_side) if other_side else None
        both = divergent_side and other_side
        comparisons.append(
            BinnedComparison(
                bin_low=index * width,
                bin_high=(index + 1) * width,
                top_divergent_mga=top_div,
                top_nondivergent_mga=top_non,
                difference=top_div - top_non if both else None,
                ribbon_width=_mad(divergent_side) + _mad(other_side) if both else None,
            )
        )
    return comparisons

"""Group enumeration, score sweeps and CSV emission.

A sweep walks every multiset of agent types of a given size (scores are
invariant under agent permutation, so ordered rosters would only repeat
work), scores each group's standard game and emits deterministic CSV.
Groups are independent work items, so a sweep can fan out over a process
pool; results are merged back in canonical order and the CSV bytes do not
depend on the worker count.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations_with_replacement
from typing import IO, Sequence

from .core import GroupSpec, all_type_codes, standard_choice_values, standard_game
from .equilibrium import CapExceeded, equilibria
from .rational import format_display, format_exact
from .scoring import (
    BinnedComparison,
    RankedRow,
    ScoreReport,
    divergence,
    mean_motivation,
    score_report,
)

DEFAULT_WORK_CAP = 100_000_000

ABO_UNIVERSE = ("20", "11", "02")  # A, O, B in canonical order


@dataclass(frozen=True)
class SweepConfig:
    n_agents: int
    n_goals: int
    delta: Fraction = Fraction(1, 4)
    type_universe: str = "full-grid"  # "ABO" (two-goal aliases) or "full-grid"
    divergence_cutoff: Fraction = Fraction(1, 2)
    bin_width: Fraction = Fraction(1, 10)
    worker_count: int = 1
    work_cap: int | None = DEFAULT_WORK_CAP

    def __post_init__(self) -> None:
        if self.n_agents < 1 or self.n_goals < 1:
            raise ValueError("need at least one agent and one goal")
        if self.bin_width <= 0:
            raise ValueError("bin width must be positive")
        if self.worker_count < 1:
            raise ValueError("worker count must be at least 1")


@dataclass(frozen=True)
class SweepRecord:
    """One scored group: the row unit of the sweep CSV."""

    label: str
    n_agents: int
    n_goals: int
    mean_motivation: Fraction
    divergence: Fraction
    divergent: bool
    mga: Fraction | None
    all_score: Fraction | None
    dd: Fraction | None
    vl: Fraction | None
    equilibrium_counts: tuple[int, ...]
    no_equilibrium_scenarios: int

    @property
    def scores(self) -> ScoreReport:
        return ScoreReport(self.mga, self.all_score, self.dd, self.vl,
                           self.no_equilibrium_scenarios)


def universe_codes(config: SweepConfig) -> tuple[str, ...]:
    if config.type_universe == "ABO":
        if config.n_goals != 2:
            raise ValueError("the ABO universe is defined for two-goal games only")
        return ABO_UNIVERSE
    if config.type_universe == "full-grid":
        return tuple(all_type_codes(config.n_goals))
    raise ValueError(f"unknown type universe {config.type_universe!r}")


def enumerate_groups(config: SweepConfig) -> list[GroupSpec]:
    """All size-N multisets over the type universe, in canonical order."""
    codes = universe_codes(config)
    return [
        GroupSpec(codes=combo, delta=config.delta)
        for combo in combinations_with_replacement(codes, config.n_agents)
    ]


def estimate_work(config: SweepConfig) -> int:
    """Predicted column evaluations: groups x scenarios x goals x K^N."""
    types = len(universe_codes(config))
    groups = math.comb(types + config.n_agents - 1, config.n_agents)
    scenarios = 1 + config.n_agents + 2 * config.n_goals
    k = len(set(standard_choice_values(config.n_goals)))
    return groups * scenarios * config.n_goals * k ** config.n_agents


def evaluate_group(config: SweepConfig, group: GroupSpec) -> SweepRecord:
    """Score one group's standard game."""
    game = standard_game(config.n_agents, config.n_goals, group)
    found = equilibria(game)
    report = score_report(game, config.delta)
    spread = divergence(game)
    return SweepRecord(
        label=group.label,
        n_agents=config.n_agents,
        n_goals=config.n_goals,
        mean_motivation=mean_motivation(game),
        divergence=spread,
        divergent=spread >= config.divergence_cutoff,
        mga=report.mga,
        all_score=report.all_score,
        dd=report.dd,
        vl=report.vl,
        equilibrium_counts=found.counts,
        no_equilibrium_scenarios=report.no_equilibrium_scenarios,
    )


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    """Score every group in the configured universe, in canonical order."""
    estimate = estimate_work(config)
    if config.work_cap is not None and estimate > config.work_cap:
        raise CapExceeded(
            f"sweep would need about {estimate} column evaluations, above the "
            f"cap of {config.work_cap}; pass allow_large / --allow-large to run it",
            estimate,
        )
    groups = enumerate_groups(config)
    if config.worker_count == 1:
        return [evaluate_group(config, group) for group in groups]
    worker = partial(evaluate_group, config)
    chunk = max(1, len(groups) // (config.worker_count * 4))
    with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
        return list(pool.map(worker, groups, chunksize=chunk))


# ---------------------------------------------------------------------------
# CSV emission.  Display columns are 2-decimal; *_exact columns keep 'p/q'.
# ---------------------------------------------------------------------------

SWEEP_HEADER = [
    "label", "n_agents", "n_goals",
    "mean_motivation", "mean_motivation_exact",
    "divergence", "divergence_exact", "divergent",
    "mga", "mga_exact", "all", "all_exact",
    "dd", "dd_exact", "vl", "vl_exact",
    "eq_counts", "no_eq_scenarios",
]

TABLE_HEADER = [
    "motivations", "mga", "all", "dd", "vl",
    "mgar", "allr", "ddr", "vlr", "wins", "ties",
]

BINS_HEADER = ["bin_low", "bin_high", "top_div", "top_nondiv", "diff", "ribbon"]


def _writer(stream: IO[str]) -> "csv._writer":
    return csv.writer(stream, lineterminator="\n")


def emit_sweep_csv(records: Sequence[SweepRecord], stream: IO[str]) -> None:
    out = _writer(stream)
    out.writerow(SWEEP_HEADER)
    for r in records:
        out.writerow([
            r.label, r.n_agents, r.n_goals,
            format_display(r.mean_motivation), format_exact(r.mean_motivation),
            format_display(r.divergence), format_exact(r.divergence),
            "true" if r.divergent else "false",
            format_display(r.mga), format_exact(r.mga),
            format_display(r.all_score), format_exact(r.all_score),
            format_display(r.dd), format_exact(r.dd),
            format_display(r.vl), format_exact(r.vl),
            ",".join(str(c) for c in r.equilibrium_counts),
            r.no_equilibrium_scenarios,
        ])


def emit_table_csv(rows: Sequence[RankedRow], stream: IO[str]) -> None:
    out = _writer(stream)
    out.writerow(TABLE_HEADER)
    for row in rows:
        out.writerow([
            row.label,
            format_display(row.mga), format_display(row.all_score),
            format_display(row.dd), format_display(row.vl),
            row.mga_rank, row.all_rank, row.dd_rank, row.vl_rank,
            row.wins, row.ties,
        ])


def emit_bins_csv(bins: Sequence[BinnedComparison], stream: IO[str]) -> None:
    out = _writer(stream)
    out.writerow(BINS_HEADER)
    for b in bins:
        out.writerow([
            format_display(b.bin_low), format_display(b.bin_high),
            format_display(b.top_divergent_mga),
            format_display(b.top_nondivergent_mga),
            format_display(b.difference), format_display(b.ribbon_width),
        ])

"""Exact analysis of multi-goal contribution games.

Construct games, enumerate their pure-strategy equilibria exactly, verify
the unique anti-coordination equilibrium of extreme even individual-purpose
games, score typed groups and sweep whole group universes into CSV.
"""

from .core import (
    Classification,
    CostSet,
    Game,
    GroupSpec,
    Profile,
    classify,
    goal_achieved,
    group_label,
    profile_from_values,
    standard_game,
    utility,
)
from .documents import (
    DocumentError,
    dump_game,
    load_game,
    load_profile,
    parse_game_document,
)
from .equilibrium import (
    CapExceeded,
    EquilibriumSet,
    SurvivorSets,
    TheoremReport,
    brute_force_equilibria,
    equilibria,
    iesds,
    is_equilibrium,
    random_applicable_game,
    single_goal_equilibria,
    verify_importance_of_being_different,
)
from .rational import format_display, format_exact, parse_rational
from .scoring import (
    BinnedComparison,
    RankedRow,
    ScoreReport,
    all_score,
    binned_top_difference,
    dd_score,
    divergence,
    mean_motivation,
    mga,
    rank_table,
    score_report,
    vl_score,
)
from .sweep import (
    SweepConfig,
    SweepRecord,
    emit_bins_csv,
    emit_sweep_csv,
    emit_table_csv,
    enumerate_groups,
    estimate_work,
    run_sweep,
)

__version__ = "0.1.0"

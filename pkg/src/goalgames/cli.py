"""Command-line front end: analyze, table, sweep, verify-theorem.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 work cap exceeded.  Results go to standard output (or the chosen files),
diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from .core import classify, profile_values, utility
from .documents import DocumentError, dump_game, load_game, load_profile
from .equilibrium import (
    CapExceeded,
    equilibria,
    is_equilibrium,
    random_applicable_game,
    verify_importance_of_being_different,
)
from .rational import format_display, format_exact, parse_rational
from .scoring import binned_top_difference, rank_table, score_report
from .sweep import (
    DEFAULT_WORK_CAP,
    SweepConfig,
    emit_bins_csv,
    emit_sweep_csv,
    emit_table_csv,
    run_sweep,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _rational_flag(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goalgames",
        description="Exact equilibrium analysis of multi-goal contribution games.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", help="classify a game file, list equilibria, print scores"
    )
    analyze.add_argument("game", help="path to a game document (JSON)")
    analyze.add_argument("--profile", help="contribution matrix to evaluate")
    analyze.add_argument(
        "--delta", type=_rational_flag, default=Fraction(1, 4),
        help="defector motivation used by the DD score (default 1/4)",
    )

    table = commands.add_parser(
        "table", help="ranked score table for all groups of a size"
    )
    table.add_argument("--agents", type=int, required=True)
    table.add_argument("--goals", type=int, required=True)
    table.add_argument("--delta", type=_rational_flag, default=Fraction(1, 4))
    table.add_argument(
        "--types", choices=["ABO", "full"], default=None,
        help="type universe (default: ABO for two goals, full grid otherwise)",
    )
    table.add_argument("--output", help="write CSV here instead of stdout")

    sweep = commands.add_parser(
        "sweep", help="score the full type grid and write sweep + bins CSVs"
    )
    sweep.add_argument("--agents", type=int, required=True)
    sweep.add_argument("--goals", type=int, required=True)
    sweep.add_argument("--delta", type=_rational_flag, default=Fraction(1, 4))
    sweep.add_argument(
        "--cutoff", type=_rational_flag, default=Fraction(1, 2),
        help="divergence at or above this counts as divergent (default 1/2)",
    )
    sweep.add_argument("--bin-width", type=_rational_flag, default=Fraction(1, 10))
    sweep.add_argument("--workers", type=int, default=1)
    sweep.add_argument(
        "--allow-large", action="store_true",
        help="run even when the work estimate exceeds the built-in cap",
    )
    sweep.add_argument("--out", help="sweep CSV path (default sweep_a{N}_g{M}.csv)")
    sweep.add_argument(
        "--bins-out", help="binned-comparison CSV path (default <out>_bins.csv)"
    )

    verify = commands.add_parser(
        "verify-theorem",
        help="check the unique-diagonal-equilibrium theorem on random games",
    )
    verify.add_argument("--agents", type=int, required=True)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)

    return parser


def _format_score(value: Fraction | None) -> str:
    if value is None:
        return "missing (no equilibrium)"
    return f"{format_display(value)} ({format_exact(value)})"


def _cmd_analyze(args: argparse.Namespace) -> int:
    game = load_game(args.game)
    shape = classify(game)
    found = equilibria(game)
    report = score_report(game, args.delta)

    choices = ", ".join(format_exact(c) for c in game.costs.choices)
    print(f"game: {game.n_agents} agents, {game.n_goals} goals, choices {choices}")
    print("thresholds: " + ", ".join(format_exact(t) for t in game.thresholds))
    if shape.is_individual_purpose:
        parts = ["individual purpose"]
        if shape.is_even:
            parts.append(f"even (universal threshold {format_exact(shape.universal_threshold)})")
        if shape.is_extreme:
            parts.append("extreme")
        print("classification: " + ", ".join(parts))
    else:
        print("classification: not an individual purpose game")
    for goal in range(game.n_goals):
        columns = found.per_goal[goal]
        achieved = found.achieved_counts[goal]
        print(f"goal {goal + 1}: {len(columns)} equilibrium column(s), "
              f"{achieved}/{len(columns) if columns else 0} achieving")
        for column in columns:
            values = ", ".join(format_exact(game.costs[k]) for k in column)
            print(f"  ({values})")
    print(f"total pure equilibria: {found.total_count}")
    print(f"mga: {_format_score(report.mga)}")
    print(f"all: {_format_score(report.all_score)}")
    print(f"dd:  {_format_score(report.dd)}  [defector motivation {format_exact(args.delta)}]")
    print(f"vl:  {_format_score(report.vl)}")
    print(f"no-equilibrium scenarios: {report.no_equilibrium_scenarios}")

    if args.profile:
        profile = load_profile(args.profile, game)
        print("profile contributions:")
        for row in profile_values(game, profile):
            print("  (" + ", ".join(format_exact(v) for v in row) + ")")
        for agent in range(game.n_agents):
            value = utility(game, profile, agent)
            print(f"utility agent {agent + 1}: {format_display(value)} ({format_exact(value)})")
        if is_equilibrium(game, profile):
            print("profile is an equilibrium")
        else:
            print("profile is not an equilibrium")
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    universe = args.types
    if universe is None:
        universe = "ABO" if args.goals == 2 else "full"
    config = SweepConfig(
        n_agents=args.agents,
        n_goals=args.goals,
        delta=args.delta,
        type_universe="ABO" if universe == "ABO" else "full-grid",
    )
    records = run_sweep(config)
    rows = rank_table([(r.label, r.scores) for r in records])
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            emit_table_csv(rows, handle)
    else:
        emit_table_csv(rows, sys.stdout)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        n_agents=args.agents,
        n_goals=args.goals,
        delta=args.delta,
        type_universe="full-grid",
        divergence_cutoff=args.cutoff,
        bin_width=args.bin_width,
        worker_count=args.workers,
        work_cap=None if args.allow_large else DEFAULT_WORK_CAP,
    )
    records = run_sweep(config)
    bins = binned_top_difference(records, config.bin_width, config.divergence_cutoff)
    out_path = args.out or f"sweep_a{args.agents}_g{args.goals}.csv"
    bins_path = args.bins_out or out_path.removesuffix(".csv") + "_bins.csv"
    with open(out_path, "w", encoding="utf-8", newline="") as handle:
        emit_sweep_csv(records, handle)
    with open(bins_path, "w", encoding="utf-8", newline="") as handle:
        emit_bins_csv(bins, handle)
    print(f"wrote {len(records)} records to {out_path} and "
          f"{len(bins)} bins to {bins_path}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify_theorem(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.agents < 2:
        parser.error("verify-theorem needs --agents of at least 2")
    if args.trials < 1:
        parser.error("verify-theorem needs --trials of at least 1")
    rng = random.Random(args.seed)
    failures = 0
    for trial in range(1, args.trials + 1):
        game = random_applicable_game(args.agents, rng)
        report = verify_importance_of_being_different(game)
        passed = (
            report.applicable
            and report.unique_equilibrium
            and report.equilibrium_is_diagonal
            and report.all_goals_achieved
        )
        if passed:
            rows = profile_values(game, report.equilibrium)
            shown = "; ".join(
                "(" + ", ".join(format_exact(v) for v in row) + ")" for row in rows
            )
            print(f"trial {trial}: pass  unique diagonal equilibrium {shown}")
        else:
            failures += 1
            print(f"trial {trial}: FAIL  applicable={report.applicable} "
                  f"unique={report.unique_equilibrium} "
                  f"diagonal={report.equilibrium_is_diagonal} "
                  f"achieved={report.all_goals_achieved}")
            print(dump_game(game))
    print(f"{args.trials - failures}/{args.trials} trials passed")
    return EXIT_OK if failures == 0 else EXIT_VERIFICATION_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "verify-theorem":
            return _cmd_verify_theorem(args, parser)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())

"""FastAPI service wrapping the analysis core.

Run with `uvicorn goalgames.api:app`.  The CLI offers the same operations
for batch use; this surface serves interactive and multi-client callers.
"""

from __future__ import annotations

import random
from fractions import Fraction

from fastapi import FastAPI, HTTPException

from ..core import classify, profile_values, utility
from ..documents import (
    DocumentError,
    game_from_mapping,
    game_to_mapping,
    profile_from_mapping,
)
from ..equilibrium import (
    CapExceeded,
    equilibria,
    is_equilibrium,
    random_applicable_game,
    verify_importance_of_being_different,
)
from ..rational import format_display, format_exact, parse_rational
from ..scoring import binned_top_difference, divergence, mean_motivation, rank_table, score_report
from ..sweep import DEFAULT_WORK_CAP, SweepConfig, run_sweep
from . import schemas

app = FastAPI(
    title="goalgames",
    description="Exact equilibrium analysis of multi-goal contribution games.",
    version="0.1.0",
)


def _value(quantity: Fraction | None) -> schemas.RationalValue | None:
    if quantity is None:
        return None
    return schemas.RationalValue(
        exact=format_exact(quantity), display=format_display(quantity)
    )


def _parse_rational_field(text: str, field: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=f"{field}: {exc}") from None


def _build_game(doc: schemas.GameDocModel):
    try:
        return game_from_mapping(doc.model_dump())
    except DocumentError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/analyze", response_model=schemas.AnalyzeResponse)
def analyze(request: schemas.AnalyzeRequest) -> schemas.AnalyzeResponse:
    game = _build_game(request.game)
    delta = _parse_rational_field(request.delta, "delta")
    try:
        found = equilibria(game)
        report = score_report(game, delta)
    except CapExceeded as exc:
        raise HTTPException(status_code=413, detail=str(exc)) from None
    shape = classify(game)
    goals = [
        schemas.GoalEquilibriaModel(
            goal=j + 1,
            count=len(found.per_goal[j]),
            achieving=found.achieved_counts[j],
            achieved_fraction=_value(found.achieved_fractions[j]),
            columns=[
                [format_exact(game.costs[k]) for k in column]
                for column in found.per_goal[j]
            ],
        )
        for j in range(game.n_goals)
    ]
    profile_report = None
    if request.profile is not None:
        try:
            profile = profile_from_mapping({"contributions": request.profile}, game)
        except DocumentError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        profile_report = schemas.ProfileReportModel(
            contributions=[
                [format_exact(v) for v in row] for row in profile_values(game, profile)
            ],
            utilities=[
                _value(utility(game, profile, agent)) for agent in range(game.n_agents)
            ],
            is_equilibrium=is_equilibrium(game, profile),
        )
    return schemas.AnalyzeResponse(
        classification=schemas.ClassificationModel(
            individual_purpose=shape.is_individual_purpose,
            even=shape.is_even,
            extreme=shape.is_extreme,
            universal_threshold=(
                format_exact(shape.universal_threshold) if shape.is_even else None
            ),
        ),
        goals=goals,
        total_equilibria=found.total_count,
        scores=schemas.ScoresModel(
            mga=_value(report.mga),
            all_score=_value(report.all_score),
            dd=_value(report.dd),
            vl=_value(report.vl),
            no_equilibrium_scenarios=report.no_equilibrium_scenarios,
        ),
        divergence=_value(divergence(game)),
        mean_motivation=_value(mean_motivation(game)),
        profile=profile_report,
    )


@app.post("/table", response_model=schemas.TableResponse)
def table(request: schemas.TableRequest) -> schemas.TableResponse:
    universe = request.types
    if universe is None:
        universe = "ABO" if request.goals == 2 else "full-grid"
    config = SweepConfig(
        n_agents=request.agents,
        n_goals=request.goals,
        delta=_parse_rational_field(request.delta, "delta"),
        type_universe=universe,
    )
    try:
        records = run_sweep(config)
        rows = rank_table([(r.label, r.scores) for r in records])
    except CapExceeded as exc:
        raise HTTPException(status_code=413, detail=str(exc)) from None
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
    return schemas.TableResponse(
        rows=[
            schemas.TableRowModel(
                label=row.label,
                mga=_value(row.mga),
                all_score=_value(row.all_score),
                dd=_value(row.dd),
                vl=_value(row.vl),
                mga_rank=row.mga_rank,
                all_rank=row.all_rank,
                dd_rank=row.dd_rank,
                vl_rank=row.vl_rank,
                wins=row.wins,
                ties=row.ties,
            )
            for row in rows
        ]
    )


@app.post("/sweep", response_model=schemas.SweepResponse)
def sweep(request: schemas.SweepRequest) -> schemas.SweepResponse:
    config = SweepConfig(
        n_agents=request.agents,
        n_goals=request.goals,
        delta=_parse_rational_field(request.delta, "delta"),
        type_universe="full-grid",
        divergence_cutoff=_parse_rational_field(request.cutoff, "cutoff"),
        bin_width=_parse_rational_field(request.bin_width, "bin_width"),
        worker_count=request.workers,
        work_cap=None if request.allow_large else DEFAULT_WORK_CAP,
    )
    try:
        records = run_sweep(config)
    except CapExceeded as exc:
        raise HTTPException(status_code=413, detail=str(exc)) from None
    bins = binned_top_difference(records, config.bin_width, config.divergence_cutoff)
    return schemas.SweepResponse(
        records=[
            schemas.SweepRecordModel(
                label=r.label,
                n_agents=r.n_agents,
                n_goals=r.n_goals,
                mean_motivation=_value(r.mean_motivation),
                divergence=_value(r.divergence),
                divergent=r.divergent,
                mga=_value(r.mga),
                all_score=_value(r.all_score),
                dd=_value(r.dd),
                vl=_value(r.vl),
                eq_counts=list(r.equilibrium_counts),
                no_eq_scenarios=r.no_equilibrium_scenarios,
            )
            for r in records
        ],
        bins=[
            schemas.BinModel(
                bin_low=_value(b.bin_low),
                bin_high=_value(b.bin_high),
                top_div=_value(b.top_divergent_mga),
                top_nondiv=_value(b.top_nondivergent_mga),
                diff=_value(b.difference),
                ribbon=_value(b.ribbon_width),
            )
            for b in bins
        ],
    )


@app.post("/verify-theorem", response_model=schemas.TheoremResponse)
def verify_theorem(request: schemas.TheoremRequest) -> schemas.TheoremResponse:
    rng = random.Random(request.seed)
    results = []
    failures = 0
    for trial in range(1, request.trials + 1):
        game = random_applicable_game(request.agents, rng)
        report = verify_importance_of_being_different(game)
        passed = (
            report.applicable
            and report.unique_equilibrium
            and report.equilibrium_is_diagonal
            and report.all_goals_achieved
        )
        if not passed:
            failures += 1
        contributions = None
        if report.equilibrium is not None:
            contributions = [
                [format_exact(v) for v in row]
                for row in profile_values(game, report.equilibrium)
            ]
        results.append(
            schemas.TrialModel(
                trial=trial,
                passed=passed,
                applicable=report.applicable,
                unique_equilibrium=report.unique_equilibrium,
                equilibrium_is_diagonal=report.equilibrium_is_diagonal,
                all_goals_achieved=report.all_goals_achieved,
                equilibrium=contributions,
                game=schemas.GameDocModel(**game_to_mapping(game)),
            )
        )
    return schemas.TheoremResponse(
        trials=request.trials,
        failures=failures,
        all_passed=failures == 0,
        results=results,
    )

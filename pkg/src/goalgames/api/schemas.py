"""Pydantic request and response models for the HTTP service.

Every rational travels as a string: `exact` carries the 'p/q' form, and
`display` the two-decimal rendering, so clients never see floats.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class GameDocModel(BaseModel):
    agents: int = Field(ge=1)
    goals: int = Field(ge=1)
    costs: list[str]
    thresholds: list[str]
    motivations: list[list[str]]


class RationalValue(BaseModel):
    exact: str
    display: str


class ClassificationModel(BaseModel):
    individual_purpose: bool
    even: bool
    extreme: bool
    universal_threshold: str | None


class GoalEquilibriaModel(BaseModel):
    goal: int
    count: int
    achieving: int
    achieved_fraction: RationalValue | None
    columns: list[list[str]]


class ScoresModel(BaseModel):
    mga: RationalValue | None
    all_score: RationalValue | None
    dd: RationalValue | None
    vl: RationalValue | None
    no_equilibrium_scenarios: int


class ProfileReportModel(BaseModel):
    contributions: list[list[str]]
    utilities: list[RationalValue]
    is_equilibrium: bool


class AnalyzeRequest(BaseModel):
    game: GameDocModel
    profile: list[list[str]] | None = None
    delta: str = "1/4"


class AnalyzeResponse(BaseModel):
    classification: ClassificationModel
    goals: list[GoalEquilibriaModel]
    total_equilibria: int
    scores: ScoresModel
    divergence: RationalValue
    mean_motivation: RationalValue
    profile: ProfileReportModel | None


class TableRequest(BaseModel):
    agents: int = Field(ge=1)
    goals: int = Field(ge=1)
    delta: str = "1/4"
    types: Literal["ABO", "full-grid"] | None = None


class TableRowModel(BaseModel):
    label: str
    mga: RationalValue
    all_score: RationalValue
    dd: RationalValue
    vl: RationalValue
    mga_rank: int
    all_rank: int
    dd_rank: int
    vl_rank: int
    wins: int
    ties: int


class TableResponse(BaseModel):
    rows: list[TableRowModel]


class SweepRequest(BaseModel):
    agents: int = Field(ge=1)
    goals: int = Field(ge=1)
    delta: str = "1/4"
    cutoff: str = "1/2"
    bin_width: str = "1/10"
    workers: int = Field(default=1, ge=1)
    allow_large: bool = False


class SweepRecordModel(BaseModel):
    label: str
    n_agents: int
    n_goals: int
    mean_motivation: RationalValue
    divergence: RationalValue
    divergent: bool
    mga: RationalValue | None
    all_score: RationalValue | None
    dd: RationalValue | None
    vl: RationalValue | None
    eq_counts: list[int]
    no_eq_scenarios: int


class BinModel(BaseModel):
    bin_low: RationalValue
    bin_high: RationalValue
    top_div: RationalValue | None
    top_nondiv: RationalValue | None
    diff: RationalValue | None
    ribbon: RationalValue | None


class SweepResponse(BaseModel):
    records: list[SweepRecordModel]
    bins: list[BinModel]


class TheoremRequest(BaseModel):
    agents: int = Field(ge=2)
    trials: int = Field(default=100, ge=1)
    seed: int = 0


class TrialModel(BaseModel):
    trial: int
    passed: bool
    applicable: bool
    unique_equilibrium: bool
    equilibrium_is_diagonal: bool
    all_goals_achieved: bool
    equilibrium: list[list[str]] | None
    game: GameDocModel


class TheoremResponse(BaseModel):
    trials: int
    failures: int
    all_passed: bool
    results: list[TrialModel]

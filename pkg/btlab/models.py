"""
Report models for the command-line output
"""

from typing import Any, Literal

from pydantic import BaseModel, Field

Status = Literal['passed', 'failed', 'report']


class ExperimentReport(BaseModel):
    """One experiment: what went in, what came out, what it was judged against"""
    name: str
    status: Status
    inputs: dict[str, Any] = Field(default_factory=dict)
    values: dict[str, Any] = Field(default_factory=dict)
    thresholds: dict[str, Any] = Field(default_factory=dict)
    error: str | None = None


class PairReport(BaseModel):
    word: str
    kappa: str
    lam: str
    nu: str
    value: str | None = None
    value_float: float | None = None


class EnvelopeEntry(BaseModel):
    curve_id: str
    value: str
    value_float: float
    best: bool = False


class EnvelopeReport(BaseModel):
    varpi: str
    assumptions: list[str]
    admissible: list[EnvelopeEntry]
    best: list[str]
    best_value: str | None = None
    best_value_float: float | None = None


class Table1Row(BaseModel):
    varpi: str
    ours: str
    iwaniec: str
    ours_4dp: str
    iwaniec_4dp: str
    improvement_percent: float
    improvement_1dp: str
    printed_ours: str
    printed_iwaniec: str
    printed_improvement: str
    values_match: bool
    improvement_within_tolerance: bool
    rounded_matches_printed: bool


class FigureRow(BaseModel):
    varpi: str
    curve_id: str
    value: str


class SieveRow(BaseModel):
    s: str
    F: str
    f: str


class ScanRow(BaseModel):
    q: int
    h: int
    interval_start: int
    interval_len: int
    abs_sum: float
    rstar_ratio: float
    smooth_ratio: float


class ResidueCountRow(BaseModel):
    x: int
    q: int
    a: int
    count: int = Field(ge=0)


class VerificationRow(BaseModel):
    x: int
    q: int
    max_a: int
    max_count: int = Field(ge=0)
    mv_bound: float
    ratio: float


class CommandOutput(BaseModel):
    """Top-level JSON document written to stdout"""
    command: str
    status: Status
    seed: int | None = None
    data: Any = None

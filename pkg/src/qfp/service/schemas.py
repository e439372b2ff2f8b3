"""Request and response models for the fingerprinting service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class EncodeRequest(BaseModel):
    m: int = Field(ge=2, le=64)
    message: int = Field(ge=0)
    search: bool = False
    iterations: int = Field(default=2000, ge=1, le=1_000_000)
    seed: int = 0


class EncodeResponse(BaseModel):
    w: int
    theta: float
    phi: float


class SimulateRequest(BaseModel):
    protocol: Literal["quantum", "entangled"]
    trials: int = Field(ge=1, le=100_000_000)
    seed: int = 0
    dip_depth: float = Field(default=1.0, ge=0.0, le=1.0)
    tau_c: float = Field(default=1e-12, gt=0.0)
    pi0: float = Field(default=0.0, ge=0.0, le=1.0)
    pi1: float = Field(default=0.0, ge=0.0, le=1.0)
    adversary: Literal["wcs", "uniform", "pair"] = "wcs"
    x: Optional[int] = None
    y: Optional[int] = None
    workers: int = Field(default=1, ge=1, le=64)


class AdversaryOut(BaseModel):
    kind: str
    x: Optional[int]
    y: Optional[int]


class StrategyOut(BaseModel):
    pi0: float
    pi1: float


class ModelOut(BaseModel):
    d: float
    tau_c: float


class EmpiricalOut(BaseModel):
    p_same_err: Optional[float]
    p_diff_err: Optional[float]
    wcs_err: Optional[float]


class AnalyticOut(BaseModel):
    p_same_err: float
    p_diff_err: float
    wcs_err: float


class Ci95Out(BaseModel):
    same: Optional[list[float]]
    diff: Optional[list[float]]
    wcs: Optional[list[float]]


class PairCellOut(BaseModel):
    x: int
    y: int
    trials: int
    errors: int
    error_rate: Optional[float]


class SimulateResponse(BaseModel):
    kind: str
    trials: int
    seed: int
    adversary: AdversaryOut
    strategy: StrategyOut
    model: ModelOut
    empirical: EmpiricalOut
    analytic: AnalyticOut
    ci95: Ci95Out
    pair_matrix: Optional[list[PairCellOut]]


class OptimizeRequest(BaseModel):
    p_same: float = Field(ge=0.0, le=1.0)
    p_diff: float = Field(ge=0.0, le=1.0)


class OptimizeResponse(BaseModel):
    pi0: float
    pi1: float
    success: float


class CalibrateRequest(BaseModel):
    csv_text: str
    optimize: bool = False


class CalibrateResponse(BaseModel):
    d: float
    v_off: float
    p_same_err: float
    p_diff_err: float
    strategy: Optional[OptimizeResponse]


class ClassicalRequest(BaseModel):
    shared_bits: int = Field(ge=0, le=2)
    roger: Literal["pure", "mixed"] = "mixed"
    scoring: Literal["one_sided", "two_sided"] = "one_sided"


class ExactValueOut(BaseModel):
    fraction: str
    float: float


class ClassicalResponse(BaseModel):
    best_success: ExactValueOut
    alice_table: list[list[int]]
    bob_table: list[list[int]]
    roger_rule: dict[str, ExactValueOut]


class DipCurveRequest(BaseModel):
    delta: float = Field(ge=0.0, le=1.0)
    dip_depth: float = Field(default=1.0, ge=0.0, le=1.0)
    tau_c: float = Field(default=1e-12, gt=0.0)
    tau_max: float = Field(gt=0.0)
    points: int = Field(default=101, ge=2, le=100_000)


class DipPointOut(BaseModel):
    tau_s: float
    relative_rate: float


class DipCurveResponse(BaseModel):
    points: list[DipPointOut]


class HealthResponse(BaseModel):
    status: str
    version: str

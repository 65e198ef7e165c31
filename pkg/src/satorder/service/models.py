"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

MAX_ELEMENTS = 32


class PosetPayload(BaseModel):
    """A poset as it travels over the wire: strict generating pairs.

    The service closes the pairs transitively and rejects cycles, so clients
    may send any generating set.
    """

    n: int = Field(ge=0, le=MAX_ELEMENTS)
    strict: list[tuple[int, int]] = Field(default_factory=list)
    names: list[str] | None = None

    @model_validator(mode="after")
    def _bounds(self):
        for i, j in self.strict:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"strict pair ({i}, {j}) out of range for n={self.n}")
        if self.names is not None and len(self.names) != self.n:
            raise ValueError("names must list exactly n labels")
        return self


class PosetModel(BaseModel):
    """Normalized poset: the strict field holds exactly the cover pairs."""

    n: int
    strict: list[tuple[int, int]]
    names: list[str] | None = None


class GenerateRequest(BaseModel):
    kind: Literal[
        "chain",
        "antichain",
        "two-plus-two",
        "n-poset",
        "topped-two-two",
        "skew-towers",
        "random",
    ]
    n: int | None = Field(default=None, ge=0, le=MAX_ELEMENTS)
    k: int | None = Field(default=None, ge=1, le=10)
    density: float | None = Field(default=None, ge=0.0, le=1.0)
    seed: int | None = None


class BouquetModel(BaseModel):
    members: list[int]
    top: int


class RepresentationModel(BaseModel):
    ground_size: int
    sets: list[list[int]]
    new_points: list[int] | None = None


class CheckRequest(BaseModel):
    poset: PosetPayload
    method: Literal["fast", "exhaustive", "oracle"] = "fast"


class CheckResponse(BaseModel):
    saturated: bool
    method: str
    witness_bouquets: tuple[BouquetModel, BouquetModel] | None = None
    witness_new_points: list[int] | None = None
    witness_representation: RepresentationModel | None = None


class WitnessRequest(BaseModel):
    poset: PosetPayload


class WitnessResponse(BaseModel):
    saturated: bool
    bouquets: tuple[BouquetModel, BouquetModel] | None = None
    merging: RepresentationModel | None = None
    merged_point: int | None = None
    two_plus_two: tuple[int, int, int, int] | None = None
    intervals: list[tuple[int, int]] | None = None
    canonical_pairs_topped: int | None = None


class RepsRequest(BaseModel):
    poset: PosetPayload


class NewPointMapModel(BaseModel):
    values: list[int]
    injective: bool


class RepsResponse(BaseModel):
    count: int
    maps: list[NewPointMapModel]


class CampaignRequest(BaseModel):
    n_max: int = Field(ge=0, le=8)
    exhaustive_limit: int = Field(default=5, ge=0, le=6)
    samples_per_n: int = Field(default=100, ge=0, le=10_000)
    seed: int = 0


class CampaignRowModel(BaseModel):
    n: int
    mode: str
    posets: int
    saturated: int
    interval_orders: int
    saturated_with_two_plus_two: int


class CampaignMismatchModel(BaseModel):
    n: int
    strict: list[tuple[int, int]]
    reasons: list[str]


class CampaignResponse(BaseModel):
    rows: list[CampaignRowModel]
    mismatches: list[CampaignMismatchModel]
    text: str
    json_text: str


class DotRequest(BaseModel):
    poset: PosetPayload


class DotResponse(BaseModel):
    dot: str


class ErrorDetail(BaseModel):
    error: str
    message: str

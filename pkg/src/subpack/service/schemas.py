"""Pydantic request/response models for the service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class PackingQuery(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    q: int = Field(ge=2)
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    t: int = Field(ge=1)
    lam: int = Field(ge=1, alias="lambda")


class BoundRequest(PackingQuery):
    paper_free: bool = False


class MethodValue(BaseModel):
    method: str
    value: int
    side: Literal["upper", "lower"]


class BoundResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    q: int
    n: int
    k: int
    t: int
    lam: int = Field(alias="lambda")
    lower: int
    upper: int
    exact: bool
    methods: list[MethodValue]


class ConstructRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    method: Literal["lifted-mrd", "linkage", "dual-linkage"]
    q: int = Field(ge=2)
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    # covering parameters (lifted-mrd / linkage)
    delta: Optional[int] = None
    alpha: Optional[int] = None
    # packing parameters (dual-linkage)
    t: Optional[int] = None
    lam: Optional[int] = Field(default=None, alias="lambda")
    t_choice: Optional[int] = None
    verify: bool = True
    size_cap: int = 500_000


class ConstructResponse(BaseModel):
    method: str
    params: str
    size: int
    formula: int
    verified: Optional[bool]
    verify_mode: Optional[str]
    code: str


class VerifyRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    code: str
    mode: Literal["packing", "covering"]
    t: Optional[int] = None
    lam: Optional[int] = Field(default=None, alias="lambda")
    delta: Optional[int] = None
    alpha: Optional[int] = None
    budget: int = 10_000_000
    seed: int = 0


class VerifyResponse(BaseModel):
    mode: str
    valid: bool
    checked: int
    exhaustive: bool
    histogram: dict[int, int]
    worst_value: int
    worst_witness: list
    detail: dict
    report: str


class TableRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    q: int = Field(ge=2)
    n: int = Field(ge=2)
    lam: int = Field(ge=1, alias="lambda")
    paper_free: bool = False
    compare: bool = False


class TableCellOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    k: int
    t: int
    lower: int
    upper: int
    exact: bool
    upper_method: str
    lower_method: str
    fixture_lower: Optional[int] = None
    fixture_upper: Optional[int] = None
    fixture_source: Optional[str] = None
    consistent: Optional[bool] = None


class TableResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    q: int
    n: int
    lam: int = Field(alias="lambda")
    cells: list[TableCellOut]
    rendered: str


class IlpRequest(PackingQuery):
    format: Literal["lp", "mps"] = "lp"
    strengthen: bool = False
    paper_free: bool = False
    max_variables: int = 20_000
    max_rows: int = 50_000


class IlpResponse(BaseModel):
    num_variables: int
    num_rows: int
    strengthened: bool
    model_text: str
    index_text: str


class SearchRequest(PackingQuery):
    mode: Literal["exhaustive", "greedy"] = "exhaustive"
    seed: int = 0
    passes: int = 1
    budget: int = 1_000_000
    max_blocks: int = 700
    paper_free: bool = False


class SearchResponse(BaseModel):
    mode: str
    value: int
    complete: bool
    nodes: int
    cutoff: Optional[int]
    code: str


class ErrorBody(BaseModel):
    code: str
    message: str
    counts: dict[str, int] = {}

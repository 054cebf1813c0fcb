"""Request/response models for the counting service.

Counted values travel as decimal strings: they outgrow 53-bit float precision
quickly, and JSON numbers cannot be trusted through every client stack.
Sets travel as ascending arrays of integers.
"""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

FamilyTag = Literal["M", "A", "A_binomial", "B", "C", "D", "E", "Lw", "Ls", "H", "I", "J", "P", "Q"]
SchreierFilter = Literal["any", "weak", "strong", "maximal"]
MaxConstraint = Literal["none", "max_equals_n", "contains_n"]
MaxParity = Literal["any", "even", "odd"]


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody


class CountRequest(BaseModel):
    family: FamilyTag
    n: int = Field(ge=1)
    k: Optional[int] = Field(default=None, ge=2)


class CountResponse(BaseModel):
    family: FamilyTag
    n: int
    k: Optional[int] = None
    value: str


class TableRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    family: FamilyTag
    start: int = Field(ge=1, alias="from")
    stop: int = Field(ge=1, alias="to")
    k: Optional[int] = Field(default=None, ge=2)


class TableRow(BaseModel):
    n: int
    value: str


class TableResponse(BaseModel):
    family: FamilyTag
    k: Optional[int] = None
    rows: List[TableRow]


class ListRequest(BaseModel):
    n: int = Field(ge=1)
    schreier: SchreierFilter = "any"
    zeckendorf_gap: Optional[int] = Field(default=None, ge=1)
    odd_gaps_only: bool = False
    max_constraint: MaxConstraint = "none"
    max_parity: MaxParity = "any"
    include_empty: bool = False


class ListResponse(BaseModel):
    n: int
    sets: List[List[int]]
    count: str


class ApplyMappingRequest(BaseModel):
    n: int = Field(ge=1)
    elements: List[int]
    invert: bool = False


class ApplyMappingResponse(BaseModel):
    n: int
    invert: bool
    elements: List[int]
    result: List[int]


class VerifyFamilyRequest(BaseModel):
    family: FamilyTag
    max_n: int = Field(ge=1)
    k: Optional[int] = Field(default=None, ge=2)


class VerificationRowModel(BaseModel):
    n: int
    oracle: str
    formula: str
    recurrence: Optional[str] = None
    all_equal: bool


class VerifyFamilyResponse(BaseModel):
    family: FamilyTag
    k: Optional[int] = None
    rows: List[VerificationRowModel]
    overall_pass: bool


class VerifyBijectionRequest(BaseModel):
    max_n: int = Field(ge=1)


class BijectionCheckModel(BaseModel):
    n: int
    domain_size: str
    image_size: str
    all_images_in_y: bool
    round_trip_ok: bool
    is_bijection: bool


class VerifyBijectionResponse(BaseModel):
    reports: List[BijectionCheckModel]
    overall_pass: bool


class VerifyAllRequest(BaseModel):
    max_n: int = Field(ge=1)
    k_values: List[int] = Field(default=(2, 3, 4))


class VerifyAllResponse(BaseModel):
    families: List[VerifyFamilyResponse]
    bijection: VerifyBijectionResponse
    overall_pass: bool

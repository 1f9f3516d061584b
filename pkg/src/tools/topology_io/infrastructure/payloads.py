"""Pydantic models for the JSON/YAML input payloads."""
from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator, model_validator

from src.tools.embeddings.domain.models import Embedding
from src.tools.lattice_core.domain.models import FormInvariants, GramMatrix, Parity
from ..domain.models import FramedLinkData

IntMatrix = List[List[StrictInt]]


def _square_symmetric(rows: IntMatrix, name: str) -> IntMatrix:
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"{name} must be square: row {i} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"{name} is not symmetric at ({i}, {j})")
    return rows


class LatticePayload(BaseModel):
    """``{"gram": [[int, ...], ...]}``"""
    model_config = ConfigDict(extra="forbid")

    gram: IntMatrix

    @field_validator("gram")
    @classmethod
    def validate_gram(cls, v: IntMatrix) -> IntMatrix:
        return _square_symmetric(v, "gram")

    def to_domain(self) -> GramMatrix:
        return GramMatrix.from_rows(self.gram)


class InvariantsPayload(BaseModel):
    """``{"b2_plus": int, "b2_minus": int, "parity": "even" | "odd"}``"""
    model_config = ConfigDict(extra="forbid")

    b2_plus: StrictInt = Field(ge=0)
    b2_minus: StrictInt = Field(ge=0)
    parity: Literal["even", "odd"]

    def to_domain(self) -> FormInvariants:
        return FormInvariants(self.b2_plus, self.b2_minus, Parity(self.parity))


class FramedLinkPayload(BaseModel):
    """``{"framings": [int], "linking": [[int]]}`` (diagonal of linking ignored)."""
    model_config = ConfigDict(extra="forbid")

    framings: List[StrictInt]
    linking: IntMatrix

    @model_validator(mode="after")
    def validate_shape(self) -> "FramedLinkPayload":
        n = len(self.framings)
        if len(self.linking) != n or any(len(row) != n for row in self.linking):
            raise ValueError(f"linking must be {n}x{n} to match {n} framing(s)")
        return self

    def to_domain(self) -> FramedLinkData:
        return FramedLinkData(
            framings=tuple(self.framings),
            linking=tuple(tuple(row) for row in self.linking),
        )


class EmbeddingPayload(BaseModel):
    """``{"degree": int, "source_gram": [[...]], "target_gram": [[...]], "matrix": [[...]]}``"""
    model_config = ConfigDict(extra="ignore")

    degree: StrictInt = Field(ge=1)
    source_gram: IntMatrix
    target_gram: IntMatrix
    matrix: IntMatrix

    @field_validator("source_gram", "target_gram")
    @classmethod
    def validate_grams(cls, v: IntMatrix, info) -> IntMatrix:
        return _square_symmetric(v, info.field_name)

    def to_domain(self) -> Embedding:
        return Embedding(
            degree=self.degree,
            source=GramMatrix.from_rows(self.source_gram),
            target=GramMatrix.from_rows(self.target_gram),
            matrix=tuple(tuple(row) for row in self.matrix),
        )

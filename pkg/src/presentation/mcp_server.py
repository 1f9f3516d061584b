"""MCP server exposing the lattice tools through FastMCP."""

import json
from typing import Optional

from fastmcp import FastMCP
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.shared.config import settings
from src.shared.constants import JSONConfig
from src.tools.lattice_tools import LatticeToolsOrchestrator


def _dumps(result: dict) -> str:
    return json.dumps(result, indent=JSONConfig.INDENT, ensure_ascii=JSONConfig.ENSURE_ASCII)


class FormRequest(BaseModel):
    """
    A single form.

    Accepts:
    - inline JSON: {"gram": [[...]]}, {"b2_plus": 3, "b2_minus": 19, "parity": "even"}
      or {"framings": [...], "linking": [[...]]}
    - a path to a .json/.yaml/.yml file holding one of those
    - a preset expression such as K3#2CP2bar (where a form is expected)
    """
    form: str

    @field_validator("form")
    @classmethod
    def validate_form(cls, v: str) -> str:
        if not v.strip():
            raise ValueError("form must not be empty")
        return v


class DecideRequest(BaseModel):
    """Source N and target M forms, with an optional degree."""
    source: str
    target: str
    degree: Optional[int] = Field(default=None, ge=1)
    assume_no_13_handles: bool = False


class EmbedRequest(BaseModel):
    """Construct d·I_N ↪ I_M between normal forms; the matrix is returned inline."""
    model_config = ConfigDict(extra="forbid")

    source: str
    target: str
    degree: int = Field(ge=1)


class VerifyRequest(BaseModel):
    """An embedding payload: degree, source_gram, target_gram, matrix."""
    embedding: str


class SearchRequest(BaseModel):
    """
    Oracle search. Give ``gram`` and ``norm`` (and optionally ``frame``) for
    vector search, or ``source``, ``target`` and ``degree`` for an embedding
    search.
    """
    gram: Optional[str] = None
    norm: Optional[int] = Field(default=None, ge=1)
    frame: Optional[int] = Field(default=None, ge=1)
    source: Optional[str] = None
    target: Optional[str] = None
    degree: Optional[int] = Field(default=None, ge=1)
    bound: Optional[int] = Field(default=None, ge=1)


class LatticeCoversMCPServer:
    """MCP server for the lattice-covers tools."""

    def __init__(self, orchestrator: Optional[LatticeToolsOrchestrator] = None):
        self.mcp = FastMCP(settings.server_name)
        self.orchestrator = orchestrator or LatticeToolsOrchestrator()
        self._setup_tools()

    def _setup_tools(self):
        """Register the MCP tools."""

        @self.mcp.tool()
        def classify(request: FormRequest) -> str:
            """
            Classify an integer symmetric Gram matrix: rank, determinant,
            signature (b2+, b2-), parity and unimodularity.
            """
            return _dumps(self.orchestrator.classify(request.form))

        @self.mcp.tool()
        def normal_form(request: FormRequest) -> str:
            """Serre normal form (diagonal, or ±E8 and hyperbolic blocks) of a form."""
            return _dumps(self.orchestrator.normal_form(request.form))

        @self.mcp.tool()
        def decide(request: DecideRequest) -> str:
            """
            Decide for which degrees d an isometric embedding d·I_N ↪ I_M is
            guaranteed, impossible or unknown, and which branched-covering
            degrees N -> M follow (d >= 4; requires N without 1- and 3-handles).
            """
            return _dumps(self.orchestrator.decide(
                request.source, request.target, request.degree, request.assume_no_13_handles
            ))

        @self.mcp.tool()
        def embed(request: EmbedRequest) -> str:
            """Explicit integer matrix T with ᵗT·G_M·T = d·G_N between Serre normal forms."""
            return _dumps(self.orchestrator.embed(
                request.source, request.target, request.degree
            ))

        @self.mcp.tool()
        def verify(request: VerifyRequest) -> str:
            """Check an embedding certificate exactly."""
            return _dumps(self.orchestrator.verify(request.embedding))

        @self.mcp.tool()
        def search(request: SearchRequest) -> str:
            """Exhaustive (definite) or bounded (indefinite) oracle search."""
            if request.gram is not None and request.norm is not None:
                result = self.orchestrator.search_vectors(request.gram, request.norm, request.frame)
            elif None not in (request.source, request.target, request.degree):
                result = self.orchestrator.search_embedding(
                    request.source, request.target, request.degree, request.bound
                )
            else:
                raise ValueError("Give gram and norm, or source, target and degree")
            return _dumps(result)

        @self.mcp.tool()
        def from_link(request: FormRequest) -> str:
            """Intersection form of a framed link (framings on the diagonal, linking numbers off it)."""
            return _dumps(self.orchestrator.from_link(request.form))

        @self.mcp.tool()
        def preset(request: FormRequest) -> str:
            """Invariants of a named manifold or connected sum, e.g. K3#2CP2bar."""
            return _dumps(self.orchestrator.preset(request.form))

    def get_mcp_app(self):
        """Get the FastMCP application instance."""
        return self.mcp

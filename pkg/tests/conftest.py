"""Shared fixtures for the lattice-covers test suite."""
import json

import pytest

from src.tools.lattice_core.domain.models import GramMatrix
from src.tools.lattice_tools import LatticeToolsOrchestrator
from src.tools.standard_forms.application.services import e8_form
from src.tools.standard_forms.domain.models import Sign
from tests.helpers import gram


@pytest.fixture
def e8() -> GramMatrix:
    return e8_form(Sign.PLUS)


@pytest.fixture
def hyperbolic() -> GramMatrix:
    return gram((0, 1), (1, 0))


@pytest.fixture
def orchestrator() -> LatticeToolsOrchestrator:
    return LatticeToolsOrchestrator()


@pytest.fixture
def write_payload(tmp_path):
    """Write a payload to a JSON file under tmp_path and return its path as a string."""
    def _write(name: str, data) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return _write

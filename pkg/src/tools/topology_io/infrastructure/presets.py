"""
Registry of named 4-manifolds and the connected-sum expression parser.

An expression is a '#'-separated list of terms, each a registered name with
an optional positive multiplicity prefix: ``K3#2CP2bar``, ``3CP2#5CP2bar``,
``#4S2xS2``. Names are matched case-insensitively.
"""
import logging
import re
from typing import Dict, List, Optional, Tuple

from src.tools.lattice_core.domain.models import FormInvariants, Parity
from ..domain.exceptions import UnknownPresetError
from ..domain.models import FramedLinkData

logger = logging.getLogger(__name__)

_TERM = re.compile(r"^\s*(\d*)\s*([A-Za-z][A-Za-z0-9]*)\s*$")


class PresetRegistry:
    """Named invariants and, where one is known, a framed-link presentation."""

    def __init__(self):
        self._forms: Dict[str, Tuple[str, FormInvariants]] = {}
        self._links: Dict[str, FramedLinkData] = {}

    def register(self, name: str, invariants: FormInvariants, link: Optional[FramedLinkData] = None) -> None:
        key = name.lower()
        self._forms[key] = (name, invariants)
        if link is not None:
            self._links[key] = link

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self._forms.values()]

    def invariants(self, name: str) -> FormInvariants:
        try:
            return self._forms[name.lower()][1]
        except KeyError:
            raise UnknownPresetError(
                f"Unknown preset {name!r}; known presets: {', '.join(self.names)}"
            ) from None

    def link(self, name: str) -> FramedLinkData:
        self.invariants(name)
        try:
            return self._links[name.lower()]
        except KeyError:
            raise UnknownPresetError(f"Preset {name!r} has no registered framed-link presentation") from None

    def parse(self, expression: str) -> List[Tuple[int, str]]:
        """Split a connected-sum expression into (multiplicity, name) terms."""
        text = expression.strip()
        if text.startswith("#"):
            text = text[1:]
        if not text:
            raise UnknownPresetError("Empty preset expression")
        terms = []
        for raw in text.split("#"):
            match = _TERM.match(raw)
            if not match:
                raise UnknownPresetError(f"Cannot parse connected-sum term {raw!r} in {expression!r}")
            count = int(match.group(1)) if match.group(1) else 1
            if count < 1:
                raise UnknownPresetError(f"Multiplicity must be positive in term {raw!r}")
            name = match.group(2)
            self.invariants(name)
            terms.append((count, name))
        return terms


def _default_registry() -> PresetRegistry:
    registry = PresetRegistry()
    registry.register(
        "CP2", FormInvariants(1, 0, Parity.ODD),
        FramedLinkData(framings=(1,), linking=((0,),)),
    )
    registry.register(
        "CP2bar", FormInvariants(0, 1, Parity.ODD),
        FramedLinkData(framings=(-1,), linking=((0,),)),
    )
    registry.register(
        "S2xS2", FormInvariants(1, 1, Parity.EVEN),
        FramedLinkData(framings=(0, 0), linking=((0, 1), (1, 0))),
    )
    registry.register(
        "S4", FormInvariants(0, 0, Parity.EVEN),
        FramedLinkData(framings=(), linking=()),
    )
    registry.register("K3", FormInvariants(3, 19, Parity.EVEN))
    return registry


registry = _default_registry()

"""Reads payload arguments given inline or as JSON/YAML files."""
import json
import logging
from pathlib import Path
from typing import Any, Optional

import yaml

from src.shared.config import settings
from src.shared.constants import FileExtensions
from src.shared.utils.file_operations import FileOperations
from ..domain.exceptions import PayloadError

logger = logging.getLogger(__name__)


class PayloadLoader:
    """
    Resolves a command-line argument to parsed data.

    An argument naming an existing file is read from disk (JSON first,
    then YAML). An argument starting with ``{`` or ``[`` is parsed as
    inline JSON. Anything else is returned as a plain string, which
    callers treat as a preset expression.
    """

    def __init__(self, max_size_mb: Optional[float] = None):
        self.max_size_mb = max_size_mb if max_size_mb is not None else settings.max_payload_size_mb

    def load(self, argument: str) -> Any:
        text = argument.strip()
        if text.startswith(("{", "[")):
            return self._parse_json(text, "inline argument")
        path = Path(text)
        if path.is_file():
            return self._load_file(path)
        if path.suffix.lower() in FileExtensions.PAYLOAD_EXTENSIONS:
            raise PayloadError(f"File not found: {text}")
        return text

    def _load_file(self, path: Path) -> Any:
        size_mb = FileOperations.get_file_size_mb(path)
        if size_mb > self.max_size_mb:
            raise PayloadError(f"File size ({size_mb:.2f}MB) exceeds limit ({self.max_size_mb}MB)")
        try:
            content = path.read_text(encoding="utf-8")
        except OSError as e:
            raise PayloadError(f"Failed to read {path}: {e}") from e
        logger.debug(f"Loaded payload file {path} ({size_mb:.3f}MB)")
        return self._parse_content(content, str(path))

    def _parse_content(self, content: str, source: str) -> Any:
        try:
            return json.loads(content)
        except json.JSONDecodeError:
            return self._parse_yaml(content, source)

    @staticmethod
    def _parse_json(content: str, source: str) -> Any:
        try:
            return json.loads(content)
        except json.JSONDecodeError as e:
            raise PayloadError(f"Invalid JSON in {source}: {e}") from e

    @staticmethod
    def _parse_yaml(content: str, source: str) -> Any:
        try:
            return yaml.safe_load(content)
        except yaml.YAMLError as e:
            raise PayloadError(f"{source} is neither valid JSON nor valid YAML: {e}") from e

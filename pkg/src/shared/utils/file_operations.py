"""File and JSON helpers shared by the payload loader and the CLI."""
import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from ..constants import JSONConfig, VersionInfo

logger = logging.getLogger(__name__)


class FileOperations:
    """Directory creation, JSON output with metadata and file-size checks."""

    JSON_INDENT = JSONConfig.INDENT
    JSON_ENSURE_ASCII = JSONConfig.ENSURE_ASCII
    JSON_ENCODING = JSONConfig.ENCODING

    @staticmethod
    def ensure_directory(path: Path) -> Path:
        """Create ``path`` and its parents if missing."""
        try:
            path.mkdir(parents=True, exist_ok=True)
            logger.debug(f"Directory ensured: {path}")
            return path
        except OSError as e:
            logger.error(f"Failed to create directory {path}: {e}")
            raise

    @staticmethod
    def save_json(data: Dict[str, Any], file_path: Path, indent: Optional[int] = None) -> Path:
        """
        Write ``data`` as JSON, creating the parent directory.

        Raises:
            OSError: If the file cannot be written
        """
        indent = indent if indent is not None else FileOperations.JSON_INDENT
        try:
            FileOperations.ensure_directory(file_path.parent)
            with open(file_path, "w", encoding=FileOperations.JSON_ENCODING) as f:
                json.dump(data, f, indent=indent, ensure_ascii=FileOperations.JSON_ENSURE_ASCII)
            logger.debug(f"JSON saved: {file_path}")
            return file_path
        except OSError as e:
            logger.error(f"Failed to save JSON to {file_path}: {e}")
            raise

    @staticmethod
    def create_metadata(command: str, source: Optional[str] = None) -> Dict[str, Any]:
        """Standard metadata block for saved results."""
        metadata = {
            "generated_at": datetime.now().isoformat(),
            "command": command,
            "tool_version": VersionInfo.TOOL_VERSION,
        }
        if source:
            metadata["source"] = source
        return metadata

    @staticmethod
    def get_file_size_mb(file_path: Path) -> float:
        return file_path.stat().st_size / (1024 * 1024)

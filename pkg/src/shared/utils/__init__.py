"""Shared utilities."""
from .file_operations import FileOperations

__all__ = ["FileOperations"]

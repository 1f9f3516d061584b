"""Oracle domain layer."""
from .models import SearchStatus, SearchResult
from .exceptions import OracleError, NotPositiveDefiniteError

__all__ = ["SearchStatus", "SearchResult", "OracleError", "NotPositiveDefiniteError"]

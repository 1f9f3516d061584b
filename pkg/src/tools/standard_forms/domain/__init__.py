"""Standard forms domain layer."""
from .models import Sign, FormLayout

__all__ = ["Sign", "FormLayout"]

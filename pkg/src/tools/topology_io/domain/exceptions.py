"""Domain exceptions for topology input."""


class TopologyInputError(Exception):
    """Base exception for framed links, presets and payloads."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class AsymmetricLinkingError(TopologyInputError):
    """Raised when lk(L_i, L_j) != lk(L_j, L_i) in a linking matrix."""
    pass


class UnknownPresetError(TopologyInputError):
    """Raised when a preset name or connected-sum term is not registered."""
    pass


class PayloadError(TopologyInputError):
    """
    Raised when an input payload cannot be read or parsed.

    Example:
        - a file that is neither JSON nor YAML
        - a payload with none of the recognised keys
        - a file larger than the configured limit
    """
    pass

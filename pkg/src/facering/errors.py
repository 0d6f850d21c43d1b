class FaceRingError(Exception):
    """Base class for errors raised by this package."""


class DocumentError(FaceRingError):
    """Input document does not parse or fails format validation."""


class PreconditionError(FaceRingError):
    """Operation called on an input outside its stated domain."""


class ResourceLimitError(FaceRingError):
    """Input exceeds a documented size guard (work would be exponential)."""

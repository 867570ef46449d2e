"""Exception hierarchy shared across the package.

Every error carries a short machine-readable ``code`` slug used by the CLI
(stderr records) and the HTTP service (response bodies).
"""


class LottieColorError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class MalformedJson(LottieColorError):
    code = "malformed-json"


class UnsupportedDocument(LottieColorError):
    code = "unsupported-document"


class AddressNotFound(LottieColorError):
    code = "address-not-found"


class UnknownColor(LottieColorError):
    code = "unknown-color"


class EmptyGroup(LottieColorError):
    code = "empty-group"


class EmptyDocument(LottieColorError):
    code = "empty-document"


class ZeroWeightDocument(LottieColorError):
    code = "zero-weight-document"


class OutOfBounds(LottieColorError):
    code = "out-of-bounds"


class FrameOutOfRange(LottieColorError):
    code = "frame-out-of-range"


class EmptyLog(LottieColorError):
    code = "empty-log"


class RgbEditNotAllowed(LottieColorError):
    """Direct RGB assignment is refused for multi-color groups."""

    code = "rgb-edit-not-allowed"


class UnknownSession(LottieColorError):
    code = "unknown-session"

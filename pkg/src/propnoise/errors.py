"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when an argument violates an operation's preconditions."""


class UnreachableTargetError(RuntimeError):
    """Raised when a loudness target cannot be reached inside the SNR search range.

    Attributes
    ----------
    floor : float
        The loudness value (sone) at the relevant end of the search range.
    """

    def __init__(self, message, floor):
        super().__init__(message)
        self.floor = floor


class MetadataError(InvalidInputError):
    """Raised when an ensemble metadata file is malformed or incomplete."""

    def __init__(self, message, key=None):
        super().__init__(message)
        self.key = key

"""Exception hierarchy with stable error codes for scripting."""


class TricrossError(Exception):
    """Base class; ``code`` is a stable string such as ``E_DISCONNECTED``."""

    code = "E_DOMAIN"

    def __init__(self, message: str = "", code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def __str__(self) -> str:
        return f"{self.code}: {self.args[0] if self.args else ''}"


class ParseError(TricrossError):
    code = "E_PARSE"


class InvalidDiagramError(TricrossError):
    """Raised when a diagram violates a structural invariant.

    The code names the first violated invariant (``E_EDGE_MULTIPLICITY``,
    ``E_NONPLANAR``, ``E_DISCONNECTED``, ``E_ROLES``, ``E_STRAND``).
    """

    code = "E_INVALID"


class CapExceededError(TricrossError):
    code = "E_CAP"


class PreconditionError(TricrossError):
    code = "E_PRECONDITION"


class NoCollectionError(TricrossError):
    code = "E_NO_COLLECTION"


class SearchExhaustedError(TricrossError):
    code = "E_SEARCH_EXHAUSTED"


class BraidError(TricrossError):
    code = "E_BRAID"


class CollectionError(TricrossError):
    """A covering collection that does not fit its diagram."""

    code = "E_COLLECTION"


class ZeroPolynomialError(TricrossError, ValueError):
    code = "E_ZERO_POLYNOMIAL"

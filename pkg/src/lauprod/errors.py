class LauprodError(Exception):
    """Base class for errors raised by this package."""


class AlgebraMismatchError(LauprodError, ValueError):
    def __init__(self, msg="algebra mismatch"):
        super().__init__(msg)


class NonAssociativeError(LauprodError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"structure tensor is not associative: {report.describe()}")


class NotAHomomorphismError(LauprodError, ValueError):
    def __init__(self, report):
        self.report = report
        self.witness = report.witness
        super().__init__(f"not a homomorphism: {report.describe()}")


class NotACharacterError(LauprodError, ValueError):
    def __init__(self, report):
        self.report = report
        self.witness = report.witness
        super().__init__(f"not a character: {report.describe()}")


class NonUnitalError(LauprodError, ValueError):
    pass


class CatalogError(LauprodError, ValueError):
    pass


class ParseError(LauprodError, ValueError):
    def __init__(self, msg: str, position: int):
        self.position = position
        super().__init__(f"{msg} at offset {position}")
        self.reason = msg


class FormatError(LauprodError, ValueError):
    """Malformed algebra or map file.  ``code`` distinguishes the failure kind."""

    def __init__(self, code: str, msg: str, witness=None):
        self.code = code
        self.witness = witness
        super().__init__(f"[{code}] {msg}")

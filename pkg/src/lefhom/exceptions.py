"""Exception hierarchy. Every error carries a stable ``code`` for the CLI."""


class LefhomError(Exception):
    code = "error"


class StrandMismatchError(LefhomError, ValueError):
    code = "strand-mismatch"


class LatticeMismatchError(LefhomError, ValueError):
    code = "lattice-mismatch"


class IndexRangeError(LefhomError, IndexError):
    code = "index-range"


class ResourceLimitError(LefhomError, RuntimeError):
    code = "resource-limit"


class NotQuasipositiveError(LefhomError, ValueError):
    code = "not-quasipositive"


class FormulaNotEstablishedError(LefhomError, ValueError):
    code = "formula-not-established"


class InvalidInputError(LefhomError, ValueError):
    code = "invalid-input"


class ScenarioError(InvalidInputError):
    code = "scenario-syntax"

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line

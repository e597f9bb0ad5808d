"""Exception hierarchy shared by the whole engine."""


class EngineError(Exception):
    """Base class for all engine errors."""


class FieldError(EngineError):
    """Invalid field construction or mixed-field arithmetic."""


class ShapeError(EngineError):
    """Domain/codomain or dimension mismatch."""


class CompositionError(ShapeError):
    """Attempt to compose maps whose middle objects differ."""


class DegreeError(EngineError):
    """A matrix entry violates degree preservation."""


class SplitError(EngineError):
    """split_idempotent received a non-idempotent map."""


class StructureError(EngineError):
    """An input failed the axiom checks required by an operation.

    Carries the failed report so callers can inspect residuals.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DslError(EngineError):
    """Parse or type error in the morphism expression language."""

    def __init__(self, message, pos=None):
        super().__init__(message)
        self.pos = pos


class ScenarioError(EngineError):
    """Scenario file failed to load or validate."""

    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location

"""Exception hierarchy shared by every layer of the package."""
from __future__ import annotations


class SulvaError(Exception):
    """Base class for all errors raised by :mod:`sulva`."""


class ConstructionError(SulvaError):
    """A construction could not be carried out with the given inputs."""


# exact arithmetic

class DivisionByZero(ConstructionError, ZeroDivisionError):
    pass


class NegativeRadicand(ConstructionError, ValueError):
    pass


class UnknownUnit(SulvaError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


# planar geometry

class CoincidentObjects(ConstructionError):
    pass


class DegenerateCord(ConstructionError):
    pass


class DegenerateDirection(ConstructionError):
    pass


class DegeneratePolygon(ConstructionError):
    pass


class DegenerateSegment(ConstructionError):
    pass


class NonpositiveRadius(ConstructionError):
    pass


class UndecidedComparison(ConstructionError):
    """Raised when a geometric decision needs a sign that could not be certified."""


class TraceError(ConstructionError):
    """A trace references an unknown object or fails to replay."""


# constructions

class PointOffCircle(ConstructionError):
    pass


class CoincidentPoints(ConstructionError):
    pass


class ArcsDontMeet(ConstructionError):
    pass


class InvalidTriple(ConstructionError, ValueError):
    pass


class NonpositiveInput(ConstructionError, ValueError):
    pass


class NotLarger(ConstructionError, ValueError):
    pass


class NotRealizable(ConstructionError, ValueError):
    pass


class NotAugmentation(ConstructionError, ValueError):
    pass


class MethodMismatch(ConstructionError, ValueError):
    pass


# analysis

class NotGeometric(SulvaError, ValueError):
    pass


class UnsupportedFormat(SulvaError, ValueError):
    pass


class EmptyRecordSet(SulvaError, ValueError):
    pass


# rendering / scripts

class EmptyTraceSet(SulvaError, ValueError):
    pass


class ScriptError(SulvaError):
    """Error tied to a position in a construction script."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ScriptSyntaxError(ScriptError):
    pass


class UnknownOperation(ScriptError):
    pass


class UnboundName(ScriptError):
    pass


class ArityMismatch(ScriptError):
    pass


class ScriptRuntimeError(ScriptError):
    """A construction failed while a script was running."""

    def __init__(self, message: str, line: int, column: int, binding: str | None,
                 cause: Exception):
        self.binding = binding
        self.cause = cause
        super().__init__(message, line, column)


class ScriptTypeError(ScriptError):
    """An argument has the wrong kind of value for its parameter."""

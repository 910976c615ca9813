"""Exception hierarchy shared by the package."""


class GkevalError(Exception):
    """Base class for all errors raised by gkeval."""


class GeometryError(GkevalError, ValueError):
    """Invalid goal geometry or distance metric."""


class ZoneError(GkevalError, ValueError):
    """Zone id outside 1..k for the active geometry."""


class MetricError(GkevalError, ValueError):
    """A measure is undefined for the given input (e.g. too few kicks)."""


class ParseError(GkevalError, ValueError):
    """Malformed or invalid input record.

    ``location`` is ``"line N"`` for CSV input and a JSON path such as
    ``"[0].kicks[2].true_zone"`` for JSON input.
    """

    def __init__(self, location, reason, diagnostics=()):
        self.location = location
        self.reason = reason
        self.diagnostics = tuple(diagnostics)
        super().__init__(f"{location}: {reason}")

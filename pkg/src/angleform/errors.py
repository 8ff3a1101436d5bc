"""Exception types shared across the library."""


class AngleformError(Exception):
    """Base class for all library-specific errors."""


class NonUnitVector(AngleformError, ValueError):
    """A direction argument deviates from unit norm beyond tolerance."""


class VertexOutOfRange(AngleformError, ValueError):
    """A vertex label lies outside 1..n."""


class NotAnEdge(AngleformError, ValueError):
    """A vertex pair is not an edge of the graph."""


class InvalidStep(AngleformError, ValueError):
    """A vertex-insertion step does not attach to an existing edge."""


class CoincidentPoints(AngleformError, ValueError):
    """Two points required to be distinct (nearly) coincide."""

    def __init__(self, i: int, j: int, distance: float):
        self.pair = (i, j)
        self.distance = distance
        super().__init__(
            f"points {i} and {j} coincide (distance {distance:.3e})"
        )


class DegenerateAllCoincident(AngleformError, ValueError):
    """Every point of a configuration sits at the same location."""


class NotAnEquilibrium(AngleformError, ValueError):
    """A configuration does not satisfy the required constraint residuals."""


class NotInfinitesimallyAngleRigid(AngleformError, ValueError):
    """An operation requires an infinitesimally angle rigid framework."""


class NoManeuverTarget(AngleformError, ValueError):
    """A maneuver operation was requested on a spec without a maneuver block."""


class BlowUp(AngleformError, RuntimeError):
    """A simulation left the trusted numerical regime."""

    def __init__(self, time: float, reason: str):
        self.time = time
        self.reason = reason
        super().__init__(f"simulation aborted at t={time:.6f}: {reason}")


class NonPositiveSeries(AngleformError, ValueError):
    """A decay fit was requested on a series that does not start positive."""


class ParseError(AngleformError, ValueError):
    """A scenario file could not be parsed; message carries line/field info."""


class ValidationError(AngleformError, ValueError):
    """A scenario parsed cleanly but violates a semantic constraint."""

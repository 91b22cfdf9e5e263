"""Exception types shared across the package."""


class QuditError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(QuditError):
    """Operands have incompatible dimensions."""


class LevelOutOfRangeError(QuditError):
    """A level index lies outside 0..dim-1."""


class AncillaLevelError(QuditError):
    """The ancilla level has no two-qubit image."""


class AncillaPopulatedError(QuditError):
    """The ancilla level carries non-negligible population."""


class NotUnitaryError(QuditError):
    """Matrix fails the unitarity check."""


class NotUnitPhaseError(QuditError):
    """Scalar is not of unit modulus."""


class InvalidLevelsError(QuditError):
    """Pulse level pair is invalid (equal, negative, or out of range)."""


class NoSpareLevelError(QuditError):
    """No third level is available to synthesize a Y rotation."""


class FixedLevelClashError(QuditError):
    """The requested spare level collides with the rotation pair."""


class InvalidOracleError(QuditError):
    """Oracle id is not one of 1..4."""


class NotNormalizedError(QuditError):
    """State vector is not normalized."""


class MeasurementTieError(QuditError):
    """Coarse measurement probabilities are tied; verdict undefined."""


class EmptySearchSpaceError(QuditError):
    """Search space contains no candidate pulses."""


class CircuitSyntaxError(QuditError):
    """Circuit source failed to parse."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


class UnknownGateError(CircuitSyntaxError):
    """Statement names a gate that is not in the library."""


class BadLevelIndexError(CircuitSyntaxError):
    """Raw pulse statement uses a level index outside the qudit."""

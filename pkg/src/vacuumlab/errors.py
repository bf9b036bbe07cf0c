class VacuumLabError(Exception):
    """Base class for all errors raised by vacuumlab."""


class DomainError(VacuumLabError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class SingularityError(DomainError):
    """Evaluation at (or too close to) a singular point."""


class ConfigurationError(DomainError):
    """Invalid simulation configuration, e.g. an unstable time step."""


class MeasurementError(VacuumLabError):
    """A measurement could not be extracted from simulated data."""

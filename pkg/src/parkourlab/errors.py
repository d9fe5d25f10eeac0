"""Exception types shared across the package."""


class ParkourError(Exception):
    """Base class for all package errors."""


class ConfigError(ParkourError):
    """Invalid configuration: bad value, unknown key, or forbidden combination."""


class StructuralError(ParkourError):
    """Shape/architecture mismatch between data and network or checkpoint."""


class SimulationDiverged(ParkourError):
    """Simulation produced a non-finite state or action.

    Carries the physics step index at which the divergence was detected.
    """

    def __init__(self, step_index: int, message: str = ""):
        self.step_index = step_index
        super().__init__(message or f"simulation diverged at step {step_index}")


class NumericalError(ParkourError):
    """Non-finite loss or reward encountered during training."""

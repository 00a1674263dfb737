"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid argument, specification, or configuration value."""


class ConfigError(ValidationError):
    """Run-config file problem; message carries the offending key path."""


class SolverError(RuntimeError):
    """Iterative solver failed to reach its tolerance."""


class NoFrontError(RuntimeError):
    """Front diagnostics requested on a state with an all-zero reaction profile."""


class CheckpointError(RuntimeError):
    """Checkpoint file is missing, truncated, or incompatible."""

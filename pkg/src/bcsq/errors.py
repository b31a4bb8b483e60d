"""Exception types shared across the package.

The CLI maps ConfigError to exit code 1 and NumericalError to exit code 2.
"""


class ConfigError(ValueError):
    """Invalid configuration or precondition violation."""


class NumericalError(RuntimeError):
    """A numerical routine failed to reach its accuracy target."""

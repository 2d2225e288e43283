"""Exception hierarchy for the hesspave library.

Two broad classes matter to callers: configuration problems (bad names,
malformed input, unsupported combinations of options) and computation
problems (a solver or classifier met a case outside its contract).  The
CLI maps them to distinct exit codes.
"""

__all__ = [
    "HesspaveError",
    "ConfigError",
    "ComputationError",
    "InvalidTypeError",
    "InvalidRootError",
    "InvalidWordError",
    "InvalidIdealError",
    "UnknownOrbitError",
    "UnsupportedLeviError",
    "UnsupportedZeroSetError",
    "InfeasibleSolveError",
]


class HesspaveError(Exception):
    """Base class for all library errors."""


class ConfigError(HesspaveError):
    """Bad user-supplied names, options, or file contents."""


class ComputationError(HesspaveError):
    """A computation left its supported domain or found an inconsistency."""


class InvalidTypeError(ConfigError):
    """Unknown Cartan type label."""


class InvalidRootError(ConfigError):
    """A coordinate tuple that is not a root of the ambient system."""


class InvalidWordError(ConfigError):
    """A word over the simple reflections with an out-of-range letter."""


class InvalidIdealError(ConfigError):
    """A root subset that is not an upper-closed ideal, or an unknown slug."""


class UnknownOrbitError(ConfigError):
    """An orbit label outside the supported registry."""


class UnsupportedLeviError(ConfigError):
    """A Levi subset outside the supported shapes for the requested operation."""


class UnsupportedZeroSetError(ComputationError):
    """The zero-set classifier met a polynomial system outside its inventory."""


class InfeasibleSolveError(ComputationError):
    """A constrained solve had no solution or was not uniquely determined."""

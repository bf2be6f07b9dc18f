"""Exception hierarchy shared across the package.

Each exception carries a short machine-readable ``category`` used by the
CLI to map failures to exit codes.
"""


class LLCopulaError(Exception):
    category = "error"


class ConfigError(LLCopulaError):
    """Invalid parameter, option, or domain violation caught before any work."""

    category = "config"


class InputError(LLCopulaError):
    """Missing or malformed input file."""

    category = "input"


class NumericalError(LLCopulaError):
    """Numerical pathology: non-convergence or degenerate linear algebra."""

    category = "numeric"


class DegenerateKernelError(NumericalError):
    """Local-linear correction denominator fell below the safety floor."""

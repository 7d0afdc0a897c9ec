"""Exception types shared across the package."""


class UnsupportedFieldError(ValueError):
    """Requested finite field falls outside the supported size range."""


class DegreeGuardExceeded(RuntimeError):
    """An exact evaluation would produce a polynomial above the degree guard."""


class InternalCheckError(RuntimeError):
    """A proved identity failed at runtime; indicates a bug, not bad input.

    CLI maps this to exit code 2.
    """


class ChainLawError(InternalCheckError):
    """Successive annihilator ideals violated the grow-by-P chain law."""


class ConfigError(ValueError):
    """Malformed run configuration; message names the offending field/line."""

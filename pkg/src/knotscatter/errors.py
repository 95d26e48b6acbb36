"""Exception types shared across the package."""


class KnotscatterError(Exception):
    """Base class for all package-specific errors."""


class PoleError(KnotscatterError):
    """Evaluation requested at (or too close to) a pole of the expression.

    Raised e.g. when the loop value d = -2*cos(2*theta) vanishes, where the
    mixing generator and the basis-change matrix contain 1/d, or when a
    closed-form denominator hits a resonance.
    """


class InexactDivisionError(KnotscatterError):
    """Laurent-polynomial division left a nonzero remainder.

    Divisions used here are exact by construction; this error signals an
    implementation bug, not bad user input.
    """


class SizeLimitError(KnotscatterError):
    """Braid word exceeds the crossing budget of the symbolic bracket."""


class SingularSystemError(KnotscatterError):
    """The path-recursion linear system is singular at this momentum."""


class UnsupportedFamilyError(KnotscatterError):
    """Requested knot/family is outside the tabulated set."""


class ConfigError(KnotscatterError):
    """Invalid sweep or CLI configuration."""

"""Exception types raised by the library."""


class Su11Error(ValueError):
    """Base class for all domain errors."""


class DeterminantViolation(Su11Error):
    """The pair (alpha, beta) does not satisfy |alpha|^2 - |beta|^2 = 1."""


class ZeroTransmission(Su11Error):
    """A transfer matrix cannot be formed from T = 0."""


class EvanescentWave(Su11Error):
    """A layer cannot carry a propagating wave at the given angle."""


class DegenerateMatrix(Su11Error):
    """+/- identity: every conjugation works, no canonical reduction exists."""


class InvalidRange(Su11Error):
    """Bad orbit sampling request (empty range or too few samples)."""


class DuplicatePoints(Su11Error):
    """A circle fit needs three distinct points."""

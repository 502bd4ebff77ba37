"""Exceptions shared by the certification pipelines."""


class CertificationError(Exception):
    """Base class for failures of a certification attempt."""


class DegreeError(ValueError):
    """A requested Bernstein degree is below the minimum the operation allows."""


class NotPositiveError(CertificationError):
    """Strict positivity was refuted.

    ``witness`` is a point of the domain with ``value = p(witness) <= 0`` when
    one was found, otherwise None.
    """

    def __init__(self, message: str, witness=None, value=None):
        super().__init__(message)
        self.witness = witness
        self.value = value


class InconclusiveError(CertificationError):
    """An iteration cap was reached before certifying or refuting.

    ``best`` carries the tightest enclosure computed before giving up.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best

"""Exception hierarchy shared across the package.

Two error classes matter to callers (and map to distinct CLI exit codes):
``DataError`` for malformed or inconsistent input data, and
``NumericDomainError`` for requests that are undefined for the given
distribution (constant response, empty category, zero-sum weights, ...).
"""


class CatassocError(Exception):
    """Base class for all errors raised by this package."""


class DataError(CatassocError, ValueError):
    """Input data is malformed or inconsistent with the request."""


class NumericDomainError(CatassocError, ValueError):
    """The requested quantity is undefined for the given distribution."""

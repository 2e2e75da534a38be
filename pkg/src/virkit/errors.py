"""Shared exception types."""


class ParameterError(ValueError):
    """Raised when a request lies outside an operation's declared domain
    (excluded algebra parameters, wrong host, malformed rationals, ...).

    The CLI maps this to exit code 2, distinct from a failed math check (1).
    """

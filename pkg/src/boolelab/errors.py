"""Errors shared across the package."""


class CapExceeded(Exception):
    """A request went past one of the configurable size caps.

    The caps exist because every search here is exhaustive; callers that
    really want a bigger run can raise the relevant limit explicitly.
    """

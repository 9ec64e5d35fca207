"""
core/errors.py
==============

Exception taxonomy. The CLI maps these onto exit codes:

    InputError        → 2   (malformed input, names the offending field)
    CapExceededError  → 3   (closure / tuple-space caps)
    CertificateFailure→ 1   (a tuple failed certification: bug indicator)
"""


class SubtransError(Exception):
    """Root of every error raised by the toolkit."""


# --------------------------------------------------------------------------- #
# Input errors (exit 2)
# --------------------------------------------------------------------------- #

class InputError(SubtransError, ValueError):
    """Malformed input. ``field`` names what was wrong, when known."""

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class DimensionMismatchError(InputError):
    pass


class DegenerateConfigurationError(InputError):
    def __init__(self, message="degenerate configuration", field="points"):
        super().__init__(message, field=field)


class OutsideHullError(InputError):
    """The last point is not in the affine hull of the first d+1."""

    def __init__(self, field="points"):
        super().__init__(
            "not applicable: last point lies outside the affine hull "
            "of the first d+1 points",
            field=field,
        )


class NonOrthogonalError(InputError):
    pass


class CayleyTableError(InputError):
    def __init__(self, message, triple=None, field="cayley"):
        self.triple = triple
        if triple is not None:
            message = f"{message} (failing triple {triple})"
        super().__init__(message, field=field)


class GroupSpecError(InputError):
    def __init__(self, message, field="group"):
        super().__init__(message, field=field)


# --------------------------------------------------------------------------- #
# Cap violations (exit 3)
# --------------------------------------------------------------------------- #

class CapExceededError(SubtransError):
    pass


class GroupTooLargeError(CapExceededError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"group too large: closure exceeds cap of {cap} elements")


class TupleSpaceTooLargeError(CapExceededError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(
            f"tuple space too large: {size} tuples exceeds cap of {cap}; "
            f"use sampled mode (--sample N) instead"
        )


# --------------------------------------------------------------------------- #
# Bug indicators (exit 1)
# --------------------------------------------------------------------------- #

class CertificateFailure(SubtransError):
    """A tuple failed the genericity certificate. Carries the instance."""

    def __init__(self, instance, message="certificate failed"):
        self.instance = instance
        super().__init__(f"{message}: {instance}")


class SimplexError(SubtransError):
    """The exact simplex produced a point that does not satisfy its system."""

"""Exception hierarchy shared by all modules.

Every error carries an optional machine-readable ``witness`` so that the
CLI can report what exactly went wrong (a half edge, a relation index, a
list of violations, ...).
"""

from __future__ import annotations


class BrauerCoverError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness

    def payload(self) -> dict:
        """JSON-serializable description, used on the CLI error path."""
        return {"error": self.code, "message": str(self), "witness": self.witness}


class MalformedInputError(BrauerCoverError):
    """Structurally unusable input (bad JSON document, wrong field types)."""

    code = "malformed_input"


class UnknownGeneratorError(BrauerCoverError):
    code = "unknown_generator"


class MalformedWordError(BrauerCoverError):
    code = "malformed_word"


class InfiniteGroupError(BrauerCoverError):
    code = "infinite_group"


class ElementMismatchError(BrauerCoverError):
    code = "element_mismatch"


class UnknownNameError(BrauerCoverError):
    """A half edge, arrow or vertex name that the receiving object does not know."""

    code = "unknown_name"


class InvalidBrauerPermutationError(BrauerCoverError):
    code = "invalid_brauer_permutation"


class NotAdmissibleError(BrauerCoverError):
    code = "not_admissible"


class NotHomogeneousError(BrauerCoverError):
    code = "not_homogeneous"


class WindowRequiredError(BrauerCoverError):
    code = "window_required"


class HasLoopsError(BrauerCoverError):
    code = "has_loops"


class DeltaNotForestError(BrauerCoverError):
    code = "delta_not_forest"


class TooLargeError(BrauerCoverError):
    code = "too_large"

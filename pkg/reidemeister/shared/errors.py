"""
Exception hierarchy for the toolkit.

InputError and its subclasses are input-side problems (CLI exit code 2).
VerificationError means an internal mathematical self-check failed (exit code 1).
"""


class ReidemeisterError(Exception):
    """Base class for all toolkit errors"""


class InputError(ReidemeisterError, ValueError):
    """Malformed input: bad indices, dimension mismatch, unparsable files"""


class InvalidGroupError(InputError):
    """A multiplication table violates a group axiom"""


class InvalidAutomorphismError(InputError):
    """An assignment does not extend to an automorphism"""


class SizeCapError(InputError):
    """An operation would exceed a configured size cap"""


class NotAutomorphismError(InputError):
    """An integer matrix is not unimodular"""


class InfiniteTermError(InputError):
    """A sequence term needed by the computation is infinite"""


class PrimeSelectionError(InputError):
    """No admissible prime for the dual computation"""


class UnsupportedInstanceError(InputError):
    """A decision request names an instance kind that is not supported"""


class VerificationError(ReidemeisterError):
    """An internal identity check failed"""


class CharacterTableError(VerificationError):
    """Joint eigenspace splitting did not reach one-dimensional spaces"""

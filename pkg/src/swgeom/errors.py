"""Exception hierarchy shared by all modules.

Every error raised for a mathematically meaningless or unsupported input
derives from :class:`DomainError`; the CLI maps these to exit status 1.
"""


class DomainError(ValueError):
    """Input is well-formed but outside the domain of the requested operation."""


class IntegralityViolation(DomainError):
    pass


class SpecValidationError(DomainError):
    pass


class NotSimplyConnected(DomainError):
    pass


class DefiniteFormUnsupported(DomainError):
    pass


class ParityUndetermined(DomainError):
    pass


class DegreeTooSmall(DomainError):
    pass


class BranchTooSmall(DomainError):
    pass


class OutOfConstructedRange(DomainError):
    pass


class NoSWHypothesis(DomainError):
    pass


class UnsupportedKodairaDim(DomainError):
    pass


class NotGeneralType(DomainError):
    pass


class TOutOfRange(DomainError):
    pass


class BlockInvariantViolation(DomainError):
    pass


class BianchiViolation(DomainError):
    pass


class SymmetryViolation(DomainError):
    pass


class ZeroEuler(DomainError):
    pass


class RatioOutOfRange(DomainError):
    pass


class PreconditionViolation(DomainError):
    pass


class IntegralityWarning(UserWarning):
    """Characteristic numbers fail Noether's integrality condition."""

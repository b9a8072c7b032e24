"""Exception types shared across the package."""


class ParapicError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(ParapicError):
    """Malformed input text or JSON (CLI exit code 2)."""


class InvalidTypeError(ParapicError):
    """Inadmissible finite/affine type combination."""


class DomainError(ParapicError):
    """A valid-looking value violates an operation's precondition."""


class InconsistentRamificationError(DomainError):
    """Riemann-Hurwitz produced a non-integral or negative genus."""


class NoCoverError(DomainError):
    """No cover with the requested splitting behaviour exists."""


class PairingError(DomainError):
    """No admissible pairing of marked points exists."""


class NotDominantError(DomainError):
    """Bundle has a negative coefficient."""


class NotInPicDeltaError(DomainError):
    """Central charges disagree across marked points."""


class UnknownRankError(ParapicError):
    """The exact rank of a block is not covered by the implemented tables.

    Deliberately distinct from rank 0: the descent criterion is one-sided
    and a missing table entry must never be read as vanishing.
    """


class BoundUnavailableError(ParapicError):
    """A witness contains a factor of unknown rank."""


class InternalInconsistencyError(ParapicError):
    """An exact computation produced a structurally impossible value."""

"""Exception types shared across the qset modules."""


class QsetError(Exception):
    """Base class for all library errors."""


class RankGuard(QsetError):
    """A rank or dimension exceeds what can be materialized."""


class SizeGuard(RankGuard):
    """A numerical problem size exceeds the configured limit."""


class DimensionMismatch(QsetError, ValueError):
    """Operands live on incompatible seed spaces or generator sets."""


class NotInSeed(DimensionMismatch):
    """A label is not a member of the seed basis."""


class ClosureViolation(QsetError):
    """A bivector commutator left the bivector span."""


class ParseError(QsetError, SyntaxError):
    """Malformed expression text; ``offset`` is the 0-based byte offset."""

    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.msg = message
        self.offset = offset
        self.text = text

"""Exception hierarchy shared by all modules."""


class HyptreeError(Exception):
    """Base class for every error raised by this package."""


class StructureError(HyptreeError, ValueError):
    """Malformed input: bad attribute index, wrong tuple width, broken tree."""


class ParseError(HyptreeError, ValueError):
    """A table file could not be read."""


class BudgetExceeded(HyptreeError):
    """A combinatorial enumeration would exceed its configured budget."""


class CertificateViolation(HyptreeError):
    """A construction met a state its reducedness certificate rules out."""


class UnsolvableError(HyptreeError):
    """No legal progressing query exists at a nonterminal game state."""

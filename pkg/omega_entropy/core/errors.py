"""
Exception hierarchy for omega-entropy.

Input errors (bad vectors, bad ranges, unreadable sources) and numeric-domain
errors (arguments a formula is undefined for) are kept apart so the CLI can
map them to different exit codes.
"""


class OmegaEntropyError(Exception):
    """Base class for all library errors."""


class InputError(OmegaEntropyError, ValueError):
    """Invalid user-supplied input."""


class NumericDomainError(OmegaEntropyError, ArithmeticError):
    """Argument outside the domain of a formula."""


# Distribution validation
class EmptyDistribution(InputError):
    pass


class NegativeProbability(InputError):
    pass


class SumNotOne(InputError):
    pass


class AllZero(InputError):
    pass


class EmptyStream(InputError):
    pass


class SourceReadError(InputError):
    """Raised when an input file or stream cannot be read."""


# Units and ranges
class InvalidUnit(InputError):
    pass


class InvalidM(InputError):
    pass


class InvalidN(InputError):
    pass


class InvalidRange(InputError):
    pass


class ConfigError(InputError):
    pass


# Multinomial / decomposition
class DimensionMismatch(InputError):
    pass


class TooLarge(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class InvalidLambda(InputError):
    pass


class InvalidPartition(InputError):
    pass


class ZeroGroupMass(InputError):
    pass


# Numeric domain
class DomainError(NumericDomainError):
    pass


class ZeroProbability(NumericDomainError):
    pass


class ZeroProbabilityAtIndex(NumericDomainError):
    pass

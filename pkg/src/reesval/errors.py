"""Exception hierarchy shared by the library and the CLI.

Two branches matter to callers: ``InputError`` covers bad inputs and
precondition violations (CLI exit code 2), while ``VerificationError``
means an internal cross-check failed, i.e. a bug (CLI exit code 3).
"""


class CalcError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CalcError):
    """Invalid input or violated precondition."""


class VerificationError(CalcError):
    """An internal consistency check failed; never expected."""


class EmptyListError(InputError):
    pass


class NonPositiveError(InputError):
    pass


class EmptyGeneratorsError(InputError):
    pass


class InconsistentDimensionError(InputError):
    pass


class ImproperIdealError(InputError):
    pass


class NonPositivePowerError(InputError):
    pass


class DimensionMismatchError(InputError):
    pass


class ZeroExponentError(InputError):
    pass


class NoTranscendentalError(InputError):
    pass


class NotMultipleError(InputError):
    pass


class NotCommonMultipleError(InputError):
    pass


class LabelMismatchError(InputError):
    pass


class BadKError(InputError):
    pass


class IndexMismatchError(InputError):
    pass


class UnitIdealError(InputError):
    pass


class InconsistentSystemError(InputError):
    pass


class NonIntegralSetupError(InputError):
    pass


class ParseError(InputError):
    """Malformed text input; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FundamentalEqualityViolation(VerificationError):
    pass


class EquivalenceViolation(VerificationError):
    pass


class NonUniformError(VerificationError):
    pass


class OracleDisagreement(VerificationError):
    pass

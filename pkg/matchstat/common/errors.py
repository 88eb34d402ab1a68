
"""
    Errors
    ~~~~~~

    Every failure surfaced to callers carries a machine field `error_kind`
    and the process exit code the CLI maps it to.
"""

from typing import Optional


class MatchstatError(Exception):

    error_kind = 'internal'
    exit_code = 1

    def to_dict(self) -> dict:
        return {
            'error_kind': self.error_kind,
            'message': str(self),
        }


class ValidationError(MatchstatError):
    """ bad arguments or malformed input objects """
    error_kind = 'validation'
    exit_code = 2


class RangeError(ValidationError):
    """ argument outside a tabulated grid """
    error_kind = 'range'


class DomainError(ValidationError):
    """ argument outside the domain of a closed form """
    error_kind = 'domain'


class DegenerateFitError(ValidationError):
    """ zero or non-finite residual in a decay fit """


class PrecisionError(MatchstatError):
    """ certificate not met below the precision ceiling """
    error_kind = 'precision'
    exit_code = 3

    def __init__(self, message: str, suggested_bits: Optional[int] = None):
        super().__init__(message)
        self.suggested_bits = suggested_bits

    # Override
    def to_dict(self) -> dict:
        info = super().to_dict()
        if self.suggested_bits is not None:
            info['suggested_bits'] = self.suggested_bits
        return info


class ConvergenceError(MatchstatError):
    error_kind = 'convergence'
    exit_code = 3


class SingularityError(MatchstatError):
    """ Levinson recursion stepped beyond the support of the measure """
    error_kind = 'singularity'
    exit_code = 3


class CapacityError(MatchstatError):
    """ problem size beyond the desk-scale guards """
    error_kind = 'capacity'
    exit_code = 4


class InsufficientAcceptanceError(CapacityError):
    """ too few accepted walk samples to estimate a law """


"""
    Common
    ~~~~~~

    Errors, precision policy and report encoding shared by all modules
"""

from .errors import MatchstatError
from .errors import ValidationError, RangeError, DomainError, DegenerateFitError
from .errors import PrecisionError, ConvergenceError, SingularityError
from .errors import CapacityError, InsufficientAcceptanceError

from .precision import BigReal, Certificate, certified
from .precision import DEFAULT_BITS, GUARD_BITS, CEILING_BITS, TOLERANCE_BITS
from .precision import to_decimal, from_decimal, decimal_digits, det_start_bits

from .report import SCHEMA_VERSION
from .report import encode_value, create_report, error_report, report_to_json, rows_to_csv


__all__ = [

    'MatchstatError',
    'ValidationError', 'RangeError', 'DomainError', 'DegenerateFitError',
    'PrecisionError', 'ConvergenceError', 'SingularityError',
    'CapacityError', 'InsufficientAcceptanceError',

    'BigReal', 'Certificate', 'certified',
    'DEFAULT_BITS', 'GUARD_BITS', 'CEILING_BITS', 'TOLERANCE_BITS',
    'to_decimal', 'from_decimal', 'decimal_digits', 'det_start_bits',

    'SCHEMA_VERSION',
    'encode_value', 'create_report', 'error_report', 'report_to_json', 'rows_to_csv',

]

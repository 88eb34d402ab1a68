
"""
    Reports
    ~~~~~~~

    JSON reports are versioned (`"schema": 1`); numbers are written as
    decimal strings next to the precision they were computed at.
"""

import csv
import io
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from mpmath import mpf

from ..utils import json_encode

from .precision import to_decimal


SCHEMA_VERSION = 1


def encode_value(value: Any, bits: int = 64) -> Any:
    """ convert numbers (recursively) into JSON-safe values """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (mpf, Fraction, float)):
        return to_decimal(value, bits=bits)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Dict):
        return {str(key): encode_value(item, bits=bits) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(item, bits=bits) for item in value]
    if hasattr(value, 'to_dict'):
        return encode_value(value.to_dict(), bits=bits)
    return str(value)


def create_report(command: str, params: Dict[str, Any], result: Dict[str, Any], prec_bits: int = 64) -> dict:
    return {
        'schema': SCHEMA_VERSION,
        'command': command,
        'params': encode_value(params, bits=prec_bits),
        'prec_bits': prec_bits,
        'result': encode_value(result, bits=prec_bits),
    }


def error_report(error_kind: str, message: str, **extra) -> dict:
    info = {
        'schema': SCHEMA_VERSION,
        'error_kind': error_kind,
        'message': message,
    }
    for key, value in extra.items():
        info[key] = encode_value(value)
    return info


def report_to_json(report: dict) -> str:
    return json_encode(obj=report)


def rows_to_csv(header: Sequence[str], rows: List[Sequence[Any]], bits: int = 64) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([encode_value(item, bits=bits) for item in row])
    return buffer.getvalue()

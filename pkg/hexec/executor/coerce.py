# Copyright (c) 2026 The hexec Authors. All rights reserved.
import re
from dataclasses import dataclass
from datetime import datetime
from decimal import Decimal
from typing import Optional, Sequence, Tuple, Union

from hexec.common.config import DEFAULT_DATE_FORMATS, NormalizationOptions
from hexec.common.results import HexecExceptionNotNumeric
from hexec.executor.normalize import normalize_answer

_INTEGER = re.compile(r"^[+-]?(?:\d{1,3}(?:,\d{3})+|\d+)$")
_DECIMAL = re.compile(r"^[+-]?(?:\d{1,3}(?:,\d{3})+|\d+)?\.\d+$")


@dataclass(frozen=True, order=True)
class Numeric:
    value: Decimal


@dataclass(frozen=True, order=True)
class DateKey:
    year: int
    month: int = 1
    day: int = 1


@dataclass(frozen=True, order=True)
class Lexical:
    text: str


# Values of different variants do not compare.
ComparableValue = Union[Numeric, DateKey, Lexical]


def parse_number(text: str) -> Optional[Decimal]:
    t = text.strip()
    if _INTEGER.match(t) or _DECIMAL.match(t):
        return Decimal(t.replace(",", ""))
    return None


def parse_date(text: str, date_formats: Sequence[str] = None) -> Optional[DateKey]:
    t = text.strip().rstrip(".")
    for fmt in date_formats or DEFAULT_DATE_FORMATS:
        try:
            d = datetime.strptime(t, fmt)
        except ValueError:
            continue
        return DateKey(d.year, d.month, d.day)
    return None


def coerce_number(text: str, date_formats: Sequence[str] = None) -> Decimal:
    """
    Integer (thousands separators allowed), then decimal, then a date
    (its year). A single leading or trailing word is tolerated around a
    number, e.g. "4 siblings".
    """
    number = parse_number(text)
    if number is not None:
        return number

    date = parse_date(text, date_formats)
    if date is not None:
        return Decimal(date.year)

    tokens = text.split()
    if len(tokens) == 2:
        for token in tokens:
            number = parse_number(token)
            if number is not None:
                return number

    raise HexecExceptionNotNumeric(text)


def parse_comparable(
    text: str,
    date_formats: Sequence[str] = None,
    normalization: NormalizationOptions = None,
) -> ComparableValue:
    number = parse_number(text)
    if number is not None:
        return Numeric(number)
    date = parse_date(text, date_formats)
    if date is not None:
        return date
    return Lexical(normalize_answer(text, normalization))


def align_comparables(
    a: ComparableValue, b: ComparableValue
) -> Tuple[ComparableValue, ComparableValue]:
    # A bare integral number compared with a date is read as a year.
    def as_year(v: ComparableValue) -> ComparableValue:
        if (
            isinstance(v, Numeric)
            and v.value == v.value.to_integral_value()
            and 1 <= v.value <= 9999
        ):
            return DateKey(int(v.value))
        return v

    if isinstance(a, Numeric) and isinstance(b, DateKey):
        return as_year(a), b
    if isinstance(a, DateKey) and isinstance(b, Numeric):
        return a, as_year(b)
    return a, b

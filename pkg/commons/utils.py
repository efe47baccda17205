import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Union

import yaml

RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def load_from_yml(path: Union[str, Path]) -> Dict[str, Any]:
    if not Path(path).exists():
        return {}
    with open(path, "r") as f:
        content = yaml.safe_load(f)
    return content or {}


def str_to_values(values: str, sep: str = ",") -> List[str]:
    """
    Split on sep and on whitespace, dropping empty chunks
    e.g. '1, 0  1' -> ['1', '0', '1']
    """
    return [
        chunk
        for value in values.split(sep)
        for chunk in value.split()
        if chunk
    ]


def to_fraction(value: Any) -> Fraction:
    """
    Exact conversion to Fraction.
    Accepts Fraction, int, float (exact binary value) and 'num/den' strings.

    Args:
        value: scalar to convert

    Returns:
        (Fraction)
    """
    if isinstance(value, bool):
        raise TypeError("[Error: utils.to_fraction] booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        match = RATIONAL_PATTERN.match(value)
        if match is None:
            raise ValueError(
                f"[Error: utils.to_fraction] '{value}' is not a rational literal"
            )
        den = int(match.group(2)) if match.group(2) is not None else 1
        if den == 0:
            raise ValueError(
                f"[Error: utils.to_fraction] zero denominator in '{value}'"
            )
        return Fraction(int(match.group(1)), den)
    raise TypeError(
        f"[Error: utils.to_fraction] cannot convert {type(value).__name__}"
    )


def format_rational(value: Fraction) -> str:
    """'num/den', or 'num' when the denominator is 1"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

"""
Matrix families, one module per family.

Every module exposes validate(params) -> params and get(params). The helpers
below read and check a single parameter each.
"""

import math
from typing import Any, Dict, List, Optional, Sequence

from .. import util


def integer(
    params: Dict[str, Any], name: str, default: Optional[int] = None, minimum: Optional[int] = None
) -> int:
    value = params.get(name, default)
    if value is None:
        raise util.ParameterError(f"Missing parameter '{name}'")
    if isinstance(value, bool) or not isinstance(value, int):
        raise util.ParameterError(f"Parameter '{name}' must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise util.ParameterError(f"Parameter '{name}' must be >= {minimum}, got {value}")
    return value


def real(
    params: Dict[str, Any],
    name: str,
    default: Optional[float] = None,
    low: Optional[float] = None,
    high: Optional[float] = None,
) -> float:
    value = params.get(name, default)
    if value is None:
        raise util.ParameterError(f"Missing parameter '{name}'")
    try:
        value = float(value)
    except (TypeError, ValueError) as e:
        raise util.ParameterError(f"Parameter '{name}' must be a number, got {value!r}") from e
    if not math.isfinite(value):
        raise util.ParameterError(f"Parameter '{name}' must be finite")
    if (low is not None and value < low) or (high is not None and value > high):
        raise util.ParameterError(f"Parameter '{name}' must lie in [{low}, {high}]")
    return value


def real_list(params: Dict[str, Any], name: str, default: Optional[Sequence[float]] = None) -> List[float]:
    values = params.get(name, default)
    if values is None:
        raise util.ParameterError(f"Missing parameter '{name}'")
    if isinstance(values, (str, bytes)) or not hasattr(values, "__iter__"):
        raise util.ParameterError(f"Parameter '{name}' must be a list of numbers")
    return [real({name: v}, name) for v in values]


def choice(params: Dict[str, Any], name: str, options: Dict[str, Any], default: str) -> Any:
    """Look up a string option; options maps accepted spellings to values."""
    value = params.get(name, default)
    if value not in options:
        raise util.ParameterError(
            f"Parameter '{name}' must be one of {sorted(options)}, got {value!r}"
        )
    return options[value]


def flag(params: Dict[str, Any], name: str, default: bool) -> bool:
    value = params.get(name, default)
    if not isinstance(value, bool):
        raise util.ParameterError(f"Parameter '{name}' must be true or false")
    return value


def point_labels(points: Sequence[float]) -> List[str]:
    return [f"{x:g}" for x in points]


def distinct(points: Sequence[float], name: str = "points") -> None:
    if len(set(point_labels(points))) != len(points):
        raise util.ParameterError(f"Parameter '{name}' must not repeat a point")

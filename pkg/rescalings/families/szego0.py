"""
Positive definite bump kernel from the Szego kernel.

K0(x, y) = Re (1 - x^2)(1 - y^2) / (4 - exp(i pi (x - y))) on (-1, 1)^2,
extended by 0.
"""

import cmath
from typing import Any, Dict

from ..bifunction import LabeledBiFunction
from . import distinct, point_labels, real_list


def kernel(x: float, y: float) -> float:
    if abs(x) >= 1 or abs(y) >= 1:
        return 0.0
    value = (1 - x * x) * (1 - y * y) / (4 - cmath.exp(1j * cmath.pi * (x - y)))
    return value.real


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    points = real_list(params, "points", default=[0.0])
    distinct(points)
    return {"points": points}


def get(params: Dict[str, Any]) -> LabeledBiFunction:
    points = params["points"]
    rows = [[complex(kernel(x, y)) for y in points] for x in points]
    return LabeledBiFunction.from_rows(rows, point_labels(points))

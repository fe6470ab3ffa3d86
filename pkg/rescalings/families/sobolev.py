"""
Samples of the kernel exp(-|x - y|).
"""

import math
from typing import Any, Dict, Sequence

import numpy as np

from .. import util
from ..bifunction import LabeledBiFunction
from . import distinct, point_labels, real_list


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    points = real_list(params, "points")
    if not points:
        raise util.ParameterError("Parameter 'points' must not be empty")
    distinct(points)
    return {"points": points}


def get(params: Dict[str, Any]) -> LabeledBiFunction:
    points = np.asarray(params["points"], dtype=float)
    kernel = np.exp(-np.abs(points[:, None] - points[None, :]))
    return LabeledBiFunction.from_array(kernel, point_labels(params["points"]))


def closed_form_det(points: Sequence[float]) -> float:
    """prod (1 - exp(-2 (x_{i+1} - x_i))) over strictly increasing points."""
    points = [float(x) for x in points]
    if not points:
        raise util.ParameterError("closed_form_det needs at least one point")
    for left, right in zip(points, points[1:]):
        if not right > left:
            raise util.ParameterError("Points must be strictly increasing")
    return math.prod(-math.expm1(-2 * (right - left)) for left, right in zip(points, points[1:]))

"""
Sampled ladder kernels M^+ and M^- on [0, 4].

K = sum over integers n of K0(x - n, y - n), where K0 vanishes outside
(-1, 1)^2, so K is nonzero only on a ladder of unit squares. The pair is

    M^+/- = K + f^+/- (x) f^+/-,

with f^+/- = +/-(1 - 2x) on [0, 1/2], 0 on [1/2, 7/2] and 2x - 7 on [7/2, 4].
Both satisfy the triple-product identity of non-vanishing symmetric
rescalings, yet they are not rescalings of each other.
"""

import math
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from .. import util
from ..bifunction import LabeledBiFunction
from . import choice, distinct, point_labels, real, real_list, szego0

LOW, HIGH = 0.0, 4.0


def polynomial(x: float, y: float) -> float:
    if abs(x) >= 1 or abs(y) >= 1:
        return 0.0
    return (1 - x * x) * (1 - y * y)


VARIANTS: Dict[str, Callable[[float, float], float]] = {
    "polynomial": polynomial,
    "szego": szego0.kernel,
}


def ladder(x: float, y: float, base: Callable[[float, float], float]) -> float:
    """Sum of the shifted bumps whose square contains (x, y)."""
    total = 0.0
    for n in range(math.floor(min(x, y)), math.ceil(max(x, y)) + 1):
        if abs(x - n) < 1 and abs(y - n) < 1:
            total += base(x - n, y - n)
    return total


def f4(x: float, sign: int) -> float:
    if x <= 0.5:
        return sign * (1 - 2 * x)
    if x < 3.5:
        return 0.0
    return 2 * x - 7


def grid(step: float) -> List[float]:
    count = (HIGH - LOW) / step
    if abs(count - round(count)) > 1e-9:
        raise util.ParameterError(f"Step {step} does not divide [0, 4]")
    return [float(x) for x in np.linspace(LOW, HIGH, int(round(count)) + 1)]


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    variant = choice(params, "variant", {v: v for v in VARIANTS}, "polynomial")
    if params.get("points") is not None:
        if params.get("step") is not None:
            raise util.ParameterError("Give either 'points' or 'step', not both")
        points = sorted(real_list(params, "points"))
        if not points or points[0] < LOW or points[-1] > HIGH:
            raise util.ParameterError("Points must be a nonempty subset of [0, 4]")
        distinct(points)
        return {"variant": variant, "points": points}

    step = real(params, "step", default=0.25, low=1e-3, high=HIGH)
    return {"variant": variant, "step": step, "points": grid(step)}


def matrix(points: List[float], variant: str, sign: int) -> LabeledBiFunction:
    base = VARIANTS[variant]
    f = [f4(x, sign) for x in points]
    rows = [
        [complex(ladder(x, y, base) + f[i] * f[j]) for j, y in enumerate(points)]
        for i, x in enumerate(points)
    ]
    return LabeledBiFunction.from_rows(rows, point_labels(points))


def get(params: Dict[str, Any]) -> Tuple[LabeledBiFunction, LabeledBiFunction]:
    points = params["points"]
    return (
        matrix(points, params["variant"], 1),
        matrix(points, params["variant"], -1),
    )

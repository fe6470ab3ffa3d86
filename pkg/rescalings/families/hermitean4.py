"""
A Hermitean 4x4 pair with equal principal minors that are not rescalings,
neither as given nor after transposing M.
"""

import cmath
from typing import Any, Dict, Tuple

from ..bifunction import LabeledBiFunction


def _phase(numerator: int, denominator: int) -> complex:
    return cmath.exp(1j * cmath.pi * numerator / denominator)


def matrices() -> Tuple[list, list]:
    a, b, c = _phase(1, 12), _phase(1, 4), _phase(1, 3)
    first = [
        [4, a, 1, 1],
        [a.conjugate(), 4, 1, b],
        [1, 1, 4, c],
        [1, b.conjugate(), c.conjugate(), 4],
    ]
    d, e = _phase(1, 6), _phase(1, 12)
    second = [
        [4, d, e, 1],
        [d.conjugate(), 4, 1, d],
        [e.conjugate(), 1, 4, e],
        [1, d.conjugate(), e.conjugate(), 4],
    ]
    return first, second


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    return {}


def get(params: Dict[str, Any]) -> Tuple[LabeledBiFunction, LabeledBiFunction]:
    first, second = matrices()
    return (
        LabeledBiFunction.from_rows([[complex(v) for v in row] for row in first]),
        LabeledBiFunction.from_rows([[complex(v) for v in row] for row in second]),
    )

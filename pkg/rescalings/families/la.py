"""
The path matrix with chords, L_A.

On labels 1..N the basal matrix has 4 on the diagonal and 1 next to it. For
every k >= 2 with (k^2 + k) / 2 <= N the chord between (k^2 - k) / 2 and
(k^2 + k) / 2 carries +1 when k is in A and -1 otherwise.
"""

from typing import Any, Dict, List, Sequence

from .. import util
from ..bifunction import LabeledBiFunction
from . import integer


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    size = integer(params, "N", minimum=1)
    members = params.get("A", [])
    if isinstance(members, (str, bytes)) or not hasattr(members, "__iter__"):
        raise util.ParameterError("Parameter 'A' must be a list of integers")
    chosen = set()
    for k in members:
        if isinstance(k, bool) or not isinstance(k, int) or k < 2:
            raise util.ParameterError(f"A must be a subset of {{2, 3, ...}}, got {k!r}")
        chosen.add(k)
    return {"N": size, "A": sorted(chosen)}


def chords(size: int) -> List[int]:
    """Every k whose chord fits in 1..size."""
    found = []
    k = 2
    while (k * k + k) // 2 <= size:
        found.append(k)
        k += 1
    return found


def rows(size: int, members: Sequence[int]) -> List[List[int]]:
    matrix = [[0] * size for _ in range(size)]
    for i in range(size):
        matrix[i][i] = 4
        if i + 1 < size:
            matrix[i][i + 1] = matrix[i + 1][i] = 1
    for k in chords(size):
        # 1-based labels
        low, high = (k * k - k) // 2 - 1, (k * k + k) // 2 - 1
        value = 1 if k in members else -1
        matrix[low][high] = matrix[high][low] = value
    return matrix


def get(params: Dict[str, Any]) -> LabeledBiFunction:
    return LabeledBiFunction.from_rows(rows(params["N"], params["A"]))

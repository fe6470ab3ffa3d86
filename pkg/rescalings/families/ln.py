"""
Cyclic tridiagonal matrices L_n^+ and L_n^-.

4 on the diagonal, 1 next to it, and +1 or -1 in the two corners. For n >= 3
all proper principal minors of L_n^+ and L_n^- agree while the determinants
differ.
"""

from typing import Any, Dict, List

from ..bifunction import LabeledBiFunction
from . import choice, integer

SIGNS = {"plus": 1, "+": 1, "minus": -1, "-": -1}


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "n": integer(params, "n", minimum=3),
        "sign": "plus" if choice(params, "sign", SIGNS, "plus") > 0 else "minus",
    }


def rows(n: int, corner: int) -> List[List[int]]:
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = 4
        if i + 1 < n:
            matrix[i][i + 1] = matrix[i + 1][i] = 1
    matrix[0][n - 1] = matrix[n - 1][0] = corner
    return matrix


def get(params: Dict[str, Any]) -> LabeledBiFunction:
    return LabeledBiFunction.from_rows(rows(params["n"], SIGNS[params["sign"]]))

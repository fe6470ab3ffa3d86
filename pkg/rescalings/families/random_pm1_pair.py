"""
Random symmetric L and its sign rescaling D L D.

Entries are exact integers in +/-1..+/-5; each off-diagonal pair is nonzero
with probability density.
"""

from typing import Any, Dict, List, Tuple

import numpy as np

from ..bifunction import LabeledBiFunction, apply_rescaling
from . import flag, integer, real


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "n": integer(params, "n", default=6, minimum=1),
        "density": real(params, "density", default=0.5, low=0.0, high=1.0),
        "seed": integer(params, "seed", default=0),
        "connected": flag(params, "connected", True),
    }


def entry(rng: np.random.Generator) -> int:
    return int(rng.choice([-1, 1])) * int(rng.integers(1, 6))


def signs(rng: np.random.Generator, n: int) -> List[int]:
    return [int(s) for s in rng.choice([-1, 1], size=n)]


def symmetric_rows(
    rng: np.random.Generator, n: int, density: float, connected: bool
) -> List[List[int]]:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = entry(rng)
        for j in range(i + 1, n):
            if rng.random() < density:
                rows[i][j] = rows[j][i] = entry(rng)
    if connected:
        order = [int(v) for v in rng.permutation(n)]
        for a, b in zip(order, order[1:]):
            if rows[a][b] == 0:
                rows[a][b] = rows[b][a] = entry(rng)
    return rows


def sample(
    rng: np.random.Generator, n: int, density: float = 0.5, connected: bool = True
) -> Tuple[LabeledBiFunction, LabeledBiFunction, List[int]]:
    """(L, D L D, D)."""
    L = LabeledBiFunction.from_rows(symmetric_rows(rng, n, density, connected))
    d = signs(rng, n)
    return L, apply_rescaling(L, d, d), d


def get(params: Dict[str, Any]) -> Tuple[LabeledBiFunction, LabeledBiFunction]:
    rng = np.random.default_rng(params["seed"])
    L, M, _ = sample(rng, params["n"], params["density"], params["connected"])
    return L, M

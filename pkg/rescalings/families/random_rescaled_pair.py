"""
Random L and f (x) g . L for a chosen rescaling kind.

The general kind draws an unsymmetric L whose diagonal may vanish; the
other kinds keep the diagonal nonzero. Scalings are exact: integers,
Gaussian integers for the Hermitean kind, and unit fractions for the
reciprocal kind.
"""

from fractions import Fraction
from typing import Any, Dict, List, Tuple

import numpy as np

from ..bifunction import LabeledBiFunction, apply_rescaling
from ..scalar import GaussianRational, Scalar
from . import choice, flag, integer, real
from .random_pm1_pair import entry, signs

KINDS = {k: k for k in ("general", "symmetric", "hermitean", "reciprocal", "pm1")}


def validate(params: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "n": integer(params, "n", default=6, minimum=1),
        "density": real(params, "density", default=0.5, low=0.0, high=1.0),
        "seed": integer(params, "seed", default=0),
        "kind": choice(params, "kind", KINDS, "general"),
        "connected": flag(params, "connected", False),
    }


def rows(
    rng: np.random.Generator, n: int, density: float, diagonal: bool, connected: bool
) -> List[List[int]]:
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if (i == j and diagonal) or rng.random() < density:
                matrix[i][j] = entry(rng)
    if connected:
        order = [int(v) for v in rng.permutation(n)]
        for a, b in zip(order, order[1:]):
            if matrix[a][b] == 0:
                matrix[a][b] = entry(rng)
    return matrix


def gaussian(rng: np.random.Generator) -> GaussianRational:
    while True:
        re_part, im_part = (int(v) for v in rng.integers(-3, 4, size=2))
        if re_part or im_part:
            return GaussianRational(re_part, im_part)


def scaling(rng: np.random.Generator, n: int, kind: str) -> Tuple[List[Scalar], List[Scalar]]:
    if kind == "pm1":
        f = signs(rng, n)
        return f, f
    if kind == "hermitean":
        f = [gaussian(rng) for _ in range(n)]
        return f, [v.conjugate() for v in f]

    f = [entry(rng) for _ in range(n)]
    if kind == "general":
        return f, [entry(rng) for _ in range(n)]
    if kind == "reciprocal":
        return f, [Fraction(1, v) for v in f]
    return f, f


def sample(
    rng: np.random.Generator,
    n: int,
    density: float = 0.5,
    kind: str = "general",
    connected: bool = False,
) -> Tuple[LabeledBiFunction, LabeledBiFunction, List[Scalar], List[Scalar]]:
    """(L, f (x) g . L, f, g)."""
    L = LabeledBiFunction.from_rows(rows(rng, n, density, kind != "general", connected))
    f, g = scaling(rng, n, kind)
    return L, apply_rescaling(L, f, g), f, g


def get(params: Dict[str, Any]) -> Tuple[LabeledBiFunction, LabeledBiFunction]:
    rng = np.random.default_rng(params["seed"])
    L, M, _, _ = sample(
        rng, params["n"], params["density"], params["kind"], params["connected"]
    )
    return L, M

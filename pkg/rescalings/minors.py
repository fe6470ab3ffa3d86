"""
Principal minors, their comparison, and the corner-tridiagonal determinant.
"""

import itertools
import logging
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from . import config, scalar, util
from .bifunction import LabeledBiFunction, require_same_labels
from .scalar import GaussianRational, Scalar


@dataclass(frozen=True)
class SubsetMinor:
    """Principal minor over a sorted index subset."""

    subset: Tuple[int, ...]
    value: Scalar


@dataclass(frozen=True)
class MinorDifference:
    """A subset on which two matrices have different principal minors."""

    subset: Tuple[int, ...]
    value_l: Scalar
    value_m: Scalar


@dataclass(frozen=True)
class MinorComparison:
    """Outcome of comparing principal minors up to some cardinality."""

    equal: bool
    first_diff: Optional[MinorDifference]
    max_cardinality_checked: int


@dataclass(frozen=True)
class MultiplicativityResult:
    """Outcome of the multiplicativity test for det_M / det_L."""

    multiplicative: bool
    weights: Tuple[Scalar, ...]
    violating_subset: Optional[Tuple[int, ...]] = None


def _bareiss(
    matrix: List[List[Any]],
    zero: Any,
    one: Any,
    mul: Callable,
    sub: Callable,
    div: Callable,
) -> Tuple[int, Any]:
    """Fraction-free elimination over an integral domain; returns (sign, det)."""
    n = len(matrix)
    sign = 1
    previous = one
    for k in range(n - 1):
        if matrix[k][k] == zero:
            swap = next((i for i in range(k + 1, n) if matrix[i][k] != zero), None)
            if swap is None:
                return 1, zero
            matrix[k], matrix[swap] = matrix[swap], matrix[k]
            sign = -sign
        pivot = matrix[k][k]
        for i in range(k + 1, n):
            row, lead = matrix[i], matrix[i][k]
            for j in range(k + 1, n):
                row[j] = div(sub(mul(row[j], pivot), mul(lead, matrix[k][j])), previous)
        previous = pivot
    return sign, matrix[n - 1][n - 1]


def _gauss_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gauss_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gauss_div(a, b):
    # Exact: Bareiss guarantees divisibility.
    norm = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) // norm, (a[1] * b[0] - a[0] * b[1]) // norm)


def _exact_determinant(rows: List[List[GaussianRational]]) -> GaussianRational:
    n = len(rows)
    denominator = 1
    for row in rows:
        for value in row:
            denominator = math.lcm(
                denominator, value.real.denominator, value.imag.denominator
            )

    if all(value.imag == 0 for row in rows for value in row):
        ints = [[int(value.real * denominator) for value in row] for row in rows]
        sign, det = _bareiss(ints, 0, 1, operator.mul, operator.sub, operator.floordiv)
        return GaussianRational(Fraction(sign * det, denominator**n))

    pairs = [
        [(int(v.real * denominator), int(v.imag * denominator)) for v in row]
        for row in rows
    ]
    sign, (re_part, im_part) = _bareiss(
        pairs, (0, 0), (1, 0), _gauss_mul, _gauss_sub, _gauss_div
    )
    scale = sign * denominator**n
    return GaussianRational(Fraction(re_part, scale), Fraction(im_part, scale))


def determinant(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """Bareiss in exact mode, LU with partial pivoting in float mode."""
    rows = [list(row) for row in rows]
    if not rows:
        return scalar.ONE
    if all(scalar.is_exact(v) for row in rows for v in row):
        return _exact_determinant(rows)
    return complex(linalg.det(np.array(rows, dtype=complex)))


def _zero_like(L: LabeledBiFunction) -> Scalar:
    return scalar.ZERO if L.exact else 0j


def principal_minor(L: LabeledBiFunction, subset: Sequence[int]) -> Scalar:
    """det_L over subset; a repeated index gives 0 and the empty subset 1."""
    indices = list(subset)
    for index in indices:
        if not isinstance(index, (int, np.integer)) or not 0 <= index < L.n:
            raise util.IndexRangeError(f"Index {index} out of range for n={L.n}")
    if len(set(indices)) != len(indices):
        return _zero_like(L)
    if not indices:
        return scalar.ONE if L.exact else 1 + 0j

    indices.sort()
    return determinant([[L[i, j] for j in indices] for i in indices])


def iter_subsets(
    n: int, max_card: int, min_card: int = 1
) -> Iterator[Tuple[int, ...]]:
    """Cardinality-major, lexicographic within a cardinality."""
    for size in range(min_card, max_card + 1):
        yield from itertools.combinations(range(n), size)


def count_subsets(n: int, max_card: int, min_card: int = 1) -> int:
    return sum(math.comb(n, size) for size in range(min_card, max_card + 1))


def minors_agree(
    value_l: Scalar, value_m: Scalar, size: int, scale: float, tolerance: float
) -> bool:
    """Exact equality, or |a - b| <= tol * max(scale^k, |a|, |b|)."""
    if scalar.is_exact(value_l) and scalar.is_exact(value_m):
        return value_l == value_m
    bound = max(scale**size, scalar.magnitude(value_l), scalar.magnitude(value_m))
    return scalar.is_zero(value_l - value_m, tolerance, bound)


def first_difference(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    subsets: Iterator[Tuple[int, ...]],
    tolerance: float,
) -> Tuple[Optional[MinorDifference], int]:
    """Scan subsets in order; return the first difference and the count checked."""
    scale = max(L.scale, M.scale)
    checked = 0
    for subset in subsets:
        checked += 1
        value_l = principal_minor(L, subset)
        value_m = principal_minor(M, subset)
        if not minors_agree(value_l, value_m, len(subset), scale, tolerance):
            return MinorDifference(subset, value_l, value_m), checked
    return None, checked


def _check_max_card(n: int, max_card: int) -> None:
    if not 0 <= max_card <= n:
        raise util.IndexRangeError(f"max_card must lie in [0, {n}], got {max_card}")


def compare_minors(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    max_card: Optional[int] = None,
    tolerance: Optional[float] = None,
    workers: Optional[int] = None,
) -> MinorComparison:
    """Compare det_L and det_M on all subsets up to max_card elements."""
    require_same_labels(L, M)
    tol = config.get_tolerance(tolerance)
    max_card = L.n if max_card is None else max_card
    _check_max_card(L.n, max_card)

    if workers is not None and workers > 1:
        from .parallel import MinorScanner

        diff = MinorScanner(max_workers=workers).first_difference(L, M, max_card, tol)
    else:
        diff, _ = first_difference(L, M, iter_subsets(L.n, max_card), tol)

    if diff is None:
        logging.debug("Minors agree up to cardinality %d", max_card)
        return MinorComparison(True, None, max_card)

    logging.debug("Minors differ on subset %s", diff.subset)
    return MinorComparison(False, diff, len(diff.subset))


def all_minors(
    L: LabeledBiFunction, max_card: Optional[int] = None
) -> Iterator[SubsetMinor]:
    """Every principal minor up to max_card, in enumeration order."""
    max_card = L.n if max_card is None else max_card
    _check_max_card(L.n, max_card)
    for subset in iter_subsets(L.n, max_card):
        yield SubsetMinor(subset, principal_minor(L, subset))


def continuant(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    """Determinant of the open tridiagonal matrix with diagonal a, off-diagonal b."""
    previous, current = scalar.ONE, (a[0] if a else scalar.ONE)
    for k in range(1, len(a)):
        previous, current = current, a[k] * current - b[k - 1] ** 2 * previous
    return current


def corner_tridiag_det(a: Sequence[Any], b: Sequence[Any]) -> Scalar:
    """
    Determinant of the cyclic tridiagonal matrix.

    Diagonal a, off-diagonal b[0..n-2] and corners b[n-1]; b[n-1] = 0 is the
    open path. For n = 2 the corner lands on the off-diagonal, so the entry
    there is b[0] + b[1].
    """
    n = len(a)
    if len(b) != n:
        raise util.DimensionMismatchError(f"len(a)={n} but len(b)={len(b)}")
    if n < 2:
        raise util.ParameterError("corner_tridiag_det needs n >= 2")

    values = [scalar.coerce(v) for v in list(a) + list(b)]
    if not all(scalar.is_exact(v) for v in values):
        values = [complex(v) for v in values]
    a, b = values[:n], values[n:]

    product = scalar.ONE
    for value in b:
        product = product * value

    return (
        a[0] * continuant(a[1:], b[1 : n - 1])
        - b[0] ** 2 * continuant(a[2:], b[2 : n - 1])
        - b[n - 1] ** 2 * continuant(a[1 : n - 1], b[1 : n - 2])
        - 2 * (-1) ** n * product
    )


def multiplicativity_test(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    tolerance: Optional[float] = None,
) -> MultiplicativityResult:
    """Is det_M / det_L multiplicative, with weights w(x) = M(x,x) / L(x,x)?"""
    require_same_labels(L, M)
    tol = config.get_tolerance(tolerance)

    for x in range(M.n):
        if M.is_zero_at(x, x, tol):
            raise util.DegenerateMatrixError(f"M vanishes on the diagonal at {x}")

    weights = []
    for x in range(L.n):
        if L.is_zero_at(x, x, tol):
            raise util.VanishingMinorError(f"det_L vanishes on ({x},)")
        weights.append(M[x, x] / L[x, x])

    scale = max(L.scale, M.scale)
    violating = None
    for subset in iter_subsets(L.n, L.n, min_card=2):
        value_l = principal_minor(L, subset)
        if scalar.is_zero(value_l, tol, L.scale ** len(subset)):
            raise util.VanishingMinorError(f"det_L vanishes on {subset}")
        if violating is not None:
            continue

        expected = value_l
        for x in subset:
            expected = expected * weights[x]
        if not minors_agree(principal_minor(M, subset), expected, len(subset), scale, tol):
            violating = subset

    if violating is not None:
        logging.debug("Multiplicativity fails on %s", violating)
    return MultiplicativityResult(violating is None, tuple(weights), violating)

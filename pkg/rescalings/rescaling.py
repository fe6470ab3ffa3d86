"""
Decide whether two matrices are rescalings of one another.

A decision returns either a RescalingCertificate (the functions f and g with
M = f (x) g . L) or a Counterexample explaining why no such functions exist.
Exceptions are raised only for violated preconditions.
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import ClassVar, Dict, List, Optional, Sequence, Tuple, Union

from . import config, minors, scalar, util
from .bifunction import (
    LabeledBiFunction,
    apply_rescaling,
    graph_view,
    is_non_degenerate,
    is_symmetric,
    require_same_labels,
    zero_pattern_mismatch,
)
from .scalar import Scalar


class RescalingKind(str, Enum):
    GENERAL = "general"
    SYMMETRIC = "symmetric"
    HERMITEAN = "hermitean"
    RECIPROCAL = "reciprocal"
    PM1 = "pm1"


class GroupTag(str, Enum):
    UNIT_CIRCLE = "unitCircle"
    REAL_NONZERO = "realNonzero"
    POSITIVE_REAL = "positiveReal"
    PLUS_MINUS_ONE = "plusMinusOne"


class TripleVariant(str, Enum):
    STAR = "star"
    STAR_PRIME = "starPrime"
    STAR_DOUBLE_PRIME = "starDoublePrime"
    NV = "nv"


@dataclass(frozen=True)
class RescalingCertificate:
    """M = f (x) g . L, with g derived from f for every kind but general."""

    kind: RescalingKind
    f: Tuple[Scalar, ...]
    g: Tuple[Scalar, ...]
    residual: Union[Fraction, float]
    anchors: Tuple[Tuple[int, int], ...]
    group_tag: Optional[GroupTag] = None


@dataclass(frozen=True)
class Counterexample:
    """Constructive reason why no rescaling exists."""

    variant: ClassVar[str] = "counterexample"


@dataclass(frozen=True)
class ZeroPatternMismatch(Counterexample):
    variant: ClassVar[str] = "zeroPatternMismatch"
    x: int
    y: int


@dataclass(frozen=True)
class InconsistentCycle(Counterexample):
    """
    Closed walk whose constraints cannot all hold.

    The walk returns from its last vertex to its first. ratio is
    M(x, y) / (f(x) g(y) L(x, y)) on the closing entry, with f and g
    propagated along the walk; for general, reciprocal and pm1 this equals
    cycle_ratio(). For general the vertices alternate row and column
    indices, starting with a row.
    """

    variant: ClassVar[str] = "inconsistentCycle"
    vertices: Tuple[int, ...]
    ratio: Scalar
    bipartite: bool = False


@dataclass(frozen=True)
class DifferingMinor(Counterexample):
    variant: ClassVar[str] = "differingMinor"
    subset: Tuple[int, ...]
    value_l: Scalar
    value_m: Scalar


@dataclass(frozen=True)
class DiagonalObstruction(Counterexample):
    variant: ClassVar[str] = "diagonalObstruction"
    x: int


@dataclass(frozen=True)
class GroupMismatch(Counterexample):
    """Ratio M(x, y) / L(x, y) outside the requested group."""

    variant: ClassVar[str] = "groupMismatch"
    x: int
    y: int
    ratio: Scalar


@dataclass(frozen=True)
class TripleResult:
    holds: bool
    witness: Optional[Tuple[int, int, int]] = None


Decision = Union[RescalingCertificate, Counterexample]


def _triple_sides(L, M, variant, x, y, z):
    if variant is TripleVariant.STAR:
        lhs = M[x, y] * M[y, z] * L[x, z] * L[y, y]
        rhs = L[x, y] * L[y, z] * M[x, z] * M[y, y]
    elif variant is TripleVariant.STAR_PRIME:
        lhs = M[x, y] * M[z, y] * L[x, z] * L[y, y]
        rhs = L[x, y] * L[z, y] * M[x, z] * M[y, y]
    elif variant is TripleVariant.STAR_DOUBLE_PRIME:
        lhs = M[x, y] * M[z, y].conjugate() * L[x, z] * L[y, y]
        rhs = L[x, y] * L[z, y].conjugate() * M[x, z] * M[y, y]
    else:
        lhs = L[x, y] * L[y, z] * L[z, x]
        rhs = M[x, y] * M[y, z] * M[z, x]
    return lhs, rhs


def triple_condition(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    variant: Union[TripleVariant, str] = TripleVariant.STAR,
    tolerance: Optional[float] = None,
) -> TripleResult:
    """Exhaustive check of a triple-product identity over all ordered triples."""
    require_same_labels(L, M)
    variant = TripleVariant(variant)
    tol = config.get_tolerance(tolerance)
    n = L.n
    scale = max(L.scale, M.scale)
    power = 3 if variant is TripleVariant.NV else 4

    if variant is TripleVariant.NV:
        for name, matrix in (("L", L), ("M", M)):
            if not is_symmetric(matrix, tol):
                raise util.NotSymmetricError(f"{name} must be symmetric for nv")
            if not is_non_degenerate(matrix, tol):
                raise util.DegenerateMatrixError(f"{name} must be non-degenerate for nv")
        for x in range(n):
            ratio = M[x, x] / L[x, x]
            if not scalar.is_positive_real(ratio, tol, scalar.magnitude(ratio)):
                return TripleResult(False, (x, x, x))

    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs, rhs = _triple_sides(L, M, variant, x, y, z)
                if not scalar.close(lhs, rhs, tol, scale**power):
                    logging.debug(f"Triple condition {variant.value} fails at {(x, y, z)}")
                    return TripleResult(False, (x, y, z))
    return TripleResult(True)


def _unify(values: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    if all(scalar.is_exact(v) for v in values):
        return tuple(values)
    return tuple(complex(v) for v in values)


def _residual(
    L: LabeledBiFunction, M: LabeledBiFunction, f: Sequence[Scalar], g: Sequence[Scalar]
) -> Tuple[Union[Fraction, float], Optional[Tuple[int, int]]]:
    """Max relative deviation of M - f (x) g . L and where it occurs."""
    worst, where = 0.0, None
    all_exact = True
    for x in range(L.n):
        for y in range(L.n):
            deviation = M[x, y] - f[x] * g[y] * L[x, y]
            if scalar.is_exact(deviation):
                if deviation.is_zero():
                    continue
            else:
                all_exact = False
            size = scalar.magnitude(deviation) / M.scale
            if where is None or size > worst:
                worst, where = size, (x, y)
    if all_exact and where is None:
        return Fraction(0), None
    return worst, where


def _certificate(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    kind: RescalingKind,
    f: Sequence[Scalar],
    g: Sequence[Scalar],
    anchors: Sequence[Tuple[int, int]],
    tolerance: float,
    group_tag: Optional[GroupTag] = None,
) -> Decision:
    f, g = _unify(f), _unify(g)
    residual, where = _residual(L, M, f, g)
    if where is not None and residual > tolerance:
        # Only reachable through entries that are zero within tolerance.
        return ZeroPatternMismatch(*where)
    logging.info(f"Accepted {kind.value} rescaling with residual {residual}")
    return RescalingCertificate(kind, f, g, residual, tuple(anchors), group_tag)


def _closed_walk(parent: Dict, depth: Dict, x, y) -> List:
    """Tree path from the common ancestor down to x, then from y back up."""
    down, up = [x], [y]
    a, b = x, y
    while depth[a] > depth[b]:
        a = parent[a]
        down.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        up.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        down.append(a)
        up.append(b)
    down.reverse()
    return down + up[:-1]


def _partner(kind: RescalingKind, value: Scalar) -> Scalar:
    """g(x) from f(x), and f(x) from g(x): each map is an involution."""
    if kind is RescalingKind.HERMITEAN:
        return value.conjugate()
    if kind is RescalingKind.RECIPROCAL:
        return 1 / value
    return value


def _edge_ratio(L, M, kind, a, b, tolerance) -> Scalar:
    """Multiplicative constraint carried by the step a -> b."""
    if not L.is_zero_at(a, b, tolerance):
        return M[a, b] / L[a, b]
    reverse = M[b, a] / L[b, a]
    return 1 / reverse if kind is RescalingKind.RECIPROCAL else reverse


def cycle_ratio(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    vertices: Sequence[int],
    kind: Union[RescalingKind, str],
    tolerance: Optional[float] = None,
) -> Scalar:
    """
    Product of edge ratios around a closed walk.

    General walks alternate rows and columns starting with a row: a row to
    column step multiplies by r(row, col), a column to row step divides by it.
    Reciprocal and pm1 walks multiply the ratio of each step.
    """
    kind = RescalingKind(kind)
    tol = config.get_tolerance(tolerance)
    if kind in (RescalingKind.SYMMETRIC, RescalingKind.HERMITEAN):
        raise util.ParameterError(f"Cycle products are not defined for {kind.value}")

    product = scalar.ONE
    count = len(vertices)
    for i in range(count):
        a, b = vertices[i], vertices[(i + 1) % count]
        if kind is RescalingKind.GENERAL:
            if i % 2 == 0:
                product = product * (M[a, b] / L[a, b])
            else:
                product = product / (M[b, a] / L[b, a])
        else:
            product = product * _edge_ratio(L, M, kind, a, b, tol)
    return product


def bipartite_components(
    L: LabeledBiFunction, tolerance: Optional[float] = None
) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """(rows, columns) of each component of the row/column incidence graph."""
    tol = config.get_tolerance(tolerance)
    return tuple(
        (tuple(sorted(v for v in nodes if v < L.n)), tuple(sorted(v - L.n for v in nodes if v >= L.n)))
        for nodes in _bipartite_node_components(L, tol)
    )


def _bipartite_neighbors(L: LabeledBiFunction, node: int, tolerance: float) -> List[int]:
    n = L.n
    if node < n:
        return [n + y for y in range(n) if not L.is_zero_at(node, y, tolerance)]
    col = node - n
    return [x for x in range(n) if not L.is_zero_at(x, col, tolerance)]


def _bipartite_node_components(L: LabeledBiFunction, tolerance: float) -> List[List[int]]:
    seen = set()
    components = []
    for start in range(2 * L.n):
        if start in seen:
            continue
        seen.add(start)
        queue, members = deque([start]), [start]
        while queue:
            node = queue.popleft()
            for other in _bipartite_neighbors(L, node, tolerance):
                if other not in seen:
                    seen.add(other)
                    members.append(other)
                    queue.append(other)
        components.append(members)
    return components


def _decide_general(
    L: LabeledBiFunction, M: LabeledBiFunction, tolerance: float
) -> Decision:
    n = L.n
    one = scalar.ONE if (L.exact and M.exact) else 1 + 0j
    value: Dict[int, Scalar] = {}
    parent: Dict[int, Optional[int]] = {}
    depth: Dict[int, int] = {}
    anchors = []

    for index, nodes in enumerate(_bipartite_node_components(L, tolerance)):
        rows = sorted(v for v in nodes if v < n)
        if not rows:
            value[nodes[0]] = one
            parent[nodes[0]], depth[nodes[0]] = None, 0
            continue

        diagonal = [x for x in rows if not L.is_zero_at(x, x, tolerance)]
        anchor = diagonal[0] if diagonal else rows[0]
        anchors.append((index, anchor))
        value[anchor], parent[anchor], depth[anchor] = one, None, 0

        queue = deque([anchor])
        while queue:
            node = queue.popleft()
            for other in _bipartite_neighbors(L, node, tolerance):
                if other in depth:
                    continue
                if node < n:
                    value[other] = (M[node, other - n] / L[node, other - n]) / value[node]
                else:
                    value[other] = (M[other, node - n] / L[other, node - n]) / value[node]
                parent[other], depth[other] = node, depth[node] + 1
                queue.append(other)

    f = [value[x] for x in range(n)]
    g = [value[n + y] for y in range(n)]

    for x in range(n):
        for y in range(n):
            if L.is_zero_at(x, y, tolerance):
                continue
            deviation = M[x, y] - f[x] * g[y] * L[x, y]
            if scalar.is_zero(deviation, tolerance, M.scale):
                continue
            walk = _closed_walk(parent, depth, x, n + y)
            first_row = next(i for i, v in enumerate(walk) if v < n)
            walk = walk[first_row:] + walk[:first_row]
            ratio = M[x, y] / (f[x] * g[y] * L[x, y])
            logging.info(f"General rescaling fails on a cycle through ({x}, {y})")
            return InconsistentCycle(tuple(v % n for v in walk), ratio, bipartite=True)

    return _certificate(L, M, RescalingKind.GENERAL, f, g, anchors, tolerance)


def _anchor_value(L, M, kind, z, one) -> Scalar:
    if kind in (RescalingKind.SYMMETRIC, RescalingKind.HERMITEAN):
        return scalar.sqrt(M[z, z] / L[z, z])
    return one


def _pm1_precheck(L, M, tolerance) -> Optional[Counterexample]:
    n = L.n
    scale = max(L.scale, M.scale)
    for x in range(n):
        if not scalar.close(M[x, x], L[x, x], tolerance, scale):
            return InconsistentCycle((x,), M[x, x] / L[x, x])
    for x in range(n):
        for y in range(n):
            if x == y or L.is_zero_at(x, y, tolerance):
                continue
            if not scalar.close(M[x, y] ** 2, L[x, y] ** 2, tolerance, scale**2):
                ratio = (M[x, y] / L[x, y]) * _edge_ratio(
                    L, M, RescalingKind.PM1, y, x, tolerance
                )
                return InconsistentCycle((x, y), ratio)
    return None


def _decide_on_graph(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    kind: RescalingKind,
    tolerance: float,
) -> Decision:
    """Reciprocal, symmetric, Hermitean and pm1 kinds: potentials on X_L."""
    n = L.n
    one = scalar.ONE if (L.exact and M.exact) else 1 + 0j

    if kind is RescalingKind.HERMITEAN:
        for x in range(n):
            ratio = M[x, x] / L[x, x]
            if not scalar.is_positive_real(ratio, tolerance, scalar.magnitude(ratio)):
                return DiagonalObstruction(x)
    if kind is RescalingKind.PM1:
        failure = _pm1_precheck(L, M, tolerance)
        if failure is not None:
            return failure

    view = graph_view(L, tolerance)
    f: List[Optional[Scalar]] = [None] * n
    parent: Dict[int, Optional[int]] = {}
    depth: Dict[int, int] = {}
    order: List[int] = []
    anchors = []

    for index, component in enumerate(view.components):
        anchor = component[0]
        anchors.append((index, anchor))
        f[anchor] = _anchor_value(L, M, kind, anchor, one)
        parent[anchor], depth[anchor] = None, 0

        queue = deque([anchor])
        while queue:
            p = queue.popleft()
            for c in sorted(view.adjacency[p]):
                if c in depth:
                    continue
                if not L.is_zero_at(p, c, tolerance):
                    value = _partner(kind, (M[p, c] / L[p, c]) / f[p])
                else:
                    value = (M[c, p] / L[c, p]) / _partner(kind, f[p])
                if kind is RescalingKind.PM1:
                    value = one if complex(value).real > 0 else -one
                f[c] = value
                parent[c], depth[c] = p, depth[p] + 1
                order.append(c)
                queue.append(c)

    g = [_partner(kind, v) for v in f]

    def consistent(x, y):
        deviation = M[x, y] - f[x] * g[y] * L[x, y]
        return scalar.is_zero(deviation, tolerance, M.scale)

    def discrepancy(x, y):
        return M[x, y] / (f[x] * g[y] * L[x, y])

    # Reverse tree entries first, so every tree step of a longer walk is sound.
    for c in order:
        p = parent[c]
        if not L.is_zero_at(c, p, tolerance) and not consistent(c, p):
            logging.info(f"{kind.value} rescaling fails on the edge ({p}, {c})")
            return InconsistentCycle((p, c), discrepancy(c, p))

    for x in range(n):
        for y in range(n):
            if L.is_zero_at(x, y, tolerance) or consistent(x, y):
                continue
            logging.info(f"{kind.value} rescaling fails on a cycle through ({x}, {y})")
            walk = _closed_walk(parent, depth, x, y)
            return InconsistentCycle(tuple(walk), discrepancy(x, y))

    return _certificate(L, M, kind, f, g, anchors, tolerance)


def _precheck(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    need_diagonal: bool,
    tolerance: float,
) -> Optional[Counterexample]:
    require_same_labels(L, M)
    mismatch = zero_pattern_mismatch(L, M, tolerance)
    if mismatch is not None:
        logging.info(f"Zero patterns differ at {mismatch}")
        return ZeroPatternMismatch(*mismatch)
    if need_diagonal:
        for x in range(L.n):
            if L.is_zero_at(x, x, tolerance):
                logging.info(f"Diagonal vanishes at {x}")
                return DiagonalObstruction(x)
    return None


def decide_rescaling(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    kind: Union[RescalingKind, str] = RescalingKind.GENERAL,
    tolerance: Optional[float] = None,
) -> Decision:
    """Certificate that M = f (x) g . L for the given kind, or a counterexample."""
    kind = RescalingKind(kind)
    tol = config.get_tolerance(tolerance)

    failure = _precheck(L, M, kind is not RescalingKind.GENERAL, tol)
    if failure is not None:
        return failure

    if kind is RescalingKind.GENERAL:
        return _decide_general(L, M, tol)
    return _decide_on_graph(L, M, kind, tol)


def minor_cardinality_bound(L: LabeledBiFunction, tolerance: Optional[float] = None) -> int:
    """min(n, 2l + 1) with l the largest component radius of X_L."""
    return min(L.n, 2 * graph_view(L, tolerance).max_radius + 1)


def decide_pm1_via_minors(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    use_radius_bound: bool = True,
    tolerance: Optional[float] = None,
    workers: Optional[int] = None,
) -> Decision:
    """Decide the pm1 kind from principal minors, then build the certificate."""
    require_same_labels(L, M)
    tol = config.get_tolerance(tolerance)
    for name, matrix in (("L", L), ("M", M)):
        if not is_symmetric(matrix, tol):
            raise util.NotSymmetricError(f"{name} must be symmetric")

    max_card = minor_cardinality_bound(L, tol) if use_radius_bound else L.n
    comparison = minors.compare_minors(L, M, max_card, tol, workers=workers)
    if not comparison.equal:
        diff = comparison.first_diff
        logging.info(f"Minors differ on {diff.subset}")
        return DifferingMinor(diff.subset, diff.value_l, diff.value_m)

    return decide_rescaling(L, M, RescalingKind.PM1, tol)


def _in_group(ratio: Scalar, group: GroupTag, tolerance: float) -> bool:
    size = scalar.magnitude(ratio)
    if group is GroupTag.UNIT_CIRCLE:
        if scalar.is_exact(ratio):
            return ratio.abs2() == 1
        return abs(size - 1) <= tolerance
    if group is GroupTag.REAL_NONZERO:
        if scalar.is_exact(ratio):
            return ratio.is_real()
        return abs(ratio.imag) <= tolerance * size
    if group is GroupTag.POSITIVE_REAL:
        return scalar.is_positive_real(ratio, tolerance, size)
    return scalar.close(ratio, 1, tolerance) or scalar.close(ratio, -1, tolerance)


def decide_gamma_rescaling(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    group: Union[GroupTag, str],
    tolerance: Optional[float] = None,
) -> Decision:
    """
    Rescaling with f and g valued in a group.

    For non-degenerate inputs this holds iff the pair are rescalings and every
    ratio M(x, y) / L(x, y) lies in the group; the anchor-normalized general
    certificate is then group-valued.
    """
    group = GroupTag(group)
    tol = config.get_tolerance(tolerance)

    failure = _precheck(L, M, True, tol)
    if failure is not None:
        return failure

    decision = _decide_general(L, M, tol)
    if isinstance(decision, Counterexample):
        return decision

    for x in range(L.n):
        for y in range(L.n):
            if L.is_zero_at(x, y, tol):
                continue
            ratio = M[x, y] / L[x, y]
            if not _in_group(ratio, group, tol):
                logging.info(f"Ratio at ({x}, {y}) is outside {group.value}")
                return GroupMismatch(x, y, ratio)

    return RescalingCertificate(
        decision.kind,
        decision.f,
        decision.g,
        decision.residual,
        decision.anchors,
        group,
    )


def decide_symmetric_via_minors(
    L: LabeledBiFunction,
    M: LabeledBiFunction,
    tolerance: Optional[float] = None,
) -> Decision:
    """
    Symmetric rescaling from the multiplicativity of det_M / det_L.

    With weights w, the matrix sqrt(w) (x) sqrt(w) . L has the minors of M,
    so it is a pm1 rescaling h of M and f = sqrt(w) h.
    """
    require_same_labels(L, M)
    tol = config.get_tolerance(tolerance)
    for name, matrix in (("L", L), ("M", M)):
        if not is_symmetric(matrix, tol):
            raise util.NotSymmetricError(f"{name} must be symmetric")

    result = minors.multiplicativity_test(L, M, tol)
    if not result.multiplicative:
        subset = result.violating_subset
        expected = minors.principal_minor(L, subset)
        for x in subset:
            expected = expected * result.weights[x]
        return DifferingMinor(subset, expected, minors.principal_minor(M, subset))

    roots = [scalar.sqrt(w) for w in result.weights]
    rescaled = apply_rescaling(L, roots, roots, tol)
    decision = decide_rescaling(rescaled, M, RescalingKind.PM1, tol)
    if isinstance(decision, Counterexample):
        return decision

    f = [root * sign for root, sign in zip(roots, decision.f)]
    return _certificate(L, M, RescalingKind.SYMMETRIC, f, f, decision.anchors, tol)

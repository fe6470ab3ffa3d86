"""
Labeled matrices as finite bi-functions.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from . import config, scalar, util
from .scalar import Scalar


@dataclass(frozen=True)
class LabeledBiFunction:
    """Square matrix of Scalars over an ordered set of unique labels."""

    labels: Tuple[str, ...]
    entries: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        rows = tuple(tuple(scalar.coerce(v) for v in row) for row in self.entries)

        if len(set(labels)) != len(labels):
            raise util.DimensionMismatchError("Labels must be unique")
        if len(rows) != len(labels) or any(len(row) != len(labels) for row in rows):
            raise util.DimensionMismatchError(
                f"Entries must form a {len(labels)}x{len(labels)} grid"
            )

        # One mode per matrix.
        if any(not scalar.is_exact(v) for row in rows for v in row):
            rows = tuple(tuple(complex(v) for v in row) for row in rows)

        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Any]], labels: Optional[Sequence[Any]] = None
    ) -> "LabeledBiFunction":
        """Build from nested rows; labels default to "1".."n"."""
        if labels is None:
            labels = [str(i + 1) for i in range(len(rows))]
        return cls(tuple(labels), tuple(tuple(row) for row in rows))

    @classmethod
    def from_array(
        cls, array: np.ndarray, labels: Optional[Sequence[Any]] = None
    ) -> "LabeledBiFunction":
        """Build a float-mode matrix from a numpy array."""
        rows = [[complex(v) for v in row] for row in np.asarray(array)]
        return cls.from_rows(rows, labels)

    @classmethod
    def from_document(cls, data: Dict[str, Any]) -> "LabeledBiFunction":
        """Parse a validated matrix document; "mode": "float" forces float mode."""
        rows = [[scalar.parse_scalar(v) for v in row] for row in data["entries"]]
        if data.get("mode") == "float":
            rows = [[complex(v) for v in row] for row in rows]
        return cls.from_rows(rows, data["labels"])

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def exact(self) -> bool:
        return all(scalar.is_exact(v) for row in self.entries for v in row)

    @cached_property
    def scale(self) -> float:
        """Max absolute entry, 1.0 for an all-zero matrix."""
        return scalar.max_magnitude(v for row in self.entries for v in row) or 1.0

    @property
    def diagonal(self) -> Tuple[Scalar, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    @cached_property
    def symmetric(self) -> bool:
        return _is_symmetric(self, config.get_tolerance())

    @cached_property
    def hermitean(self) -> bool:
        return _is_hermitean(self, config.get_tolerance())

    @cached_property
    def non_degenerate(self) -> bool:
        return _is_non_degenerate(self, config.get_tolerance())

    def __getitem__(self, index: Tuple[int, int]) -> Scalar:
        i, j = index
        return self.entries[i][j]

    def index_of(self, label: str) -> int:
        return self.labels.index(str(label))

    def is_zero_at(self, i: int, j: int, tolerance: float) -> bool:
        return scalar.is_zero(self.entries[i][j], tolerance, self.scale)

    def transpose(self) -> "LabeledBiFunction":
        n = self.n
        rows = [[self.entries[j][i] for j in range(n)] for i in range(n)]
        return LabeledBiFunction.from_rows(rows, self.labels)

    def conjugate(self) -> "LabeledBiFunction":
        rows = [[v.conjugate() for v in row] for row in self.entries]
        return LabeledBiFunction.from_rows(rows, self.labels)

    def adjoint(self) -> "LabeledBiFunction":
        return self.transpose().conjugate()

    def add_diagonal(self, h: Sequence[Any]) -> "LabeledBiFunction":
        """L + diag h."""
        if len(h) != self.n:
            raise util.DimensionMismatchError(
                f"Diagonal shift has length {len(h)}, expected {self.n}"
            )
        shift = [scalar.coerce(v) for v in h]
        rows = [
            [v + shift[i] if i == j else v for j, v in enumerate(row)]
            for i, row in enumerate(self.entries)
        ]
        return LabeledBiFunction.from_rows(rows, self.labels)

    def submatrix(self, indices: Sequence[int]) -> "LabeledBiFunction":
        rows = [[self.entries[i][j] for j in indices] for i in indices]
        return LabeledBiFunction.from_rows(rows, [self.labels[i] for i in indices])

    def to_array(self) -> np.ndarray:
        array = np.zeros((self.n, self.n), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = complex(value)
        return array


@dataclass(frozen=True)
class Diagnosis:
    """Diagonal function and structural flags of a matrix."""

    diagonal: Tuple[Scalar, ...]
    symmetric: bool
    hermitean: bool
    non_degenerate: bool


@dataclass(frozen=True)
class GraphView:
    """Symmetrized nonzero-pattern graph with components and radii."""

    vertex_count: int
    adjacency: Tuple[FrozenSet[int], ...]
    self_loops: Tuple[bool, ...]
    components: Tuple[Tuple[int, ...], ...]
    radius_per_component: Tuple[int, ...]
    distances: Any = field(default=None, compare=False, repr=False)

    def has_edge(self, x: int, y: int) -> bool:
        if x == y:
            return self.self_loops[x]
        return y in self.adjacency[x]

    def component_of(self, vertex: int) -> int:
        for index, component in enumerate(self.components):
            if vertex in component:
                return index
        raise util.IndexRangeError(f"Vertex {vertex} out of range")

    @property
    def max_radius(self) -> int:
        return max(self.radius_per_component, default=0)


def _is_symmetric(L: LabeledBiFunction, tolerance: float) -> bool:
    n = L.n
    return all(
        scalar.close(L[i, j], L[j, i], tolerance, L.scale)
        for i in range(n)
        for j in range(i + 1, n)
    )


def _is_hermitean(L: LabeledBiFunction, tolerance: float) -> bool:
    n = L.n
    return all(
        scalar.close(L[i, j], L[j, i].conjugate(), tolerance, L.scale)
        for i in range(n)
        for j in range(i, n)
    )


def _is_non_degenerate(L: LabeledBiFunction, tolerance: float) -> bool:
    return not any(L.is_zero_at(i, i, tolerance) for i in range(L.n))


def is_symmetric(L: LabeledBiFunction, tolerance: Optional[float] = None) -> bool:
    return _is_symmetric(L, config.get_tolerance(tolerance))


def is_hermitean(L: LabeledBiFunction, tolerance: Optional[float] = None) -> bool:
    return _is_hermitean(L, config.get_tolerance(tolerance))


def is_non_degenerate(
    L: LabeledBiFunction, tolerance: Optional[float] = None
) -> bool:
    return _is_non_degenerate(L, config.get_tolerance(tolerance))


def diagnose(L: LabeledBiFunction, tolerance: Optional[float] = None) -> Diagnosis:
    """Diagonal function and flags, recomputed rather than read from cache."""
    tol = config.get_tolerance(tolerance)
    return Diagnosis(
        diagonal=L.diagonal,
        symmetric=_is_symmetric(L, tol),
        hermitean=_is_hermitean(L, tol),
        non_degenerate=_is_non_degenerate(L, tol),
    )


def graph_view(L: LabeledBiFunction, tolerance: Optional[float] = None) -> GraphView:
    """Edge (x, y) iff L(x, y) or L(y, x) is nonzero."""
    tol = config.get_tolerance(tolerance)
    n = L.n
    if n == 0:
        return GraphView(0, (), (), (), (), np.zeros((0, 0)))

    nonzero = np.array(
        [[not L.is_zero_at(i, j, tol) for j in range(n)] for i in range(n)]
    )
    edges = (nonzero | nonzero.T) & ~np.eye(n, dtype=bool)
    graph = csr_matrix(edges.astype(np.int8))

    _, membership = connected_components(graph, directed=False)
    distances = shortest_path(graph, directed=False, unweighted=True)

    grouped: Dict[int, List[int]] = defaultdict(list)
    for vertex in range(n):
        grouped[int(membership[vertex])].append(vertex)
    # First-appearance order sorts components by their smallest vertex.
    components = tuple(tuple(members) for members in grouped.values())

    radii = tuple(
        int(min(max(distances[z, x] for x in comp) for z in comp))
        for comp in components
    )
    adjacency = tuple(frozenset(np.flatnonzero(edges[i]).tolist()) for i in range(n))
    self_loops = tuple(bool(nonzero[i, i]) for i in range(n))

    logging.debug(
        "Graph with %d vertices, %d components, radii %s", n, len(components), radii
    )
    return GraphView(n, adjacency, self_loops, components, radii, distances)


def require_same_labels(L: LabeledBiFunction, M: LabeledBiFunction) -> None:
    if L.labels != M.labels:
        raise util.DimensionMismatchError(
            f"Label sets differ: {list(L.labels)} vs {list(M.labels)}"
        )


def zero_pattern_mismatch(
    L: LabeledBiFunction, M: LabeledBiFunction, tolerance: float
) -> Optional[Tuple[int, int]]:
    """First entry, in row-major order, that vanishes in exactly one matrix."""
    for i in range(L.n):
        for j in range(L.n):
            if L.is_zero_at(i, j, tolerance) != M.is_zero_at(i, j, tolerance):
                return (i, j)
    return None


def apply_rescaling(
    L: LabeledBiFunction,
    f: Sequence[Any],
    g: Sequence[Any],
    tolerance: Optional[float] = None,
) -> LabeledBiFunction:
    """M(x, y) = f(x) g(y) L(x, y)."""
    tol = config.get_tolerance(tolerance)
    if len(f) != L.n or len(g) != L.n:
        raise util.DimensionMismatchError(
            f"Scaling functions must have length {L.n}, got {len(f)} and {len(g)}"
        )

    f = [scalar.coerce(v) for v in f]
    g = [scalar.coerce(v) for v in g]
    for name, values in (("f", f), ("g", g)):
        vector_scale = scalar.max_magnitude(values) or 1.0
        for index, value in enumerate(values):
            if scalar.is_zero(value, tol, vector_scale):
                raise util.VanishingEntryError(f"{name} vanishes at index {index}")

    rows = [
        [f[i] * g[j] * L[i, j] for j in range(L.n)] for i in range(L.n)
    ]
    return LabeledBiFunction.from_rows(rows, L.labels)

"""
Vector sets, Gram matrices and parallelepiped face volumes.

Equal face volumes of all dimensions make two vector sets isometric up to
signs; recover_isometry() finds the orthogonal map and the signs.
"""

import logging
from dataclasses import dataclass, replace
from typing import Any, ClassVar, Dict, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import linalg

from . import config, minors, rescaling, scalar, util
from .bifunction import LabeledBiFunction, is_symmetric
from .settings import ORTHO_TOLERANCE, PSD_TOLERANCE, RESIDUAL_TOLERANCE


@dataclass(frozen=True, eq=False)
class VectorSet:
    """k labeled column vectors in R^d, stored as a d x k array."""

    dimension: int
    columns: np.ndarray
    labels: Tuple[str, ...]

    def __post_init__(self):
        columns = np.asarray(self.columns, dtype=float)
        labels = tuple(str(label) for label in self.labels)
        if columns.size == 0:
            columns = columns.reshape(self.dimension, len(labels))
        if columns.ndim != 2 or columns.shape != (self.dimension, len(labels)):
            raise util.DimensionMismatchError(
                f"Expected a {self.dimension}x{len(labels)} column array, "
                f"got shape {columns.shape}"
            )
        if len(set(labels)) != len(labels):
            raise util.DimensionMismatchError("Labels must be unique")
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_vectors(
        cls, vectors: Sequence[Sequence[float]], labels: Optional[Sequence[Any]] = None
    ) -> "VectorSet":
        """Build from a list of column vectors."""
        if labels is None:
            labels = [str(i + 1) for i in range(len(vectors))]
        if not vectors:
            return cls(0, np.zeros((0, 0)), tuple(labels))
        array = np.array(vectors, dtype=float).T
        return cls(array.shape[0], array, tuple(labels))

    @classmethod
    def from_document(cls, data: Dict[str, Any]) -> "VectorSet":
        columns = [
            [float(scalar.parse_component(v)) for v in column]
            for column in data["columns"]
        ]
        array = np.array(columns, dtype=float).T if columns else np.zeros((data["dimension"], 0))
        return cls(data["dimension"], array, tuple(data["labels"]))

    @property
    def k(self) -> int:
        return len(self.labels)

    def column(self, index: int) -> np.ndarray:
        return self.columns[:, index]

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.columns, axis=0)

    def with_columns(self, columns: np.ndarray) -> "VectorSet":
        return VectorSet(columns.shape[0], columns, self.labels)


@dataclass(frozen=True, eq=False)
class IsometryWitness:
    """T w_i = s_i v_i for every column, with T orthogonal."""

    T: np.ndarray
    signs: Tuple[int, ...]
    residual: float


@dataclass(frozen=True)
class FaceVolumeMismatch(rescaling.Counterexample):
    """
    A face whose volumes differ.

    For scaled_isometry_test the volumes are those of the normalized columns.
    """

    variant: ClassVar[str] = "faceVolumeMismatch"
    subset: Tuple[int, ...]
    volume_v: float
    volume_w: float


@dataclass(frozen=True, eq=False)
class ScaledIsometry:
    g: Tuple[float, ...]
    witness: IsometryWitness


def _gram(columns: np.ndarray, labels: Sequence[str]) -> LabeledBiFunction:
    return LabeledBiFunction.from_array(columns.T @ columns, labels)


def gram(V: VectorSet) -> LabeledBiFunction:
    """Matrix of pairwise inner products."""
    return _gram(V.columns, V.labels)


def factor_psd(K: LabeledBiFunction, tolerance: Optional[float] = None) -> VectorSet:
    """Columns kappa(x) with <kappa(x), kappa(y)> = K(x, y)."""
    tol = config.get_tolerance(tolerance)
    array = K.to_array()
    if np.any(np.abs(array.imag) > tol * K.scale) or not is_symmetric(K, tol):
        raise util.NotSymmetricError("factor_psd needs a real symmetric matrix")

    if K.n == 0:
        return VectorSet(0, np.zeros((0, 0)), K.labels)

    real = array.real
    threshold = PSD_TOLERANCE * float(np.max(np.abs(real)))
    eigenvalues, eigenvectors = linalg.eigh(real)
    if eigenvalues[0] < -threshold:
        raise util.NotPositiveSemidefiniteError(
            f"Eigenvalue {eigenvalues[0]:.3e} is below -{threshold:.3e}"
        )

    keep = eigenvalues > threshold
    columns = (eigenvectors[:, keep] * np.sqrt(eigenvalues[keep])).T
    logging.debug(f"Factored a {K.n}x{K.n} matrix with numerical rank {int(keep.sum())}")
    return VectorSet(columns.shape[0], columns, K.labels)


def _check_indices(V: VectorSet, subset: Sequence[int]) -> None:
    for index in subset:
        if not isinstance(index, (int, np.integer)) or not 0 <= index < V.k:
            raise util.IndexRangeError(f"Index {index} out of range for k={V.k}")


def volume(V: VectorSet, subset: Sequence[int]) -> float:
    """
    V(B) = sqrt(det Gram(B)), read off the R factor of a pivoted QR of B.

    0 for the empty face, repeated indices, more vectors than dimensions
    and numerically dependent faces.
    """
    _check_indices(V, subset)
    if not subset or len(set(subset)) != len(subset) or len(subset) > V.dimension:
        return 0.0
    block = V.columns[:, list(subset)]
    R, _ = linalg.qr(block, mode="r", pivoting=True)
    diagonal = np.abs(np.diag(R))
    if diagonal[0] == 0 or diagonal[-1] <= PSD_TOLERANCE * diagonal[0]:
        return 0.0
    return float(np.prod(diagonal))


def distance_to_span(V: VectorSet, vector: Sequence[float], subset: Sequence[int]) -> float:
    """||v - v_B|| by least squares."""
    _check_indices(V, subset)
    vector = np.asarray(vector, dtype=float)
    if vector.shape != (V.dimension,):
        raise util.DimensionMismatchError(
            f"Vector has shape {vector.shape}, expected ({V.dimension},)"
        )
    if not subset:
        return float(np.linalg.norm(vector))
    block = V.columns[:, list(subset)]
    coefficients = linalg.lstsq(block, vector)[0]
    return float(np.linalg.norm(vector - block @ coefficients))


def pad_dimension(V: VectorSet, dimension: int) -> VectorSet:
    """Embed V in R^dimension by appending zero coordinates."""
    if dimension < V.dimension:
        raise util.ParameterError(
            f"Cannot pad dimension {V.dimension} down to {dimension}"
        )
    padding = np.zeros((dimension - V.dimension, V.k))
    return VectorSet(dimension, np.vstack([V.columns, padding]), V.labels)


def _common_dimension(V: VectorSet, W: VectorSet) -> Tuple[VectorSet, VectorSet]:
    if V.k != W.k:
        raise util.DimensionMismatchError(
            f"Vector sets have {V.k} and {W.k} columns"
        )
    dimension = max(V.dimension, W.dimension)
    return pad_dimension(V, dimension), pad_dimension(W, dimension)


def _rank(columns: np.ndarray) -> Tuple[int, np.ndarray]:
    """Numerical rank and pivot order from a column-pivoted QR."""
    if columns.size == 0:
        return 0, np.arange(columns.shape[1])
    _, R, pivots = linalg.qr(columns, mode="economic", pivoting=True)
    diagonal = np.abs(np.diag(R))
    if diagonal.size == 0 or diagonal[0] == 0:
        return 0, pivots
    cutoff = np.sqrt(PSD_TOLERANCE) * diagonal[0]
    return int(np.sum(diagonal > cutoff)), pivots


def _oriented_basis(columns: np.ndarray) -> np.ndarray:
    """Full orthogonal Q of a QR with a nonnegative R diagonal."""
    Q, R = linalg.qr(columns)
    signs = np.sign(np.diag(R))
    signs[signs == 0] = 1.0
    Q = Q.copy()
    Q[:, : signs.size] *= signs
    return Q


def _face_volume(value: scalar.Scalar) -> float:
    return float(np.sqrt(max(complex(value).real, 0.0)))


def _witness(V: VectorSet, W: VectorSet, signs: Sequence[int], support: Sequence[int]) -> IsometryWitness:
    d = V.dimension
    flipped = W.columns * np.asarray(signs, dtype=float)

    rank_v, pivots = _rank(V.columns[:, support])
    rank_w, _ = _rank(flipped[:, support])
    if rank_v != rank_w:
        raise util.IsometryError(f"Rank mismatch: {rank_v} vs {rank_w}")

    if rank_v == 0:
        T = np.eye(d)
    else:
        basis = [support[i] for i in pivots[:rank_v]]
        T = _oriented_basis(V.columns[:, basis]) @ _oriented_basis(flipped[:, basis]).T

    errors = np.linalg.norm(T @ flipped - V.columns, axis=0)
    scale = np.maximum(V.norms(), 1.0)
    residual = float(np.max(errors / scale)) if V.k else 0.0
    orthogonality = float(np.max(np.abs(T.T @ T - np.eye(d)))) if d else 0.0

    if residual > RESIDUAL_TOLERANCE:
        raise util.IsometryError(f"Isometry residual {residual:.3e} is too large")
    if orthogonality > ORTHO_TOLERANCE:
        raise util.IsometryError(f"T is not orthogonal: {orthogonality:.3e}")

    logging.info(f"Recovered isometry of rank {rank_v} with residual {residual:.3e}")
    return IsometryWitness(T, tuple(int(s) for s in signs), residual)


def _on_columns(
    cex: rescaling.Counterexample, support: Sequence[int]
) -> rescaling.Counterexample:
    """Translate Gram indices of a counterexample back to column indices."""
    if isinstance(cex, rescaling.InconsistentCycle):
        return replace(cex, vertices=tuple(support[v] for v in cex.vertices))
    if isinstance(cex, rescaling.ZeroPatternMismatch):
        return replace(cex, x=support[cex.x], y=support[cex.y])
    if isinstance(cex, rescaling.DiagonalObstruction):
        return replace(cex, x=support[cex.x])
    return cex


def recover_isometry(
    V: VectorSet,
    W: VectorSet,
    max_card: Optional[int] = None,
    tolerance: Optional[float] = None,
    workers: Optional[int] = None,
) -> Union[IsometryWitness, rescaling.Counterexample]:
    """
    Orthogonal T and signs s with T w_i = s_i v_i, or the first face whose
    volumes differ.

    Without max_card the face scan stops at twice the largest radius of the
    Gram graph plus one, which is enough for sign recovery.
    """
    tol = config.get_tolerance(tolerance)
    V, W = _common_dimension(V, W)

    norms_v, norms_w = V.norms(), W.norms()
    scale = max(float(np.max(norms_v, initial=0.0)), float(np.max(norms_w, initial=0.0)), 1.0)
    zero_v = norms_v <= tol * scale
    zero_w = norms_w <= tol * scale
    for i in range(V.k):
        if zero_v[i] != zero_w[i]:
            logging.info(f"Column {i} vanishes in only one set")
            return FaceVolumeMismatch((i,), float(norms_v[i]), float(norms_w[i]))

    support = [i for i in range(V.k) if not zero_v[i]]
    labels = [V.labels[i] for i in support]
    gram_v = _gram(V.columns[:, support], labels)
    gram_w = _gram(W.columns[:, support], labels)

    if max_card is None:
        decision = rescaling.decide_pm1_via_minors(
            gram_v, gram_w, tolerance=tol, workers=workers
        )
    else:
        comparison = minors.compare_minors(gram_v, gram_w, max_card, tol, workers=workers)
        if comparison.equal:
            decision = rescaling.decide_rescaling(gram_v, gram_w, "pm1", tol)
        else:
            diff = comparison.first_diff
            decision = rescaling.DifferingMinor(diff.subset, diff.value_l, diff.value_m)

    if isinstance(decision, rescaling.DifferingMinor):
        face = tuple(support[i] for i in decision.subset)
        logging.info(f"Face {face} has different volumes")
        return FaceVolumeMismatch(
            face, _face_volume(decision.value_l), _face_volume(decision.value_m)
        )
    if isinstance(decision, rescaling.Counterexample):
        logging.info(f"Gram matrices are not sign rescalings: {decision.variant}")
        return _on_columns(decision, support)

    signs = [1] * V.k
    for i, value in zip(support, decision.f):
        signs[i] = 1 if complex(value).real > 0 else -1

    return _witness(V, W, signs, support)


def scaled_isometry_test(
    V: VectorSet,
    W: VectorSet,
    tolerance: Optional[float] = None,
    workers: Optional[int] = None,
) -> Union[ScaledIsometry, rescaling.Counterexample]:
    """
    Positive-or-negative factors g and an isometry for W / g.

    Accepted iff the normalized columns have equal face volumes, i.e.
    prod ||v|| V(w) = prod ||w|| V(v) on every face.
    """
    tol = config.get_tolerance(tolerance)
    V, W = _common_dimension(V, W)

    norms_v, norms_w = V.norms(), W.norms()
    scale = max(float(np.max(norms_v, initial=0.0)), float(np.max(norms_w, initial=0.0)), 1.0)
    for name, norms in (("V", norms_v), ("W", norms_w)):
        for i, norm in enumerate(norms):
            if norm <= tol * scale:
                raise util.VanishingEntryError(f"Column {i} of {name} vanishes")

    unit_v = V.with_columns(V.columns / norms_v)
    unit_w = W.with_columns(W.columns / norms_w)

    comparison = minors.compare_minors(
        _gram(unit_v.columns, V.labels), _gram(unit_w.columns, V.labels),
        tolerance=tol, workers=workers,
    )
    if not comparison.equal:
        diff = comparison.first_diff
        logging.info(f"Normalized face {diff.subset} has different volumes")
        return FaceVolumeMismatch(
            diff.subset, _face_volume(diff.value_l), _face_volume(diff.value_m)
        )

    normalized = recover_isometry(unit_v, unit_w, V.k, tol, workers)
    if isinstance(normalized, rescaling.Counterexample):
        return normalized

    g = np.asarray(normalized.signs, dtype=float) * norms_w / norms_v
    witness = recover_isometry(V, W.with_columns(W.columns / g), V.k, tol, workers)
    if isinstance(witness, rescaling.Counterexample):
        return witness
    return ScaledIsometry(tuple(float(v) for v in g), witness)

"""
Convert results to JSON documents.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from . import scalar, util
from .bifunction import Diagnosis, LabeledBiFunction
from .geometry import (
    FaceVolumeMismatch,
    IsometryWitness,
    ScaledIsometry,
    VectorSet,
)
from .minors import MinorComparison, MultiplicativityResult, SubsetMinor
from .rescaling import (
    Counterexample,
    DiagonalObstruction,
    DifferingMinor,
    GroupMismatch,
    InconsistentCycle,
    RescalingCertificate,
    TripleResult,
    ZeroPatternMismatch,
)


def number(value: Any) -> str:
    """Real number as a decimal string."""
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return scalar.format_component(Fraction(value))
    return repr(float(value))


def pair(value: scalar.Scalar) -> List[str]:
    return scalar.to_pair(value)


def label_list(labels: Sequence[str], indices: Sequence[int]) -> List[str]:
    return [labels[i] for i in indices]


def matrix(L: LabeledBiFunction) -> Dict[str, Any]:
    """Matrix document; float-mode matrices are tagged so they stay float."""
    document: Dict[str, Any] = {
        "labels": list(L.labels),
        "entries": [[pair(v) for v in row] for row in L.entries],
    }
    if not L.exact:
        document["mode"] = "float"
    return document


def vectors(V: VectorSet) -> Dict[str, Any]:
    return {
        "dimension": V.dimension,
        "labels": list(V.labels),
        "columns": [[number(v) for v in V.columns[:, i]] for i in range(V.k)],
    }


def certificate(cert: RescalingCertificate, labels: Sequence[str]) -> Dict[str, Any]:
    return {
        "kind": cert.kind.value,
        "f": [pair(v) for v in cert.f],
        "g": [pair(v) for v in cert.g],
        "group": cert.group_tag.value if cert.group_tag else None,
        "residual": number(cert.residual),
        "anchors": [
            {"component": index, "anchor": labels[x]} for index, x in cert.anchors
        ],
    }


def counterexample(cex: Counterexample, labels: Sequence[str]) -> Dict[str, Any]:
    """Counterexample tagged by its variant, with indices shown as labels."""
    result: Dict[str, Any] = {"variant": cex.variant}

    if isinstance(cex, ZeroPatternMismatch):
        result.update(x=labels[cex.x], y=labels[cex.y])
    elif isinstance(cex, InconsistentCycle):
        result.update(
            vertices=label_list(labels, cex.vertices),
            ratio=pair(cex.ratio),
            bipartite=cex.bipartite,
        )
    elif isinstance(cex, DifferingMinor):
        result.update(
            subset=label_list(labels, cex.subset),
            L=pair(cex.value_l),
            M=pair(cex.value_m),
        )
    elif isinstance(cex, DiagonalObstruction):
        result.update(x=labels[cex.x])
    elif isinstance(cex, GroupMismatch):
        result.update(x=labels[cex.x], y=labels[cex.y], ratio=pair(cex.ratio))
    elif isinstance(cex, FaceVolumeMismatch):
        result.update(
            subset=label_list(labels, cex.subset),
            volume_v=number(cex.volume_v),
            volume_w=number(cex.volume_w),
        )
    else:
        raise util.ParameterError(f"Unknown counterexample {cex!r}")
    return result


def comparison(result: MinorComparison, labels: Sequence[str]) -> Dict[str, Any]:
    diff: Optional[Dict[str, Any]] = None
    if result.first_diff is not None:
        diff = {
            "subset": label_list(labels, result.first_diff.subset),
            "L": pair(result.first_diff.value_l),
            "M": pair(result.first_diff.value_m),
        }
    return {
        "equal": result.equal,
        "max_cardinality_checked": result.max_cardinality_checked,
        "first_diff": diff,
    }


def minor_line(minor: SubsetMinor, labels: Sequence[str]) -> Dict[str, Any]:
    return {
        "subset": label_list(labels, minor.subset),
        "value": scalar.format_scalar(minor.value),
    }


def witness(result: IsometryWitness) -> Dict[str, Any]:
    return {
        "T": [[number(v) for v in row] for row in np.asarray(result.T)],
        "signs": list(result.signs),
        "residual": number(result.residual),
    }


def scaled_isometry(result: ScaledIsometry) -> Dict[str, Any]:
    return {"g": [number(v) for v in result.g], "witness": witness(result.witness)}


def triple(result: TripleResult, labels: Sequence[str]) -> Dict[str, Any]:
    return {
        "holds": result.holds,
        "witness": label_list(labels, result.witness) if result.witness else None,
    }


def diagnosis(result: Diagnosis, labels: Sequence[str]) -> Dict[str, Any]:
    return {
        "labels": list(labels),
        "diagonal": [pair(v) for v in result.diagonal],
        "symmetric": result.symmetric,
        "hermitean": result.hermitean,
        "non_degenerate": result.non_degenerate,
    }


def multiplicativity(result: MultiplicativityResult, labels: Sequence[str]) -> Dict[str, Any]:
    subset = result.violating_subset
    return {
        "multiplicative": result.multiplicative,
        "weights": [pair(v) for v in result.weights],
        "violating_subset": label_list(labels, subset) if subset else None,
    }


def dumps(data: Any) -> str:
    return json.dumps(data, indent=4)


def dumps_line(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"))


def save(data: Any, export_file: str) -> None:
    """Write a JSON document."""
    util.save_file_json(data, export_file)

"""
Tolerance resolution and validation of the JSON documents read by rescalings.

This module checks matrix and vector-set documents against small schemas
before they are parsed, collecting every problem instead of stopping at the
first one.
"""

import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Set

from . import util
from .settings import DEFAULT_TOLERANCE, TOLERANCE_ENV


def get_tolerance(override: Optional[float] = None) -> float:
    """Resolve the zero-test tolerance: argument, then environment, then default."""
    if override is not None:
        value: Any = override
        source = "argument"
    else:
        value = os.getenv(TOLERANCE_ENV)
        source = TOLERANCE_ENV
        if value is None:
            return DEFAULT_TOLERANCE

    try:
        tolerance = float(value)
    except (TypeError, ValueError) as e:
        raise util.ToleranceError(f"Tolerance from {source} is not a number: {value!r}") from e

    if not math.isfinite(tolerance) or tolerance <= 0:
        raise util.ToleranceError(f"Tolerance from {source} must be positive: {value!r}")
    return tolerance


@dataclass
class DocumentSchema:
    """Schema definition for document validation."""

    required_fields: Set[str] = field(default_factory=set)
    optional_fields: Set[str] = field(default_factory=set)
    field_types: Dict[str, Any] = field(default_factory=dict)


class DocumentValidator:
    """Validates matrix and vector-set documents."""

    MATRIX_SCHEMA = DocumentSchema(
        required_fields={"labels", "entries"},
        optional_fields={"name", "description", "mode"},
        field_types={
            "labels": list,
            "entries": list,
            "mode": str,
            "name": str,
            "description": str,
        },
    )

    VECTOR_SET_SCHEMA = DocumentSchema(
        required_fields={"dimension", "labels", "columns"},
        optional_fields={"name", "description"},
        field_types={
            "dimension": int,
            "labels": list,
            "columns": list,
            "name": str,
            "description": str,
        },
    )

    def __init__(self):
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def validate_matrix(
        self, data: Any, file_path: Optional[str] = None
    ) -> bool:
        """
        Validate a matrix document.

        Args:
            data: Parsed JSON
            file_path: Optional file path for error reporting

        Returns:
            True if valid, False otherwise
        """
        self.errors.clear()
        self.warnings.clear()
        context = f" in {file_path}" if file_path else ""

        if not self._validate_against_schema(data, self.MATRIX_SCHEMA, file_path):
            return False

        labels, entries = data["labels"], data["entries"]
        self._validate_labels(labels, context)
        if data.get("mode", "exact") not in ("exact", "float"):
            self.errors.append(f"Field 'mode'{context} must be 'exact' or 'float'")

        if len(entries) != len(labels):
            self.errors.append(
                f"Expected {len(labels)} rows{context}, got {len(entries)}"
            )
            return False

        for i, row in enumerate(entries):
            if not isinstance(row, list) or len(row) != len(labels):
                self.errors.append(f"Row {i}{context} must have {len(labels)} entries")
                continue
            for j, value in enumerate(row):
                if not self.validate_scalar(value):
                    self.errors.append(f"Entry ({i}, {j}){context} is not a scalar")

        return len(self.errors) == 0

    def validate_vector_set(
        self, data: Any, file_path: Optional[str] = None
    ) -> bool:
        """Validate a vector-set document."""
        self.errors.clear()
        self.warnings.clear()
        context = f" in {file_path}" if file_path else ""

        if not self._validate_against_schema(data, self.VECTOR_SET_SCHEMA, file_path):
            return False

        dimension, labels, columns = data["dimension"], data["labels"], data["columns"]
        if isinstance(dimension, bool) or dimension < 0:
            self.errors.append(f"Field 'dimension'{context} must be a nonnegative int")
        self._validate_labels(labels, context)

        if len(columns) != len(labels):
            self.errors.append(
                f"Expected {len(labels)} columns{context}, got {len(columns)}"
            )

        for i, column in enumerate(columns):
            if not isinstance(column, list) or len(column) != dimension:
                self.errors.append(f"Column {i}{context} must have {dimension} entries")
                continue
            if not all(self.validate_real(v) for v in column):
                self.errors.append(f"Column {i}{context} has a non-real entry")

        return len(self.errors) == 0

    def validate_real(self, value: Any) -> bool:
        """A number or a numeric string."""
        if isinstance(value, bool):
            return False
        if isinstance(value, (int, float)):
            return True
        if isinstance(value, str):
            try:
                float(value)
                return True
            except ValueError:
                try:
                    Fraction(value.strip())
                    return True
                except (ValueError, ZeroDivisionError):
                    return False
        return False

    def validate_scalar(self, value: Any) -> bool:
        """A real, or an [re, im] pair of reals."""
        if isinstance(value, list):
            return len(value) == 2 and all(self.validate_real(v) for v in value)
        return self.validate_real(value)

    def get_errors(self) -> List[str]:
        return self.errors.copy()

    def get_warnings(self) -> List[str]:
        return self.warnings.copy()

    def _validate_labels(self, labels: List[Any], context: str) -> None:
        if not all(isinstance(label, (str, int)) for label in labels):
            self.errors.append(f"Labels{context} must be strings")
        elif len({str(label) for label in labels}) != len(labels):
            self.errors.append(f"Labels{context} must be unique")

    def _validate_against_schema(
        self,
        data: Any,
        schema: DocumentSchema,
        file_path: Optional[str] = None,
    ) -> bool:
        """Validate data against a schema."""
        context = f" in {file_path}" if file_path else ""

        if not isinstance(data, dict):
            self.errors.append(f"Document{context} must be a JSON object")
            return False

        missing_required = schema.required_fields - set(data.keys())
        if missing_required:
            self.errors.append(
                f"Missing required fields{context}: {sorted(missing_required)}"
            )

        for field_name, expected_type in schema.field_types.items():
            if field_name in data and not isinstance(data[field_name], expected_type):
                self.errors.append(
                    f"Field '{field_name}'{context} must be {expected_type.__name__}, "
                    f"got {type(data[field_name]).__name__}"
                )

        known = schema.required_fields | schema.optional_fields
        for unknown in sorted(set(data.keys()) - known):
            self.warnings.append(f"Unknown field '{unknown}'{context}")

        return len(self.errors) == 0


def load_document(file_path: str, kind: str) -> Dict[str, Any]:
    """Read and validate a "matrix" or "vectors" document."""
    data = util.read_file_json(file_path)
    validator = DocumentValidator()

    if kind == "matrix":
        valid = validator.validate_matrix(data, file_path)
    else:
        valid = validator.validate_vector_set(data, file_path)

    for warning in validator.get_warnings():
        logging.warning(warning)
    if not valid:
        errors = validator.get_errors()
        raise util.DocumentError(f"Invalid {kind} document: {errors[0]}", errors)
    return data


def load_matrix(file_path: str):
    """Read a matrix document into a LabeledBiFunction."""
    from .bifunction import LabeledBiFunction

    return LabeledBiFunction.from_document(load_document(file_path, "matrix"))


def load_vector_set(file_path: str):
    """Read a vector-set document into a VectorSet."""
    from .geometry import VectorSet

    return VectorSet.from_document(load_document(file_path, "vectors"))

"""
Misc helper functions.
"""

import json
import logging
import os
import sys


class RescalingsError(Exception):
    """Base exception for rescalings specific errors."""


class InvalidPathError(RescalingsError):
    """Raised when a file path is invalid or unsafe."""


class DocumentError(RescalingsError):
    """Raised when a JSON document does not match its schema."""

    def __init__(self, message, errors=None):
        super().__init__(message)
        self.errors = list(errors or [])


class ToleranceError(RescalingsError):
    """Raised when a tolerance value is not a positive number."""


class DimensionMismatchError(RescalingsError):
    """Raised when two objects do not share labels or sizes."""


class IndexRangeError(RescalingsError):
    """Raised when a subset refers to an index outside the matrix."""


class VanishingEntryError(RescalingsError):
    """Raised when a scaling function has a zero entry."""


class DegenerateMatrixError(RescalingsError):
    """Raised when a matrix has a zero on its diagonal."""


class VanishingMinorError(RescalingsError):
    """Raised when a principal minor vanishes where it may not."""


class NotSymmetricError(RescalingsError):
    """Raised when a symmetric input is required."""


class NotPositiveSemidefiniteError(RescalingsError):
    """Raised when a kernel has a clearly negative eigenvalue."""


class ParameterError(RescalingsError):
    """Raised when operation or family parameters are invalid."""


class IsometryError(RescalingsError):
    """Raised when an isometry cannot be assembled numerically."""


def validate_path(file_path):
    """Validate file path for security."""
    if file_path.startswith(("/proc", "/sys")) or ".." in file_path.split(os.sep):
        raise InvalidPathError(f"Invalid file path: {file_path}")

    normalized_path = os.path.normpath(file_path)
    if normalized_path != file_path:
        logging.debug(f"Path normalized from {file_path} to {normalized_path}")

    return normalized_path


def read_file_json(input_file):
    """Read data from a json file."""
    validated_path = validate_path(input_file)
    with open(validated_path) as json_file:
        return json.load(json_file)


def save_file(data: str, export_file: str) -> None:
    """Write data to a file."""
    directory = os.path.dirname(export_file)
    if directory and not os.path.exists(directory):
        create_dir(directory)

    with open(export_file, "w") as file:
        file.write(data)


def save_file_json(data: object, export_file: str) -> None:
    """Write data to a json file."""
    directory = os.path.dirname(export_file)
    if directory and not os.path.exists(directory):
        create_dir(directory)

    with open(export_file, "w") as file:
        json.dump(data, file, indent=4)
        file.write("\n")


def create_dir(directory):
    """Create a directory and its parents."""
    os.makedirs(directory, exist_ok=True)


def setup_logging(level=logging.INFO):
    """Logging config. Stdout is reserved for JSON output."""
    logging.basicConfig(
        format=("[%(levelname)s\033[0m] \033[1;31m%(module)s\033[0m: %(message)s"),
        level=level,
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)
    logging.addLevelName(logging.ERROR, "\033[1;31mE")
    logging.addLevelName(logging.INFO, "\033[1;32mI")
    logging.addLevelName(logging.WARNING, "\033[1;33mW")
    logging.addLevelName(logging.DEBUG, "\033[1;34mD")

"""Test tolerance resolution and document validation."""

import json
import os
import tempfile
import unittest
from unittest import mock

from rescalings import config, util
from rescalings.settings import DEFAULT_TOLERANCE, TOLERANCE_ENV


class TestTolerance(unittest.TestCase):
    """Test tolerance resolution."""

    def test_default(self):
        """> Without an override or environment value the default is used."""
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(config.get_tolerance(), DEFAULT_TOLERANCE)

    def test_environment(self):
        """> The environment variable overrides the default."""
        with mock.patch.dict(os.environ, {TOLERANCE_ENV: "1e-6"}):
            self.assertEqual(config.get_tolerance(), 1e-6)

    def test_argument_wins(self):
        """> An explicit argument overrides the environment."""
        with mock.patch.dict(os.environ, {TOLERANCE_ENV: "1e-6"}):
            self.assertEqual(config.get_tolerance(1e-3), 1e-3)

    def test_invalid(self):
        """> Non-positive and non-numeric tolerances raise."""
        for value in (0, -1e-9, float("inf")):
            with self.assertRaises(util.ToleranceError):
                config.get_tolerance(value)
        with mock.patch.dict(os.environ, {TOLERANCE_ENV: "small"}):
            with self.assertRaises(util.ToleranceError):
                config.get_tolerance()


class TestDocumentValidator(unittest.TestCase):
    """Test document validation."""

    def setUp(self):
        """Set up test fixtures."""
        self.validator = config.DocumentValidator()

    def test_validate_scalar(self):
        """> Numbers, numeric strings and pairs are scalars."""
        for value in (1, 0.5, "1/3", "-0.25", ["1", "2"], [0, 1.5]):
            self.assertTrue(self.validator.validate_scalar(value))
        for value in (True, None, "x", "1/0", ["1"], ["1", "2", "3"], {"re": 1}):
            self.assertFalse(self.validator.validate_scalar(value))

    def test_valid_matrix(self):
        """> A well-formed matrix document."""
        data = {"labels": ["a", "b"], "entries": [["1", "0"], ["0", ["0", "1"]]]}
        self.assertTrue(self.validator.validate_matrix(data))
        self.assertEqual(self.validator.get_errors(), [])

    def test_bad_matrix_collects_errors(self):
        """> Every bad entry and row is reported."""
        data = util.read_file_json("tests/test_files/bad_matrix.json")
        self.assertFalse(self.validator.validate_matrix(data))
        errors = self.validator.get_errors()
        self.assertEqual(len(errors), 2)
        self.assertTrue(any("Entry (0, 1)" in error for error in errors))
        self.assertTrue(any("Row 1" in error for error in errors))
        self.assertIn("Unknown field 'colour'", self.validator.get_warnings())

    def test_missing_fields(self):
        """> Missing required fields are reported."""
        self.assertFalse(self.validator.validate_matrix({"labels": []}))
        self.assertTrue(
            any("Missing required fields" in e for e in self.validator.get_errors())
        )

    def test_not_an_object(self):
        """> The document must be a JSON object."""
        self.assertFalse(self.validator.validate_matrix([[1]]))

    def test_duplicate_labels(self):
        """> Labels must be unique."""
        data = {"labels": ["a", "a"], "entries": [[1, 0], [0, 1]]}
        self.assertFalse(self.validator.validate_matrix(data))

    def test_bad_mode(self):
        """> mode is exact or float."""
        data = {"labels": ["a"], "entries": [[1]], "mode": "symbolic"}
        self.assertFalse(self.validator.validate_matrix(data))

    def test_vector_set(self):
        """> Column lengths must match the dimension."""
        good = {"dimension": 2, "labels": ["u"], "columns": [["1", "0"]]}
        self.assertTrue(self.validator.validate_vector_set(good))
        bad = {"dimension": 2, "labels": ["u"], "columns": [["1", ["0", "1"]]]}
        self.assertFalse(self.validator.validate_vector_set(bad))
        short = {"dimension": 3, "labels": ["u"], "columns": [["1", "0"]]}
        self.assertFalse(self.validator.validate_vector_set(short))


class TestLoadDocument(unittest.TestCase):
    """Test loading documents from disk."""

    def test_load_matrix(self):
        """> L3- loads with exact entries."""
        L = config.load_matrix("tests/test_files/L3m.json")
        self.assertEqual(L.labels, ("1", "2", "3"))
        self.assertTrue(L.exact)

    def test_load_invalid(self):
        """> Invalid documents raise with every error attached."""
        with self.assertRaises(util.DocumentError) as context:
            config.load_matrix("tests/test_files/bad_matrix.json")
        self.assertEqual(len(context.exception.errors), 2)

    def test_load_warns_on_unknown_fields(self):
        """> Unknown fields are logged, not fatal."""
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "m.json")
            with open(path, "w") as file:
                json.dump({"labels": ["1"], "entries": [["2"]], "note": "x"}, file)
            with self.assertLogs(level="WARNING") as logs:
                L = config.load_matrix(path)
        self.assertEqual(L.n, 1)
        self.assertTrue(any("Unknown field 'note'" in line for line in logs.output))


if __name__ == "__main__":
    unittest.main()

"""Test the command line."""

import io
import json
import logging
import os
import shutil
import tempfile
import unittest
from unittest import mock

from rescalings import __main__, config, export, geometry
from rescalings.scalar import GaussianRational

L3P = "tests/test_files/L3p.json"
L3M = "tests/test_files/L3m.json"
VECTORS = "tests/test_files/vectors_e.json"
VECTORS_FLIP = "tests/test_files/vectors_e_flip.json"


class TestMain(unittest.TestCase):
    """Test the rescale command."""

    def setUp(self):
        """> Setup a scratch directory."""
        self.tmp_dir = tempfile.mkdtemp()

    def tearDown(self):
        """> Clean up the scratch directory."""
        shutil.rmtree(self.tmp_dir, ignore_errors=True)
        logging.getLogger().disabled = False

    def run_main(self, *argv):
        """Run rescale; return the exit code and stdout."""
        with mock.patch("sys.stdout", new_callable=io.StringIO) as stdout:
            with self.assertRaises(SystemExit) as context:
                __main__.main(["-q", *argv])
        return context.exception.code, stdout.getvalue()

    def run_json(self, *argv):
        code, output = self.run_main(*argv)
        return code, json.loads(output)

    def test_version(self):
        """> -v exits cleanly."""
        with mock.patch("sys.stderr", new_callable=io.StringIO):
            code, _ = self.run_main("-v")
        self.assertEqual(code, 0)

    def test_no_command(self):
        """> A missing command is a usage error."""
        with mock.patch("sys.stderr", new_callable=io.StringIO):
            code, _ = self.run_main()
        self.assertEqual(code, 2)

    def test_families(self):
        """> families lists every family."""
        code, output = self.run_main("families")
        self.assertEqual(code, 0)
        self.assertIn("Ln", output.split())
        self.assertIn("randomRescaledPair", output.split())

    def test_compare_minors(self):
        """> L3+ and L3- differ on the full set."""
        code, document = self.run_json("compare-minors", L3P, L3M)
        self.assertEqual(code, 1)
        self.assertEqual(document["first_diff"]["subset"], ["1", "2", "3"])
        self.assertEqual(document["first_diff"]["L"], ["54", "0"])
        self.assertEqual(document["first_diff"]["M"], ["50", "0"])

    def test_compare_minors_below_full(self):
        """> ... and agree through cardinality 2."""
        code, document = self.run_json("--workers", "2", "compare-minors", L3P, L3M, "--max-card", "2")
        self.assertEqual(code, 0)
        self.assertTrue(document["equal"])

    def test_minors(self):
        """> One JSON line per minor."""
        code, output = self.run_main("minors", L3P, "--max-card", "1")
        lines = [json.loads(line) for line in output.splitlines()]
        self.assertEqual(code, 0)
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[0], {"subset": ["1"], "value": "4"})

    def test_decide(self):
        """> L3+ and L3- are not rescalings."""
        code, document = self.run_json("decide", L3P, L3M)
        self.assertEqual(code, 1)
        self.assertFalse(document["accepted"])
        self.assertEqual(document["counterexample"]["variant"], "inconsistentCycle")

    def test_decide_via_minors(self):
        """> The minor route reports the differing subset."""
        code, document = self.run_json("decide", L3P, L3M, "--kind", "pm1", "--via-minors")
        self.assertEqual(code, 1)
        self.assertEqual(document["counterexample"]["variant"], "differingMinor")
        self.assertEqual(document["counterexample"]["subset"], ["1", "2", "3"])

    def test_decide_accepts_itself(self):
        """> A matrix is a rescaling of itself."""
        code, document = self.run_json("decide", L3P, L3P, "--group", "plusMinusOne")
        self.assertEqual(code, 0)
        self.assertEqual(document["certificate"]["group"], "plusMinusOne")

    def test_decide_bad_flags(self):
        """> --group needs the general kind."""
        with mock.patch("sys.stderr", new_callable=io.StringIO):
            code, _ = self.run_main("decide", L3P, L3M, "--kind", "pm1", "--group", "unitCircle")
        self.assertEqual(code, 2)

    def test_gen_to_file(self):
        """> gen writes L4- to a file."""
        path = os.path.join(self.tmp_dir, "L4m.json")
        code, output = self.run_main("gen", "--family", "Ln", "--n", "4", "--sign", "minus", "-o", path)
        self.assertEqual(code, 0)
        self.assertEqual(output, "")
        L = config.load_matrix(path)
        self.assertEqual(L.n, 4)
        self.assertEqual(L[0, 3], GaussianRational(-1))

    def test_gen_pair_and_decide(self):
        """> A generated sign pair is accepted by decide."""
        first = os.path.join(self.tmp_dir, "L.json")
        second = os.path.join(self.tmp_dir, "M.json")
        code, _ = self.run_main(
            "gen", "--family", "randomPm1Pair", "--n", "5", "--seed", "4", "-o", first, second
        )
        self.assertEqual(code, 0)
        code, document = self.run_json("decide", first, second, "--kind", "pm1")
        self.assertEqual(code, 0)
        self.assertEqual(document["certificate"]["kind"], "pm1")

    def test_gen_float_pair_stays_float(self):
        """> Generated float matrices reload in float mode."""
        first = os.path.join(self.tmp_dir, "P.json")
        second = os.path.join(self.tmp_dir, "Q.json")
        code, _ = self.run_main(
            "gen", "--family", "exaSampled", "--points", "0,1,2,3,4", "-o", first, second
        )
        self.assertEqual(code, 0)
        self.assertFalse(config.load_matrix(first).exact)
        code, document = self.run_json("triple", first, second, "--variant", "nv")
        self.assertEqual(code, 0)
        self.assertTrue(document["holds"])

    def test_gen_wrong_output_count(self):
        """> Pair families need two output files."""
        path = os.path.join(self.tmp_dir, "only.json")
        code, _ = self.run_main("gen", "--family", "hermitean4", "-o", path)
        self.assertEqual(code, 2)

    def test_bad_inputs(self):
        """> Invalid or missing documents exit with 2."""
        code, _ = self.run_main("diagnose", "tests/test_files/bad_matrix.json")
        self.assertEqual(code, 2)
        code, _ = self.run_main("diagnose", os.path.join(self.tmp_dir, "missing.json"))
        self.assertEqual(code, 2)
        code, _ = self.run_main("--tolerance", "0", "diagnose", L3P)
        self.assertEqual(code, 2)

    def test_diagnose(self):
        """> Flags of L3+."""
        code, document = self.run_json("diagnose", L3P)
        self.assertEqual(code, 0)
        self.assertTrue(document["symmetric"])
        self.assertTrue(document["non_degenerate"])

    def test_triple_and_multiplicative(self):
        """> L3+ and L3- fail both tests."""
        code, document = self.run_json("triple", L3P, L3M)
        self.assertEqual(code, 1)
        self.assertEqual(document["witness"], ["1", "2", "3"])
        code, document = self.run_json("multiplicative", L3P, L3M)
        self.assertEqual(code, 1)
        self.assertFalse(document["multiplicative"])

    def test_volumes(self):
        """> Every face of e1, e2, u."""
        code, output = self.run_main("volumes", VECTORS)
        lines = [json.loads(line) for line in output.splitlines()]
        self.assertEqual(code, 0)
        self.assertEqual(len(lines), 7)
        self.assertEqual(lines[0], {"subset": ["e1"], "volume": "1.0"})
        self.assertEqual(lines[-1]["subset"], ["e1", "e2", "u"])

    def test_recover_isometry(self):
        """> The flipped set is recovered with signs."""
        code, document = self.run_json("recover-isometry", VECTORS, VECTORS_FLIP)
        self.assertEqual(code, 0)
        self.assertTrue(document["accepted"])
        self.assertIn(document["witness"]["signs"], ([1, -1, 1], [-1, 1, -1]))

    def test_recover_isometry_short_scan(self):
        """> A scan stopped below the differing face is a rejection."""
        paths = []
        for name, source in (("V.json", L3P), ("W.json", L3M)):
            path = os.path.join(self.tmp_dir, name)
            export.save(export.vectors(geometry.factor_psd(config.load_matrix(source))), path)
            paths.append(path)
        code, document = self.run_json("recover-isometry", *paths, "--max-card", "2")
        self.assertEqual(code, 1)
        self.assertEqual(document["counterexample"]["variant"], "inconsistentCycle")
        self.assertEqual(sorted(document["counterexample"]["vertices"]), ["1", "2", "3"])

    def test_scaled_isometry(self):
        """> A set is a scaled isometry of itself."""
        code, document = self.run_json("scaled-isometry", VECTORS, VECTORS)
        self.assertEqual(code, 0)
        g = [float(value) for value in document["certificate"]["g"]]
        for value in g:
            self.assertAlmostEqual(abs(value), 1.0)


if __name__ == "__main__":
    unittest.main()

"""Test principal minors and their comparison."""

import unittest
from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from rescalings import config, generators, minors, util
from rescalings.bifunction import LabeledBiFunction, apply_rescaling
from rescalings.families import ln, random_pm1_pair
from rescalings.scalar import GaussianRational

L3P = config.load_matrix("tests/test_files/L3p.json")
L3M = config.load_matrix("tests/test_files/L3m.json")


def corner_pair(n):
    plus = generators.generate(generators.FamilySpec("Ln", {"n": n, "sign": "plus"}))
    minus = generators.generate(generators.FamilySpec("Ln", {"n": n, "sign": "minus"}))
    return plus, minus


class TestPrincipalMinor(unittest.TestCase):
    """Test single minors."""

    def test_full_determinants(self):
        """> det L3+ = 54 and det L3- = 50."""
        self.assertEqual(minors.principal_minor(L3P, [0, 1, 2]), GaussianRational(54))
        self.assertEqual(minors.principal_minor(L3M, [0, 1, 2]), GaussianRational(50))

    def test_conventions(self):
        """> Empty subset gives 1, repeated index gives 0."""
        self.assertEqual(minors.principal_minor(L3P, []), GaussianRational(1))
        self.assertEqual(minors.principal_minor(L3P, [1, 1]), GaussianRational(0))

    def test_order_does_not_matter(self):
        """> Subsets are sorted before use."""
        self.assertEqual(
            minors.principal_minor(L3M, [2, 0]), minors.principal_minor(L3M, [0, 2])
        )

    def test_out_of_range(self):
        """> Indices outside the matrix raise."""
        with self.assertRaises(util.IndexRangeError):
            minors.principal_minor(L3P, [3])

    def test_gaussian_determinant(self):
        """> Bareiss over Gaussian integers."""
        i, one, two = GaussianRational(0, 1), GaussianRational(1), GaussianRational(2)
        self.assertEqual(minors.determinant([[two, i], [i, two]]), GaussianRational(5))
        self.assertEqual(minors.determinant([[one, i], [-i, one]]), GaussianRational(0))

    def test_rational_determinant(self):
        """> Denominators are cleared exactly."""
        half = Fraction(1, 2)
        rows = [[GaussianRational(half), GaussianRational(1)], [GaussianRational(1), GaussianRational(half)]]
        self.assertEqual(minors.determinant(rows), GaussianRational(Fraction(-3, 4)))

    def test_pivoting_sign(self):
        """> Row swaps flip the sign."""
        rows = [[GaussianRational(v) for v in row] for row in [[0, 1], [1, 0]]]
        self.assertEqual(minors.determinant(rows), GaussianRational(-1))

    def test_float_determinant(self):
        """> Float mode uses LU."""
        self.assertAlmostEqual(minors.determinant([[2.0, 1.0], [1.0, 2.0]]), 3.0)


class TestSubsets(unittest.TestCase):
    """Test subset enumeration."""

    def test_order(self):
        """> Cardinality-major, lexicographic within a cardinality."""
        self.assertEqual(
            list(minors.iter_subsets(3, 2)),
            [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)],
        )

    def test_count(self):
        """> Count matches enumeration."""
        self.assertEqual(minors.count_subsets(6, 3), len(list(minors.iter_subsets(6, 3))))


class TestCompareMinors(unittest.TestCase):
    """Test minor comparison."""

    def test_equal_below_full(self):
        """> L3+ and L3- agree through cardinality 2."""
        result = minors.compare_minors(L3P, L3M, 2)
        self.assertTrue(result.equal)
        self.assertEqual(result.max_cardinality_checked, 2)

    def test_full_difference(self):
        """> L3+ and L3- differ on the full set."""
        result = minors.compare_minors(L3P, L3M)
        self.assertFalse(result.equal)
        self.assertEqual(result.first_diff.subset, (0, 1, 2))
        self.assertEqual(result.first_diff.value_l, GaussianRational(54))
        self.assertEqual(result.first_diff.value_m, GaussianRational(50))

    def test_bad_max_card(self):
        """> max_card outside [0, n] raises."""
        with self.assertRaises(util.IndexRangeError):
            minors.compare_minors(L3P, L3M, 4)

    def test_parallel_matches_sequential(self):
        """> Worker threads give the sequential answer."""
        for n in range(3, 8):
            plus, minus = corner_pair(n)
            sequential = minors.compare_minors(plus, minus)
            threaded = minors.compare_minors(plus, minus, workers=3)
            self.assertEqual(sequential, threaded)

    def test_corner_family(self):
        """> Proper minors of Ln+ and Ln- agree, determinants differ."""
        for n in range(3, 9):
            plus, minus = corner_pair(n)
            self.assertTrue(minors.compare_minors(plus, minus, n - 1).equal)
            full = list(range(n))
            self.assertNotEqual(
                minors.principal_minor(plus, full), minors.principal_minor(minus, full)
            )

    def test_float_tolerance(self):
        """> Float minors agree within tolerance."""
        L = LabeledBiFunction.from_rows([[2.0, 1.0], [1.0, 2.0]])
        M = LabeledBiFunction.from_rows([[2.0, -1.0], [-1.0, 2.0 + 1e-13]])
        self.assertTrue(minors.compare_minors(L, M).equal)

    def test_shift_law(self):
        """> Equal minors survive a common diagonal shift."""
        rng = np.random.default_rng(7)
        for _ in range(100):
            n = int(rng.integers(2, 7))
            L, M, _ = random_pm1_pair.sample(rng, n, float(rng.choice([0.2, 0.5, 0.9])))
            h = [int(v) for v in rng.integers(-5, 6, size=n)]
            result = minors.compare_minors(L.add_diagonal(h), M.add_diagonal(h))
            self.assertTrue(result.equal)

    @settings(max_examples=30, deadline=None)
    @given(st.permutations(list(range(5))))
    def test_permutation_invariance(self, order):
        """> Relabeling both matrices permutes the minors."""
        plus, minus = corner_pair(5)
        permuted_plus = plus.submatrix(order)
        permuted_minus = minus.submatrix(order)
        self.assertEqual(
            minors.compare_minors(permuted_plus, permuted_minus).first_diff.subset,
            (0, 1, 2, 3, 4),
        )
        self.assertTrue(minors.compare_minors(permuted_plus, permuted_minus, 4).equal)


class TestAllMinors(unittest.TestCase):
    """Test the minor listing."""

    def test_all_minors(self):
        """> Every minor of L3+."""
        values = [m.value for m in minors.all_minors(L3P)]
        self.assertEqual(values, [4, 4, 4, 15, 15, 15, 54])


class TestCornerTridiagonal(unittest.TestCase):
    """Test the continuant and corner determinant."""

    def test_continuant(self):
        """> Open tridiagonal 3x3."""
        self.assertEqual(minors.continuant([4, 4, 4], [1, 1]), 56)

    def test_two_by_two(self):
        """> For n = 2 the corner adds to the off-diagonal."""
        self.assertEqual(minors.corner_tridiag_det([4, 4], [1, 1]), GaussianRational(12))

    def test_matches_dense(self):
        """> Corner formula equals the dense determinant for Ln+/-."""
        for n in range(3, 9):
            for corner in (1, -1):
                rows = ln.rows(n, corner)
                dense = minors.determinant([[GaussianRational(v) for v in row] for row in rows])
                formula = minors.corner_tridiag_det([4] * n, [1] * (n - 1) + [corner])
                self.assertEqual(formula, dense)

    def test_matches_dense_float(self):
        """> Random float diagonals and off-diagonals."""
        rng = np.random.default_rng(3)
        for _ in range(50):
            n = int(rng.integers(3, 9))
            a = [float(v) for v in rng.normal(size=n)]
            b = [float(v) for v in rng.normal(size=n)]
            rows = np.diag(a)
            for i in range(n - 1):
                rows[i, i + 1] = rows[i + 1, i] = b[i]
            rows[0, n - 1] = rows[n - 1, 0] = b[n - 1]
            dense = np.linalg.det(rows)
            formula = minors.corner_tridiag_det(a, b)
            self.assertLessEqual(abs(formula - dense), 1e-10 * max(1.0, abs(dense)))

    def test_bad_input(self):
        """> n < 2 and length mismatches raise."""
        with self.assertRaises(util.ParameterError):
            minors.corner_tridiag_det([4], [1])
        with self.assertRaises(util.DimensionMismatchError):
            minors.corner_tridiag_det([4, 4, 4], [1, 1])


class TestMultiplicativity(unittest.TestCase):
    """Test the multiplicativity of det_M / det_L."""

    def test_rescaled(self):
        """> A symmetric rescaling is multiplicative with w = f^2."""
        plus, _ = corner_pair(4)
        M = apply_rescaling(plus, [2, -3, 1, 5], [2, -3, 1, 5])
        result = minors.multiplicativity_test(plus, M)
        self.assertTrue(result.multiplicative)
        self.assertEqual(result.weights, (4, 9, 1, 25))

    def test_not_multiplicative(self):
        """> L3+ against L3- fails on the full set."""
        result = minors.multiplicativity_test(L3P, L3M)
        self.assertFalse(result.multiplicative)
        self.assertEqual(result.violating_subset, (0, 1, 2))

    def test_degenerate_m(self):
        """> M with a zero diagonal raises."""
        M = LabeledBiFunction.from_rows([[0, 1], [1, 1]])
        with self.assertRaises(util.DegenerateMatrixError):
            minors.multiplicativity_test(L3P.submatrix([0, 1]), M)

    def test_vanishing_minor(self):
        """> A vanishing det_L raises."""
        L = LabeledBiFunction.from_rows([[1, 1], [1, 1]])
        M = LabeledBiFunction.from_rows([[1, 2], [2, 1]])
        with self.assertRaises(util.VanishingMinorError):
            minors.multiplicativity_test(L, M)


if __name__ == "__main__":
    unittest.main()

"""Test labeled matrices and their graphs."""

import unittest

from hypothesis import given
from hypothesis import strategies as st

from rescalings import bifunction, util
from rescalings.bifunction import LabeledBiFunction
from rescalings.scalar import GaussianRational

L3P = [[4, 1, 1], [1, 4, 1], [1, 1, 4]]

square_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


class TestLabeledBiFunction(unittest.TestCase):
    """Test construction and unary operations."""

    def test_default_labels(self):
        """> Labels default to 1..n."""
        L = LabeledBiFunction.from_rows(L3P)
        self.assertEqual(L.labels, ("1", "2", "3"))
        self.assertTrue(L.exact)
        self.assertEqual(L.scale, 4.0)

    def test_duplicate_labels(self):
        """> Duplicate labels are rejected."""
        with self.assertRaises(util.DimensionMismatchError):
            LabeledBiFunction.from_rows([[1, 0], [0, 1]], ["a", "a"])

    def test_not_square(self):
        """> Ragged grids are rejected."""
        with self.assertRaises(util.DimensionMismatchError):
            LabeledBiFunction.from_rows([[1, 0], [0]])

    def test_mixed_modes(self):
        """> One float entry makes the whole matrix float."""
        L = LabeledBiFunction.from_rows([[1, 0.5], [0, 1]])
        self.assertFalse(L.exact)
        self.assertIsInstance(L[0, 0], complex)

    def test_empty(self):
        """> The empty matrix is allowed."""
        L = LabeledBiFunction.from_rows([])
        self.assertEqual(L.n, 0)
        self.assertEqual(L.scale, 1.0)

    def test_adjoint(self):
        """> Adjoint is the conjugate transpose."""
        i = GaussianRational(0, 1)
        L = LabeledBiFunction.from_rows([[1, i], [2, 3]])
        self.assertEqual(L.adjoint()[1, 0], -i)
        self.assertEqual(L.adjoint()[0, 1], GaussianRational(2))

    def test_add_diagonal(self):
        """> Diagonal shift."""
        L = LabeledBiFunction.from_rows(L3P).add_diagonal([1, 2, 3])
        self.assertEqual(L.diagonal, (5, 6, 7))
        with self.assertRaises(util.DimensionMismatchError):
            L.add_diagonal([1])

    def test_submatrix(self):
        """> Submatrices keep labels."""
        L = LabeledBiFunction.from_rows(L3P, ["a", "b", "c"]).submatrix([0, 2])
        self.assertEqual(L.labels, ("a", "c"))
        self.assertEqual(L[0, 1], GaussianRational(1))

    def test_from_document_float_mode(self):
        """> "mode": "float" keeps decimal strings in float mode."""
        data = {"labels": ["1"], "entries": [["0.1"]], "mode": "float"}
        L = LabeledBiFunction.from_document(data)
        self.assertFalse(L.exact)
        self.assertEqual(L[0, 0], 0.1 + 0j)

    @given(square_matrices)
    def test_transpose_twice(self, rows):
        """> Transposing twice gives the matrix back."""
        L = LabeledBiFunction.from_rows(rows)
        self.assertEqual(L.transpose().transpose(), L)

    @given(square_matrices)
    def test_graph_ignores_transpose(self, rows):
        """> X_L only sees the symmetrized pattern."""
        L = LabeledBiFunction.from_rows(rows)
        first = bifunction.graph_view(L)
        second = bifunction.graph_view(L.transpose())
        self.assertEqual(first.components, second.components)
        self.assertEqual(first.adjacency, second.adjacency)


class TestDiagnose(unittest.TestCase):
    """Test structural flags."""

    def test_symmetric(self):
        """> L3+ is symmetric, Hermitean and non-degenerate."""
        result = bifunction.diagnose(LabeledBiFunction.from_rows(L3P))
        self.assertTrue(result.symmetric)
        self.assertTrue(result.hermitean)
        self.assertTrue(result.non_degenerate)

    def test_hermitean_not_symmetric(self):
        """> A Hermitean matrix with imaginary entries."""
        i = GaussianRational(0, 1)
        result = bifunction.diagnose(LabeledBiFunction.from_rows([[1, i], [-i, 1]]))
        self.assertFalse(result.symmetric)
        self.assertTrue(result.hermitean)

    def test_degenerate(self):
        """> A zero on the diagonal."""
        L = LabeledBiFunction.from_rows([[0, 1], [1, 1]])
        self.assertFalse(bifunction.is_non_degenerate(L))
        self.assertFalse(L.non_degenerate)


class TestGraphView(unittest.TestCase):
    """Test the nonzero-pattern graph."""

    def test_path_radius(self):
        """> A path on four vertices has radius 2."""
        rows = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]
        view = bifunction.graph_view(LabeledBiFunction.from_rows(rows))
        self.assertEqual(view.components, ((0, 1, 2, 3),))
        self.assertEqual(view.radius_per_component, (2,))
        self.assertTrue(view.has_edge(1, 0))

    def test_components(self):
        """> Components are ordered by their smallest vertex."""
        rows = [[1, 0, 1], [0, 1, 0], [1, 0, 1]]
        view = bifunction.graph_view(LabeledBiFunction.from_rows(rows))
        self.assertEqual(view.components, ((0, 2), (1,)))
        self.assertEqual(view.radius_per_component, (1, 0))
        self.assertEqual(view.component_of(2), 0)
        self.assertEqual(view.max_radius, 1)

    def test_float_tolerance(self):
        """> Tiny float entries are not edges."""
        rows = [[1.0, 1e-14], [1e-14, 1.0]]
        view = bifunction.graph_view(LabeledBiFunction.from_rows(rows))
        self.assertEqual(len(view.components), 2)


class TestRescalingHelpers(unittest.TestCase):
    """Test zero patterns and applying rescalings."""

    def test_zero_pattern_mismatch(self):
        """> First differing zero in row-major order."""
        L = LabeledBiFunction.from_rows([[1, 0], [1, 1]])
        M = LabeledBiFunction.from_rows([[1, 2], [0, 1]])
        self.assertEqual(bifunction.zero_pattern_mismatch(L, M, 1e-9), (0, 1))

    def test_apply_rescaling(self):
        """> M(x, y) = f(x) g(y) L(x, y)."""
        L = LabeledBiFunction.from_rows(L3P)
        M = bifunction.apply_rescaling(L, [1, -1, 2], [3, 1, 1])
        self.assertEqual(M[0, 0], GaussianRational(12))
        self.assertEqual(M[1, 0], GaussianRational(-3))
        self.assertEqual(M[2, 2], GaussianRational(8))

    def test_apply_rescaling_vanishing(self):
        """> A zero in f is rejected."""
        L = LabeledBiFunction.from_rows(L3P)
        with self.assertRaises(util.VanishingEntryError):
            bifunction.apply_rescaling(L, [1, 0, 1], [1, 1, 1])

    def test_label_mismatch(self):
        """> Different label sets are rejected."""
        L = LabeledBiFunction.from_rows(L3P)
        M = LabeledBiFunction.from_rows(L3P, ["a", "b", "c"])
        with self.assertRaises(util.DimensionMismatchError):
            bifunction.require_same_labels(L, M)


if __name__ == "__main__":
    unittest.main()

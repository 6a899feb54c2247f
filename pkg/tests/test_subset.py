''' Tests for the ProductSubset class
'''
#pylint: disable=missing-class-docstring
#pylint: disable=missing-function-docstring

# Standard library imports
import unittest

# Third party imports
import numpy as np

# Local imports
from tests.help_lib import abstract, grid
from choiceform.space import ProductSpace
from choiceform.subset import ProductSubset, from_section_matrix
import choiceform.utils as utils


class TestProductSubset(unittest.TestCase):


    def setUp(self):
        self.product = ProductSpace([abstract(1, 2), abstract(2, 3)])
        self.subset = ProductSubset.from_profiles(self.product,
                                                  [(0, 0), (1, 2), (1, 0)])


    def test_init(self):
        self.assertRaises(TypeError, ProductSubset, 'space', [True])
        self.assertRaises(ValueError, ProductSubset, self.product, [True] * 5)
        self.assertRaises(utils.InvalidProfileError,
                          ProductSubset.from_profiles, self.product, [(2, 0)])

        # A single strategy space is a one-factor product
        points = ProductSubset.from_profiles(grid(1, 3), [(1,)])
        self.assertEqual(points.space(), ProductSpace([grid(1, 3)]))
        self.assertEqual(points.indices(), [1])


    def test_dunder(self):
        subset_dup = ProductSubset.from_indices(self.product, [0, 3, 5])
        self.assertEqual(self.subset, subset_dup)
        self.assertEqual(hash(self.subset), hash(subset_dup))
        self.assertNotEqual(self.subset, ProductSubset.full(self.product))
        self.assertEqual(len(self.subset), 3)
        self.assertIn((1, 2), self.subset)
        self.assertNotIn((0, 1), self.subset)
        self.assertIsInstance(self.subset.__str__(), str)
        self.assertIsInstance(self.subset.__repr__(), str)


    def test_set_operations(self):
        full = ProductSubset.full(self.product)
        empty = ProductSubset.empty(self.product)
        self.assertTrue(empty.is_empty())
        self.assertEqual(full.count(), 6)
        self.assertEqual(self.subset & full, self.subset)
        self.assertEqual(self.subset | empty, self.subset)
        self.assertEqual(full - self.subset, self.subset.complement())
        self.assertTrue(self.subset <= full)
        self.assertFalse(full <= self.subset)
        self.assertEqual(self.subset.profiles(), [(0, 0), (1, 0), (1, 2)])

        other = ProductSubset.full(ProductSpace([abstract(1, 6)]))
        self.assertRaises(ValueError, self.subset.__and__, other)
        self.assertRaises(TypeError, self.subset.__or__, 'other')


    def test_sections(self):
        # Sections through player 1 (the second): rows are x_0
        matrix = self.subset.section_matrix(1)
        np.testing.assert_array_equal(matrix, [[1, 0, 0], [1, 0, 1]])
        # Sections through player 0: rows are x_1
        matrix = self.subset.section_matrix(0)
        np.testing.assert_array_equal(matrix, [[1, 1], [0, 0], [0, 1]])

        section = self.subset.section(0, (1,))
        self.assertTrue(section.is_empty())
        self.assertEqual(self.subset.section(1, (1,)).indices(), [0, 2])
        self.assertRaises(utils.InvalidProfileError, self.subset.section,
                          0, (3,))

        self.assertEqual(self.subset.nonempty_sections(0).profiles(),
                         [(0,), (2,)])


    def test_from_section_matrix(self):
        for i in range(2):
            rebuilt = from_section_matrix(self.product, i,
                                          self.subset.section_matrix(i))
            self.assertEqual(rebuilt, self.subset)

        product = ProductSpace([abstract(1, 2), abstract(2, 3),
                                abstract(3, 2)])
        rng = np.random.default_rng(7)
        subset = ProductSubset(product, rng.random(product.count()) < 0.5)
        for i in range(3):
            self.assertEqual(
                from_section_matrix(product, i, subset.section_matrix(i)),
                subset)


if __name__ == '__main__':
    unittest.main()

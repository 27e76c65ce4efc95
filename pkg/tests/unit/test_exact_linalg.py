"""
测试用例: 精确线性代数
"""

import os
import sys
import unittest
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from errors import DenominatorDivisibleByP, NotPrime, SingularMatrix
from exact_linalg import (
    Matrix, PrimeScalar, column_space, complement_columns, format_scalar, inverse, is_probable_prime,
    kernel_basis, matrix_rank, rank, rref, solve_in_span, to_scalar,
)

P = 1048583


class TestScalars(unittest.TestCase):
    """标量规范化与格式化"""

    def test_to_scalar_normalizes_integral_fraction(self):
        value = to_scalar(Fraction(4, 2))
        self.assertEqual(value, 2)
        self.assertIsInstance(value, int)

    def test_format_scalar(self):
        self.assertEqual(format_scalar(Fraction(3, 6)), "1/2")
        self.assertEqual(format_scalar(-4), "-4")

    def test_probable_prime(self):
        self.assertTrue(is_probable_prime(P))
        self.assertFalse(is_probable_prime(1048581))
        self.assertFalse(is_probable_prime(1))

    def test_reduce_rejects_vanishing_denominator(self):
        with self.assertRaises(DenominatorDivisibleByP):
            PrimeScalar.reduce(Fraction(1, 7), 7)
        self.assertEqual(PrimeScalar.reduce(Fraction(1, 2), 7).value, 4)


class TestRankAndKernel(unittest.TestCase):
    """秩、核与行简化"""

    def test_rank(self):
        cases = [
            ([[1, 2], [2, 4]], 1),
            ([[1, 2], [3, 4]], 2),
            ([[0, 0, 0]], 0),
            ([[1, 0, 1], [0, 1, 1], [1, 1, 2]], 2),
            ([[Fraction(1, 2), Fraction(1, 3)], [3, 2]], 1),
        ]
        for rows, expected in cases:
            with self.subTest(rows=rows):
                self.assertEqual(rank(Matrix.from_rows(rows)), expected)

    def test_empty_matrix_rank(self):
        self.assertEqual(rank(Matrix.zeros(0, 3)), 0)
        self.assertEqual(rank(Matrix.zeros(3, 0)), 0)

    def test_kernel_vectors_are_annihilated(self):
        m = Matrix.from_rows([[1, 2, 3], [2, 4, 7]])
        basis = kernel_basis(m)
        self.assertEqual(len(basis), m.cols - rank(m))
        for v in basis:
            self.assertEqual(m.apply(v), (0, 0))

    def test_kernel_of_empty_rows_is_everything(self):
        self.assertEqual(len(kernel_basis(Matrix.zeros(0, 3))), 3)

    def test_rref_pivots(self):
        ech = rref(Matrix.from_rows([[2, 4], [1, 3]]))
        self.assertEqual(ech.rank, 2)
        self.assertEqual(ech.pivots, (0, 1))
        self.assertEqual(ech.reduced, Matrix.identity(2))

    def test_modular_rank_never_exceeds_rational(self):
        m = Matrix.from_rows([[1, 1], [1, 1 + P]])
        self.assertEqual(matrix_rank(m), 2)
        self.assertEqual(matrix_rank(m, P), 1)

    def test_modular_rank_requires_prime(self):
        with self.assertRaises(NotPrime):
            matrix_rank(Matrix.identity(2), P + 1)


class TestSolving(unittest.TestCase):
    """求逆、解方程与补空间"""

    def test_inverse(self):
        m = Matrix.from_rows([[2, 1], [1, 1]])
        self.assertEqual(inverse(m), Matrix.from_rows([[1, -1], [-1, 2]]))
        self.assertEqual(m @ inverse(m), Matrix.identity(2))

    def test_inverse_of_singular_matrix(self):
        with self.assertRaises(SingularMatrix):
            inverse(Matrix.from_rows([[1, 2], [2, 4]]))

    def test_solve_in_span(self):
        basis = Matrix.from_columns([(1, 0, 0), (1, 1, 0)], 3)
        x = solve_in_span(basis, Matrix.from_columns([(3, 2, 0)], 3))
        self.assertEqual(x, Matrix.from_rows([[1], [2]]))

    def test_solve_outside_span(self):
        basis = Matrix.from_columns([(1, 0, 0), (1, 1, 0)], 3)
        with self.assertRaises(ValueError):
            solve_in_span(basis, Matrix.from_columns([(0, 0, 1)], 3))

    def test_complement_columns(self):
        sub = Matrix.from_columns([(1, 0, 0)], 3)
        ambient = Matrix.from_columns([(1, 0, 0), (0, 1, 0), (1, 1, 0)], 3)
        complement = complement_columns(sub, ambient)
        self.assertEqual(complement.cols, 1)
        self.assertEqual(complement.column(0), (0, 1, 0))

    def test_column_space_dimension(self):
        m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
        self.assertEqual(column_space(m).cols, 2)


if __name__ == '__main__':
    unittest.main()

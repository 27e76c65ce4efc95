"""
测试用例: 与 sympy 的交叉比对（秩、核、约化 Groebner 基）
"""

import os
import random
import sys
import unittest
from fractions import Fraction

import sympy

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from artinian import LinearForm, build_algebra, rank_of_power
from config import DEFAULT_MOD_PRIMES
from exact_linalg import Matrix, kernel_basis, rank, rank_mod_p
from groebner import IdealHandle, reduced_groebner
from poly_parser import parse_many
from polyring import Polynomial, VariableSet, substitute_linear

IDEALS = [
    (['x', 'y', 'z'], ['x^2', '(x+y)^2', '(x+y+z)^2']),
    (['x', 'y', 'z'], ['x^2+y^2+z^2', 'x^3+y^3+z^3', 'x^4+y^4+z^4']),
    (['x', 'y'], ['x^2 - 1/3*x*y', 'y^3 + x*y^2']),
    (['x', 'y', 'z'], ['x*y - z^2', 'x^3', 'y^3', 'z^4']),
]


def to_sympy(m):
    if m.rows == 0 or m.cols == 0:
        return sympy.zeros(m.rows, m.cols)
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                          for x in m.row(i)] for i in range(m.rows)])


def monic_set(exprs, symbols):
    return {sympy.Poly(e, *symbols, domain='QQ').monic().as_expr() for e in exprs}


class TestLinearAlgebraOracle(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(7)

    def random_matrix(self, rows, cols, rank_cap):
        left = [[Fraction(self.rng.randint(-4, 4), self.rng.randint(1, 3)) for _ in range(rank_cap)]
                for _ in range(rows)]
        right = [[self.rng.randint(-3, 3) for _ in range(cols)] for _ in range(rank_cap)]
        return Matrix.from_rows(left) @ Matrix.from_rows(right)

    def test_rank_matches_sympy(self):
        for shape in [(3, 3, 2), (5, 4, 3), (6, 6, 6), (4, 7, 1), (7, 5, 4)]:
            with self.subTest(shape=shape):
                m = self.random_matrix(*shape)
                self.assertEqual(rank(m), to_sympy(m).rank())
                self.assertLessEqual(rank_mod_p(m, 1048583), rank(m))

    def test_kernel_is_annihilated(self):
        for shape in [(3, 5, 2), (4, 4, 3)]:
            with self.subTest(shape=shape):
                m = self.random_matrix(*shape)
                basis = kernel_basis(m)
                self.assertEqual(len(basis), m.cols - rank(m))
                for v in basis:
                    self.assertTrue(all(x == 0 for x in m.apply(v)))


class TestPowerRankOracle(unittest.TestCase):
    """×g^k 的逐次秩：复合 ×g 的管线 vs 直接乘 g^k 再交给 sympy"""

    INSTANCES = 20

    @staticmethod
    def random_instance(rng):
        n = rng.choice([2, 3])
        vs = VariableSet([f"x{i}" for i in range(1, n + 1)])
        while True:
            degrees = [rng.randint(2, 3) for _ in range(n)]
            dim = 1
            for d in degrees:
                dim *= d
            if dim <= 30:
                break
        while True:
            m = Matrix.from_rows([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
            if rank(m) == n:
                break
        gens = [substitute_linear(Polynomial.variable(vs, i) ** d, m) for i, d in enumerate(degrees)]
        a = build_algebra(IdealHandle(vs, gens))
        g = LinearForm(tuple(rng.randint(-5, 5) or 1 for _ in range(n)))
        return a, g

    def test_per_degree_ranks(self):
        rng = random.Random(11)
        equal_somewhere = False
        for case in range(self.INSTANCES):
            a, g = self.random_instance(rng)
            g_poly = g.to_polynomial(a.vars)
            for k in range(1, a.socle_degree + 1):
                with self.subTest(case=case, k=k):
                    pipeline = rank_of_power(a, g, k)
                    brute = tuple(to_sympy(a.mult_matrix(g_poly ** k, d)).rank()
                                  if d + k <= a.socle_degree else 0 for d in a.degrees())
                    self.assertEqual(pipeline.per_degree, brute)
                    for p in DEFAULT_MOD_PRIMES:
                        modular = rank_of_power(a, g, k, p)
                        self.assertLessEqual(modular.total, pipeline.total)
                        equal_somewhere = equal_somewhere or modular.total == pipeline.total
        self.assertTrue(equal_somewhere)


class TestGroebnerOracle(unittest.TestCase):

    def test_reduced_basis_matches_sympy(self):
        for names, texts in IDEALS:
            with self.subTest(ideal=texts):
                vs = VariableSet(names)
                ideal = IdealHandle(vs, parse_many(texts, vs), allow_inhomogeneous=True)
                symbols = sympy.symbols(names)
                oracle = sympy.groebner([sympy.sympify(t.replace('^', '**')) for t in texts], *symbols,
                                        order='grevlex')
                ours = [sympy.sympify(str(g).replace('^', '**')) for g in reduced_groebner(ideal)]
                self.assertEqual(len(ours), len(oracle.exprs))
                self.assertEqual(monic_set(ours, symbols), monic_set(oracle.exprs, symbols))


if __name__ == '__main__':
    unittest.main()

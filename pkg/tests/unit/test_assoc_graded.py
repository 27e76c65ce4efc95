"""
测试用例: 相伴分次代数
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from artinian import LinearForm, build_algebra
from assoc_graded import (
    CONSISTENT, CONTRADICTION, EXPECTED_ASYMMETRY, INCONCLUSIVE, associated_graded, gr_inequality,
    hilbert_triple_check, in_prime_ideal, normalize_z, verify_remark37, verify_theorem1, _classify,
)
from errors import ZeroLinearForm
from groebner import IdealHandle, ideal_equals
from lefschetz import DEFINITELY_NO, NO_WITNESS_FOUND, WITNESS, WLP, LefschetzVerdict, SearchParams
from poly_parser import parse, parse_many
from polyring import Polynomial, VariableSet


class TestNormalization(unittest.TestCase):
    """把 z 换到最后一个变量"""

    def setUp(self):
        self.vs = VariableSet(['x', 'y', 'z'])
        self.ideal = IdealHandle(self.vs, parse_many(['x^2', 'y^2', 'z^2'], self.vs))

    def test_last_variable_needs_no_change(self):
        _, change = normalize_z(self.ideal, LinearForm.variable(3, 2))
        self.assertTrue(change.is_identity)
        self.assertEqual(change.pivot, 2)

    def test_pivot_is_last_nonzero_coefficient(self):
        z = LinearForm((1, 1, 0))
        transformed, change = normalize_z(self.ideal, z)
        self.assertEqual(change.pivot, 1)
        self.assertEqual(change.apply(z.to_polynomial(self.vs)), Polynomial.variable(self.vs, 'z'))
        self.assertEqual(build_algebra(transformed).hilbert, build_algebra(self.ideal).hilbert)

    def test_pull_back_inverts_apply(self):
        _, change = normalize_z(self.ideal, LinearForm((2, 0, 3)))
        f = parse('x^2 + y*z', self.vs)
        self.assertEqual(change.pull_back(change.apply(f)), f)

    def test_rejected_forms(self):
        with self.assertRaises(ZeroLinearForm):
            normalize_z(self.ideal, LinearForm((0, 0, 0)))
        with self.assertRaises(ValueError):
            normalize_z(self.ideal, LinearForm((1, 1)))


class TestAssociatedGraded(unittest.TestCase):
    """In' 与 Gr"""

    def setUp(self):
        self.vs = VariableSet(['x', 'y', 'z'])
        self.ideal = IdealHandle(self.vs, parse_many(['x^2', '(x+y)^2', '(x+y+z)^2'], self.vs))
        self.a = build_algebra(self.ideal)
        self.z = LinearForm.variable(3, 2)

    def test_in_prime_ideal(self):
        expected = IdealHandle(self.vs, parse_many(['x^2', '2*x*y + y^2', 'x*z + y*z', 'y^3', 'y^2*z', 'z^3'],
                                                   self.vs))
        self.assertTrue(ideal_equals(in_prime_ideal(self.ideal), expected))

    def test_graded_algebra_keeps_hilbert(self):
        res = associated_graded(self.a, self.z)
        self.assertEqual(res.algebra.dims(), [1, 3, 3, 1])
        self.assertEqual(res.z_star, LinearForm.variable(3, 2))

    def test_remark37(self):
        result = verify_remark37(self.a, self.z)
        self.assertTrue(result['passed'], result['checks'])
        self.assertEqual(result['profile']['blocks'], result['graded_profile']['blocks'])

    def test_remark37_after_coordinate_change(self):
        result = verify_remark37(self.a, LinearForm((1, 2, 0)))
        self.assertTrue(result['passed'], result['checks'])

    def test_hilbert_triple(self):
        result = hilbert_triple_check(self.ideal, self.z)
        self.assertTrue(result['passed'])
        self.assertEqual(result['oracle'], [1, 3, 3, 1])

    def test_gr_inequality(self):
        result = gr_inequality(self.a, self.z, samples=2, seed=3)
        self.assertEqual(len(result['samples']), 2)
        self.assertTrue(result['passed'])


class TestTheorem1(unittest.TestCase):
    """A 与 Gr 结论的相容性"""

    def test_classification(self):
        witness = LefschetzVerdict(WLP, WITNESS)
        no = LefschetzVerdict(WLP, DEFINITELY_NO)
        unknown = LefschetzVerdict(WLP, NO_WITNESS_FOUND)
        cases = [
            (witness, witness, CONSISTENT),
            (no, unknown, CONSISTENT),
            (no, witness, CONTRADICTION),
            (unknown, witness, INCONCLUSIVE),
            (witness, no, EXPECTED_ASYMMETRY),
            (witness, unknown, INCONCLUSIVE),
        ]
        for on_a, on_gr, expected in cases:
            with self.subTest(algebra=on_a.status, graded=on_gr.status):
                self.assertEqual(_classify(on_a, on_gr), expected)

    def test_sampled_forms(self):
        vs = VariableSet(['x', 'y', 'z'])
        a = build_algebra(IdealHandle(vs, parse_many(['x^2', '(x+y)^2', '(x+y+z)^2'], vs)))
        result = verify_theorem1(a, LinearForm.variable(3, 2), SearchParams(trials=2), z_samples=1)
        self.assertEqual(len(result['per_z']), 2)
        self.assertTrue(result['passed'])
        self.assertEqual(result['per_z'][0]['SLP']['flag'], CONSISTENT)


if __name__ == '__main__':
    unittest.main()

"""
测试用例: WLP / SLP 检查与 witness 搜索
"""

import os
import sys
import unittest
from fractions import Fraction
from unittest.mock import patch

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from artinian import ZERO_ALGEBRA, LinearForm, build_algebra
from errors import DenominatorDivisibleByP, NonSymmetricHilbert
from groebner import IdealHandle
import lefschetz
from lefschetz import (
    DEFINITELY_NO, NO_WITNESS_FOUND, SLP, WITNESS, WLP, SearchParams, candidate_forms, check_slp, check_wlp,
    find_witness, perturbation_stability, slp_rank_criterion, sperner_bounds, stats, structural_certificate,
    verify_tensor_criterion,
)
from poly_parser import parse, parse_many
from polyring import VariableSet

P = 1048583


def algebra(names, texts):
    vs = VariableSet(names)
    return build_algebra(IdealHandle(vs, parse_many(texts, vs)))


class TestStats(unittest.TestCase):
    """Sperner 数据"""

    def test_boolean_cube(self):
        st = stats(algebra(['x', 'y', 'z'], ['x^2', 'y^2', 'z^2']))
        self.assertEqual((st.sperner, st.cosperner), (3, 5))
        self.assertEqual(st.sperner_vector, (3, 6, 7))
        self.assertIn('note', st.to_dict())

    def test_sperner_vector_needs_symmetry(self):
        st = stats(algebra(['x', 'y'], ['x^2', 'x*y', 'y^2']))
        self.assertIsNone(st.sperner_vector)
        self.assertEqual(st.to_dict()['sperner_vector_reason'], 'hilbert function is not symmetric')

    def test_zero_algebra(self):
        self.assertEqual(stats(ZERO_ALGEBRA).sperner, 0)


class TestDefinitionChecks(unittest.TestCase):
    """定义层面的逐次秩检查"""

    def setUp(self):
        self.a = algebra(['x', 'y', 'z'], ['x^2', 'y^2', 'z^2'])

    def test_sum_of_variables_is_strong_witness(self):
        ones = LinearForm.ones(3)
        self.assertTrue(check_wlp(self.a, ones).is_witness)
        verdict = check_slp(self.a, ones)
        self.assertTrue(verdict.is_witness)
        self.assertTrue(all(row['ok'] for row in verdict.per_degree_report))
        self.assertTrue(slp_rank_criterion(self.a, ones))

    def test_single_variable_fails(self):
        x = LinearForm.variable(3, 0)
        verdict = check_wlp(self.a, x)
        self.assertEqual(verdict.status, NO_WITNESS_FOUND)
        failing = [row for row in verdict.per_degree_report if not row['ok']]
        self.assertEqual(failing[0]['degree'], 1)
        self.assertEqual(failing[0]['rank'], 2)
        self.assertFalse(slp_rank_criterion(self.a, x))

    def test_modular_rank_agrees_for_large_prime(self):
        self.assertTrue(check_slp(self.a, LinearForm.ones(3), P).is_witness)

    def test_zero_algebra_is_trivially_lefschetz(self):
        self.assertTrue(check_wlp(ZERO_ALGEBRA, LinearForm.ones(2)).is_witness)

    def test_verdict_to_dict(self):
        data = check_wlp(self.a, LinearForm.ones(3)).to_dict(self.a.vars)
        self.assertEqual(data['status'], WITNESS)
        self.assertEqual(data['witness'], 'x + y + z')


class TestCertificates(unittest.TestCase):
    """结构性否定证书"""

    def test_asymmetric_hilbert_blocks_slp(self):
        a = algebra(['x', 'y'], ['x^2', 'x*y', 'y^2'])
        cert = structural_certificate(a, SLP)
        self.assertEqual(cert['kind'], 'asymmetric_hilbert')
        self.assertEqual(find_witness(a, SLP).status, DEFINITELY_NO)
        self.assertIsNone(structural_certificate(a, WLP))
        self.assertEqual(find_witness(a, WLP).status, WITNESS)

    def test_low_socle_blocks_both(self):
        a = algebra(['x', 'y', 'z'], ['x^2', 'x*y', 'x*z', 'y^3', 'y^2*z', 'z^3'])
        for prop in (WLP, SLP):
            with self.subTest(prop=prop):
                verdict = find_witness(a, prop)
                self.assertEqual(verdict.status, DEFINITELY_NO)
                self.assertEqual(verdict.certificate['kind'], 'socle_obstruction')
                self.assertEqual(verdict.certificate['degree'], 1)
                self.assertEqual(verdict.certificate['element'], 'x')

    def test_failed_check_carries_certificate(self):
        a = algebra(['x', 'y', 'z'], ['x^2', 'x*y', 'x*z', 'y^3', 'y^2*z', 'z^3'])
        verdict = check_wlp(a, LinearForm.ones(3))
        self.assertEqual(verdict.status, DEFINITELY_NO)
        row = verdict.per_degree_report[1]
        self.assertEqual((row['source_dim'], row['target_dim'], row['rank']), (3, 3, 2))


class TestSearch(unittest.TestCase):
    """witness 搜索"""

    def test_candidate_order_is_deterministic(self):
        params = SearchParams(trials=3, seed=7, coeff_bound=50)
        first = list(candidate_forms(2, params))
        self.assertEqual(first[:3], [LinearForm((1, 0)), LinearForm((0, 1)), LinearForm((1, 1))])
        self.assertEqual(len(first), 6)
        self.assertEqual(first, list(candidate_forms(2, params)))
        self.assertTrue(all(1 <= c <= 50 for g in first[3:] for c in g.coefficients))

    def test_witness_found_after_variables(self):
        a = algebra(['x', 'y', 'z'], ['x^2', 'y^2', 'z^2'])
        verdict = find_witness(a, SLP, SearchParams(trials=2))
        self.assertTrue(verdict.is_witness)
        self.assertEqual(verdict.candidates_tried, 4)

    def test_modular_witness_is_reverified(self):
        a = algebra(['x', 'y', 'z'], ['x^2', 'y^2', 'z^2'])
        verdict = find_witness(a, WLP, SearchParams(trials=2, modulus=P))
        self.assertTrue(verdict.is_witness)
        self.assertEqual(verdict.modular, P)

    def test_zero_algebra_verdict_is_vacuous(self):
        verdict = find_witness(ZERO_ALGEBRA, SLP)
        self.assertTrue(verdict.is_witness)
        self.assertIsNone(verdict.witness)
        data = verdict.to_dict()
        self.assertTrue(data['vacuous'])
        self.assertNotIn('witness', data)
        self.assertNotIn('vacuous', find_witness(algebra(['x'], ['x^2']), SLP).to_dict())

    def test_candidate_with_bad_denominator_is_skipped(self):
        a = algebra(['x', 'y', 'z'], ['x^2', 'y^2', 'z^2'])
        real_check = lefschetz.check_property
        calls = []

        def flaky(alg, g, prop, modulus=None):
            calls.append(modulus)
            if modulus is not None and len(calls) == 1:
                raise DenominatorDivisibleByP("denominator 3 vanishes mod 3", modulus=3)
            return real_check(alg, g, prop, modulus)

        with patch('lefschetz.check_property', side_effect=flaky):
            verdict = find_witness(a, WLP, SearchParams(trials=2, modulus=P))
        self.assertTrue(verdict.is_witness)
        self.assertEqual(verdict.witness, LinearForm.ones(3))
        self.assertEqual(verdict.candidates_tried, 4)

    def test_trials_must_be_positive(self):
        with self.assertRaises(ValueError):
            find_witness(algebra(['x'], ['x^2']), WLP, SearchParams(trials=0))


class TestCriteria(unittest.TestCase):
    """Sperner 不等式、扰动稳定性与张量判据"""

    def setUp(self):
        self.a = algebra(['x', 'y'], ['x^2', 'y^2'])

    def test_sperner_bounds(self):
        result = sperner_bounds(self.a, parse('x + y', self.a.vars))
        self.assertTrue(result['checked'])
        self.assertEqual((result['rank'], result['cosperner']), (2, 2))
        result = sperner_bounds(self.a, parse('x*y', self.a.vars))
        self.assertEqual((result['rank'], result['sp_k']), (1, 3))

    def test_perturbation_of_witness(self):
        self.assertEqual(perturbation_stability(self.a, LinearForm.ones(2), WLP, samples=5), Fraction(1))

    def test_tensor_criterion(self):
        result = verify_tensor_criterion(self.a, 2, SearchParams(trials=2))
        self.assertEqual(result['slp'], WITNESS)
        self.assertTrue(result['consistent'])
        self.assertEqual([row['hilbert'] for row in result['per_alpha']], [[1, 2, 1], [1, 3, 3, 1]])

    def test_tensor_criterion_without_slp(self):
        a = algebra(['x', 'y', 'z'], ['x^2', 'x*y', 'x*z', 'y^3', 'y^2*z', 'z^3'])
        result = verify_tensor_criterion(a, 1, SearchParams(trials=2))
        self.assertEqual(result['slp'], DEFINITELY_NO)
        self.assertEqual(result['per_alpha'][0]['wlp'], DEFINITELY_NO)
        self.assertTrue(result['consistent'])
        self.assertFalse(result['inconclusive'])

    def test_tensor_criterion_needs_symmetry(self):
        with self.assertRaises(NonSymmetricHilbert):
            verify_tensor_criterion(algebra(['x', 'y'], ['x^2', 'x*y', 'y^2']), 2)


if __name__ == '__main__':
    unittest.main()

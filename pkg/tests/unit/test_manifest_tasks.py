"""
测试用例: 清单、任务执行与报告发布
"""

import json
import os
import sys
import tempfile
import unittest
from fractions import Fraction
from unittest.mock import patch

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from artinian import HilbertSeries, LinearForm
from errors import ManifestError, PolynomialSyntaxError, UnknownVariable
from lefschetz import SearchParams
from manifest import Manifest, TaskSpec
from poly_parser import parse
from polyring import VariableSet
from report_publisher import ReportPublisher, TimingProbe, build_report, to_json
from tasks import TASKS, TaskContext, TaskRunner, default_verify_tasks, results_passed

REMARK = {'ring': ['x', 'y', 'z'], 'ideal': ['x^2', '(x+y)^2', '(x+y+z)^2'], 'z': 'z'}


class TestManifest(unittest.TestCase):
    """清单解析"""

    def test_from_dict(self):
        data = dict(REMARK, tasks=['hilbert', {'name': 'tensor', 'alpha_max': 2}], seed=3)
        manifest = Manifest.from_dict(data)
        self.assertEqual(manifest.variables.names, ('x', 'y', 'z'))
        self.assertEqual(manifest.z, LinearForm.variable(3, 2))
        self.assertEqual(manifest.tasks, [TaskSpec('hilbert'), TaskSpec('tensor', {'alpha_max': 2})])
        self.assertEqual(manifest.seed, 3)
        self.assertIsNone(manifest.trials)
        self.assertEqual(manifest.echo()['tasks'][1], {'name': 'tensor', 'alpha_max': 2})

    def test_invalid_manifests(self):
        cases = [
            [],
            {'ring': []},
            {'ring': ['x'], 'ideal': 'x^2'},
            {'ring': ['x'], 'ideal': ['x^2'], 'extra': 1},
            {'ring': ['x'], 'ideal': ['x^2'], 'tasks': [42]},
            {'ring': ['x'], 'ideal': ['x^2'], 'seed': 'zero'},
            {'ring': ['x', 'y'], 'ideal': ['x^2'], 'z': 'x^2'},
        ]
        for data in cases:
            with self.subTest(data=data):
                with self.assertRaises(ManifestError):
                    Manifest.from_dict(data)

    def test_parse_errors_propagate(self):
        with self.assertRaises(PolynomialSyntaxError):
            Manifest.from_dict({'ring': ['x'], 'ideal': ['x^']})
        with self.assertRaises(UnknownVariable):
            Manifest.from_dict({'ring': ['x'], 'ideal': ['y^2']})

    def test_from_file(self):
        with tempfile.NamedTemporaryFile('w', suffix='.json', delete=False) as f:
            json.dump(REMARK, f)
        try:
            manifest = Manifest.from_file(f.name)
            self.assertEqual(manifest.z_text, 'z')
            manifest.set_z('x + y')
            self.assertEqual(manifest.echo()['z'], 'x + y')
        finally:
            os.unlink(f.name)
        with self.assertRaises(ManifestError):
            Manifest.from_file(f.name)


class TestTasks(unittest.TestCase):
    """任务注册与执行"""

    def setUp(self):
        self.context = TaskContext(Manifest.from_dict(REMARK), SearchParams(trials=2))

    def test_algebra_is_built_once(self):
        self.assertIs(self.context.algebra, self.context.algebra)

    def test_hilbert_and_gb(self):
        results = TaskRunner(self.context).run([TaskSpec('hilbert'), TaskSpec('gb')])
        hilbert, gb = results[0]['result'], results[1]['result']
        self.assertEqual(hilbert['hilbert'], [1, 3, 3, 1])
        self.assertTrue(hilbert['gorenstein'])
        self.assertTrue(gb['complete_intersection'])
        self.assertEqual(gb['minimal_generators'], [[2, 3]])

    def test_parallel_results_keep_declaration_order(self):
        names = ['socle', 'hilbert', 'stats', 'jordan', 'inprime']
        results = TaskRunner(self.context, workers=3).run([TaskSpec(n) for n in names])
        self.assertEqual([r['task'] for r in results], names)
        self.assertEqual(results[3]['result']['blocks'], [[3, 2], [1, 2]])

    def test_unknown_task(self):
        with self.assertRaises(ManifestError):
            TaskRunner(self.context).run([TaskSpec('hilbert'), TaskSpec('nope')])

    def test_missing_z(self):
        context = TaskContext(Manifest.from_dict({'ring': ['x'], 'ideal': ['x^2']}), SearchParams())
        with self.assertRaises(ManifestError):
            TaskRunner(context).run([TaskSpec('jordan')])

    def test_failure_raised_in_declaration_order(self):
        def boom(ctx, spec):
            raise ManifestError(f"boom {spec.name}")
        with patch.dict(TASKS, {'hilbert': boom, 'stats': boom}):
            with self.assertRaises(ManifestError) as ctx:
                TaskRunner(self.context, workers=2).run([TaskSpec('stats'), TaskSpec('hilbert')])
        self.assertEqual(ctx.exception.message, 'boom stats')

    def test_apolar_task(self):
        spec = TaskSpec('apolar', {'form': 'x^3 + y^3', 'ring': ['x', 'y']})
        result = TaskRunner(self.context).run([spec])[0]['result']
        self.assertEqual(result['hilbert'], [1, 2, 2, 1])

    def test_default_bundle_skips_gorenstein_tasks(self):
        self.assertIn(TaskSpec('prop46'), default_verify_tasks(self.context))
        manifest = Manifest.from_dict({'ring': ['x', 'y'], 'ideal': ['x^2', 'x*y', 'y^2'], 'z': 'x'})
        bundle = default_verify_tasks(TaskContext(manifest, SearchParams()))
        self.assertNotIn(TaskSpec('prop46'), bundle)
        self.assertIn(TaskSpec('hilbert_triple'), bundle)

    def test_results_passed(self):
        self.assertTrue(results_passed([{'result': {'hilbert': [1]}}, {'result': {'passed': True}}]))
        self.assertFalse(results_passed([{'result': {'passed': True}}, {'result': {'passed': False}}]))


class TestReportPublisher(unittest.TestCase):
    """报告序列化与发布"""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.temp_dir.name, 'report.json')

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_json_of_exact_values(self):
        vs = VariableSet(['x', 'y'])
        text = to_json({'c': Fraction(1, 2), 'f': parse('x + 1/2*y', vs),
                        'h': HilbertSeries.from_vector([1, 2, 1]), 'g': LinearForm((1, Fraction(-2, 3)))})
        data = json.loads(text)
        self.assertEqual(data, {'c': '1/2', 'f': 'x + 1/2*y', 'h': '1 + 2q + q^2', 'g': ['1', '-2/3']})

    def test_atomic_write(self):
        report = build_report({'ring': ['x']}, [], True)
        publisher = ReportPublisher({'type': 'file', 'file_path': self.path, 'atomic_write': True})
        self.assertTrue(publisher.publish(report))
        with open(self.path, 'r', encoding='utf-8') as f:
            saved = json.load(f)
        self.assertEqual(saved['passed'], True)
        self.assertNotIn('timing', saved)
        self.assertFalse(os.path.exists(self.path + '.tmp'))

    def test_direct_write_failure_returns_false(self):
        missing = os.path.join(self.temp_dir.name, 'no', 'such', 'dir.json')
        publisher = ReportPublisher({'type': 'file', 'file_path': missing, 'atomic_write': False})
        self.assertFalse(publisher.publish(build_report({}, [], True)))

    def test_unknown_output_type(self):
        self.assertFalse(ReportPublisher({'type': 'mqtt'}).publish(build_report({}, [], True)))

    def test_timing_probe(self):
        data = TimingProbe().to_dict()
        self.assertGreaterEqual(data['wall_seconds'], 0)


if __name__ == '__main__':
    unittest.main()

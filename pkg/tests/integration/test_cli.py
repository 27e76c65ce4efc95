"""
测试用例: 命令行与退出码
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from unittest.mock import patch

ROOT = os.path.join(os.path.dirname(__file__), '..', '..')
sys.path.insert(0, os.path.join(ROOT, 'src'))

import tasks
from cli import build_parser, run

MAIN = os.path.join(ROOT, 'main.py')
REMARK = {'ring': ['x', 'y', 'z'], 'ideal': ['x^2', '(x+y)^2', '(x+y+z)^2'], 'z': 'z'}


def run_main(*argv):
    env = dict(os.environ, LEFSCHETZ_LOG_LEVEL='ERROR')
    return subprocess.run([sys.executable, MAIN, *argv], capture_output=True, text=True, env=env, timeout=600)


class TestCommandLine(unittest.TestCase):
    """通过子进程调用 main.py"""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.temp_dir.cleanup()

    def manifest(self, data, name='manifest.json'):
        path = os.path.join(self.temp_dir.name, name)
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(data, f)
        return path

    def test_hilbert(self):
        proc = run_main('hilbert', '--input', self.manifest(REMARK))
        self.assertEqual(proc.returncode, 0, proc.stderr)
        report = json.loads(proc.stdout)
        self.assertTrue(report['passed'])
        self.assertEqual(report['results'][0]['result']['hilbert'], [1, 3, 3, 1])
        self.assertEqual(report['manifest']['z'], 'z')

    def test_reports_are_reproducible(self):
        path = self.manifest(dict(REMARK, tasks=['gb', 'slp', 'csm'], seed=5, trials=3))
        first = run_main('verify', '--input', path)
        second = run_main('verify', '--input', path)
        self.assertEqual(first.returncode, 0, first.stderr)
        self.assertEqual(first.stdout, second.stdout)
        results = json.loads(first.stdout)['results']
        self.assertCountEqual(results[0]['result']['leading_monomials'],
                              ['x^2', 'x*y', 'x*z', 'y^3', 'y^2*z', 'z^3'])
        self.assertEqual(results[1]['result']['verdict']['status'], 'witness')

    def test_z_override_and_output_file(self):
        out = os.path.join(self.temp_dir.name, 'report.json')
        proc = run_main('jordan', '--input', self.manifest(REMARK), '--z', 'x', '--output', out)
        self.assertEqual(proc.returncode, 0, proc.stderr)
        self.assertEqual(proc.stdout, '')
        with open(out, 'r', encoding='utf-8') as f:
            report = json.load(f)
        self.assertEqual(report['manifest']['z'], 'x')

    def test_gallery_list(self):
        proc = run_main('gallery', '--list')
        self.assertEqual(proc.returncode, 0, proc.stderr)
        names = [entry['name'] for entry in json.loads(proc.stdout)['results'][0]['result']]
        self.assertIn('remark-3.9', names)

    def test_input_errors_exit_2(self):
        cases = [
            ('gallery', 'example-0.0'),
            ('hilbert', '--input', self.manifest({'ring': ['x'], 'ideal': ['x^^2']}, 'syntax.json')),
            ('hilbert', '--input', self.manifest({'ring': ['x'], 'ideal': ['y^2']}, 'unknown.json')),
            ('hilbert', '--input', os.path.join(self.temp_dir.name, 'missing.json')),
            ('hilbert',),
        ]
        for argv in cases:
            with self.subTest(argv=argv[:2]):
                proc = run_main(*argv)
                self.assertEqual(proc.returncode, 2, proc.stderr)

    def test_error_report_on_stdout(self):
        proc = run_main('gallery', 'example-0.0')
        self.assertEqual(json.loads(proc.stdout)['error']['error'], 'UnknownGalleryName')

    def test_not_artinian_exit_3(self):
        proc = run_main('hilbert', '--input', self.manifest({'ring': ['x', 'y'], 'ideal': ['x^2']}))
        self.assertEqual(proc.returncode, 3, proc.stderr)
        self.assertEqual(json.loads(proc.stdout)['error']['variable'], 'y')

    def test_version(self):
        proc = run_main('--version')
        self.assertEqual(proc.returncode, 0)
        self.assertIn('1.0.0', proc.stdout)


class TestRunInProcess(unittest.TestCase):
    """直接调用 cli.run"""

    def setUp(self):
        self.temp_file = tempfile.NamedTemporaryFile('w', suffix='.json', delete=False)
        json.dump(dict(REMARK, tasks=['hilbert', 'stats']), self.temp_file)
        self.temp_file.close()

    def tearDown(self):
        os.unlink(self.temp_file.name)

    def test_parser_commands(self):
        args = build_parser().parse_args(['slp', '-i', 'm.json', '--seed', '7', '--mod', '1048583'])
        self.assertEqual((args.command, args.input, args.seed, args.mod), ('slp', 'm.json', 7, 1048583))

    @patch('sys.stdout')
    def test_verify_runs_declared_tasks(self, stdout):
        self.assertEqual(run(['verify', '-i', self.temp_file.name, '--log-level', 'ERROR']), 0)
        written = ''.join(call.args[0] for call in stdout.write.call_args_list)
        report = json.loads(written)
        self.assertEqual([r['task'] for r in report['results']], ['hilbert', 'stats'])

    @patch('sys.stdout')
    def test_failed_verification_exit_1(self, stdout):
        with patch.dict(tasks.TASKS, {'stats': lambda ctx, spec: {'passed': False}}):
            code = run(['verify', '-i', self.temp_file.name, '--log-level', 'ERROR'])
        self.assertEqual(code, 1)

    @patch('sys.stdout')
    def test_bad_search_parameters_exit_2(self, stdout):
        self.assertEqual(run(['hilbert', '-i', self.temp_file.name, '--trials', '0', '--log-level', 'ERROR']), 2)

    @patch('sys.stdout')
    def test_invalid_config_exit_2(self, stdout):
        self.assertEqual(run(['hilbert', '-i', self.temp_file.name, '--workers', '0']), 2)


if __name__ == '__main__':
    unittest.main()

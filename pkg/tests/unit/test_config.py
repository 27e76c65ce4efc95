"""
测试用例: 配置、异常与日志
"""

import json
import logging
import os
import sys
import tempfile
import unittest
from unittest.mock import patch

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from config import Config, DEFAULT_MOD_PRIMES
from errors import (
    HypothesisFails, InputError, InternalConsistencyError, ManifestError, NotArtinian, PolynomialSyntaxError,
    StructureError, ToolkitError, VerificationFailed,
)
from logger import ROOT_LOGGER_NAME, get_logger, set_log_level, setup_logging_from_config


class TestConfig(unittest.TestCase):
    """测试配置管理"""

    def setUp(self):
        self.temp_file = tempfile.NamedTemporaryFile('w', suffix='.json', delete=False)
        self.temp_file.close()

    def tearDown(self):
        os.unlink(self.temp_file.name)

    def _write(self, data):
        with open(self.temp_file.name, 'w', encoding='utf-8') as f:
            json.dump(data, f)

    def test_default_is_valid(self):
        config = Config.default()
        self.assertTrue(config.validate())
        self.assertEqual(config.search['trials'], 8)
        self.assertEqual(config.linalg['mod_primes'], DEFAULT_MOD_PRIMES)
        self.assertEqual(config.gallery['example_6_8'], {'n': 3, 'r': 3, 's': 1})

    def test_file_merges_over_defaults(self):
        self._write({'toolkit': {'search': {'trials': 3}, 'runner': {'workers': 4}}})
        config = Config.from_file(self.temp_file.name)
        self.assertEqual(config.search['trials'], 3)
        self.assertEqual(config.search['coeff_bound'], 1000)
        self.assertEqual(config.runner['workers'], 4)
        self.assertEqual(config.output['type'], 'stdout')

    def test_file_without_toolkit_section(self):
        self._write({'logging': {'level': 'DEBUG'}})
        self.assertEqual(Config.from_file(self.temp_file.name).logging['level'], 'DEBUG')

    def test_broken_file_raises(self):
        with open(self.temp_file.name, 'w') as f:
            f.write('{not json')
        with self.assertRaises(ValueError):
            Config.from_file(self.temp_file.name)

    def test_from_env(self):
        env = {'LEFSCHETZ_SEED': '42', 'LEFSCHETZ_TRIALS': '5', 'LEFSCHETZ_MODULUS': '1048583',
               'LEFSCHETZ_OUTPUT_TYPE': 'file', 'LEFSCHETZ_WORKERS': '3'}
        with patch.dict(os.environ, env, clear=False):
            config = Config.from_env()
        self.assertEqual((config.search['seed'], config.search['trials']), (42, 5))
        self.assertEqual(config.linalg['modulus'], 1048583)
        self.assertEqual(config.output['type'], 'file')
        self.assertEqual(config.runner['workers'], 3)
        self.assertTrue(config.validate())

    def test_env_config_file_takes_precedence(self):
        self._write({'search': {'seed': 9}})
        with patch.dict(os.environ, {'LEFSCHETZ_CONFIG_FILE': self.temp_file.name, 'LEFSCHETZ_SEED': '1'}):
            self.assertEqual(Config.from_env().search['seed'], 9)

    def test_validation_failures(self):
        cases = [
            ('search', 'trials', 0),
            ('search', 'coeff_bound', 0),
            ('linalg', 'modulus', 1048581),
            ('output', 'type', 'mqtt'),
            ('runner', 'workers', 0),
        ]
        for section, key, value in cases:
            with self.subTest(section=section, key=key):
                config = Config.default()
                config[section][key] = value
                self.assertFalse(config.validate())

    def test_copy_is_deep(self):
        config = Config.default()
        clone = config.copy()
        clone['search']['trials'] = 99
        self.assertEqual(config.search['trials'], 8)
        self.assertIn('gallery', clone)
        self.assertIsNone(clone.get('missing'))


class TestErrors(unittest.TestCase):
    """异常层次与退出码"""

    def test_exit_codes(self):
        cases = [
            (PolynomialSyntaxError('x +', 3, 'a term'), 2),
            (ManifestError('bad manifest'), 2),
            (NotArtinian('y'), 3),
            (HypothesisFails(2, 'not a complete intersection'), 3),
            (VerificationFailed('check failed'), 1),
            (InternalConsistencyError('rank mismatch'), 1),
        ]
        for error, code in cases:
            with self.subTest(error=type(error).__name__):
                self.assertIsInstance(error, ToolkitError)
                self.assertEqual(error.exit_code, code)

    def test_hierarchy(self):
        self.assertTrue(issubclass(PolynomialSyntaxError, InputError))
        self.assertTrue(issubclass(NotArtinian, StructureError))

    def test_to_dict_stringifies_details(self):
        data = ManifestError('bad', path='m.json', value=[1, 2]).to_dict()
        self.assertEqual(data, {'error': 'ManifestError', 'message': 'bad', 'path': 'm.json', 'value': '[1, 2]'})
        self.assertEqual(NotArtinian('y').to_dict()['variable'], 'y')


class TestLogger(unittest.TestCase):
    """日志系统"""

    def tearDown(self):
        setup_logging_from_config({'logging': {'level': 'WARNING'}})

    def test_names_are_prefixed(self):
        self.assertEqual(get_logger('groebner').name, f'{ROOT_LOGGER_NAME}.groebner')
        self.assertEqual(get_logger('src.cli').name, f'{ROOT_LOGGER_NAME}.cli')
        self.assertEqual(get_logger(ROOT_LOGGER_NAME).name, ROOT_LOGGER_NAME)

    def test_setup_from_config_sets_console_level(self):
        instance = setup_logging_from_config({'logging': {'level': 'ERROR'}})
        self.assertEqual(instance.console_handler.level, logging.ERROR)
        set_log_level('DEBUG')
        self.assertEqual(instance.console_handler.level, logging.DEBUG)

    def test_file_handlers(self):
        with tempfile.TemporaryDirectory() as log_dir:
            setup_logging_from_config({'logging': {'level': 'INFO', 'file': os.path.join(log_dir, 'run.log')}})
            get_logger('test').warning('written to file')
            setup_logging_from_config({'logging': {'level': 'WARNING'}})
            names = os.listdir(log_dir)
        self.assertTrue(any(n.startswith('lefschetz_errors_') for n in names))


if __name__ == '__main__':
    unittest.main()

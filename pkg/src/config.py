"""
简化的配置管理
"""

import copy as copy_module
import json
import os
from typing import Dict, Any, List

from logger import get_logger

TOOL_NAME = "lefschetz-toolkit"
TOOL_VERSION = "1.0.0"

# 三个 > 2^20 的素数，用于 --mod 启发式秩计算的交叉校验
DEFAULT_MOD_PRIMES = [1048583, 1048589, 1048601]


class Config:
    """简化的配置管理器"""

    def __init__(self, config_dict: Dict[str, Any]):
        self.data = config_dict
        self.logger = get_logger(__name__)

    @classmethod
    def from_file(cls, file_path: str) -> 'Config':
        """从文件加载配置"""
        logger = get_logger("config")
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                config_data = json.load(f)

            logger.info(f"成功加载配置文件: {file_path}")

            # 如果配置文件有toolkit节，使用该节；否则使用整个配置
            if 'toolkit' in config_data:
                config_data = config_data['toolkit']
            merged = cls.default().data
            for section, values in config_data.items():
                if isinstance(values, dict) and isinstance(merged.get(section), dict):
                    merged[section].update(values)
                else:
                    merged[section] = values
            return cls(merged)

        except Exception as e:
            logger.error(f"Failed to load config from {file_path}: {e}")
            raise

    @classmethod
    def from_env(cls, prefix: str = 'LEFSCHETZ_') -> 'Config':
        """从环境变量加载配置"""

        # 首先尝试从环境变量获取配置文件路径
        config_file = os.getenv(f'{prefix}CONFIG_FILE')
        if config_file and os.path.exists(config_file):
            return cls.from_file(config_file)

        modulus = os.getenv(f'{prefix}MODULUS')
        config_data = cls.default().data
        config_data['search'] = {
            'seed': int(os.getenv(f'{prefix}SEED', '0')),
            'trials': int(os.getenv(f'{prefix}TRIALS', '8')),
            'coeff_bound': int(os.getenv(f'{prefix}COEFF_BOUND', '1000'))
        }
        config_data['linalg']['modulus'] = int(modulus) if modulus else None
        config_data['output'].update({
            'type': os.getenv(f'{prefix}OUTPUT_TYPE', 'stdout'),
            'file_path': os.getenv(f'{prefix}OUTPUT_FILE', './lefschetz_report.json'),
            'atomic_write': os.getenv(f'{prefix}ATOMIC_WRITE', 'true').lower() == 'true',
            'include_timing': os.getenv(f'{prefix}INCLUDE_TIMING', 'false').lower() == 'true'
        })
        config_data['logging'] = {
            'level': os.getenv(f'{prefix}LOG_LEVEL', 'INFO'),
            'file': os.getenv(f'{prefix}LOG_FILE')
        }
        config_data['runner'] = {
            'workers': int(os.getenv(f'{prefix}WORKERS', '1'))
        }
        return cls(config_data)

    @classmethod
    def default(cls) -> 'Config':
        """默认配置"""
        config_data = {
            'search': {
                'seed': 0,
                'trials': 8,
                'coeff_bound': 1000
            },
            'linalg': {
                'modulus': None,
                'mod_primes': list(DEFAULT_MOD_PRIMES)
            },
            'output': {
                'type': 'stdout',
                'file_path': './lefschetz_report.json',
                'atomic_write': True,
                'indent': 2,
                'include_timing': False
            },
            'logging': {
                'level': 'INFO',
                'file': None
            },
            'runner': {
                'workers': 1
            },
            'gallery': {
                'example_6_2': {'n': 3, 'd3': 3},
                'example_6_4': {'n': 3, 'r': 2, 's': 2},
                'example_6_8': {'n': 3, 'r': 3, 's': 1},
                'example_6_9_a': 2,
                'module_trials': 16
            }
        }
        return cls(config_data)

    @property
    def search(self) -> Dict[str, Any]:
        """随机搜索配置"""
        return self.data.get('search', {})

    @property
    def linalg(self) -> Dict[str, Any]:
        """线性代数配置"""
        return self.data.get('linalg', {})

    @property
    def output(self) -> Dict[str, Any]:
        """输出配置"""
        return self.data.get('output', {})

    @property
    def logging(self) -> Dict[str, Any]:
        """日志配置"""
        return self.data.get('logging', {})

    @property
    def runner(self) -> Dict[str, Any]:
        return self.data.get('runner', {})

    @property
    def gallery(self) -> Dict[str, Any]:
        """示例库参数"""
        return self.data.get('gallery', {})

    def validate(self) -> bool:
        """验证配置"""
        errors: List[str] = []

        search = self.search
        if int(search.get('trials', 0)) < 1:
            errors.append("search.trials must be >= 1")
        if int(search.get('coeff_bound', 0)) < 1:
            errors.append("search.coeff_bound must be >= 1")

        modulus = self.linalg.get('modulus')
        if modulus is not None:
            from exact_linalg import is_probable_prime
            if not is_probable_prime(int(modulus)):
                errors.append(f"linalg.modulus {modulus} is not prime")

        output = self.output
        if output.get('type', 'stdout') not in ('stdout', 'file'):
            errors.append(f"Unknown output type: {output.get('type')}")
        if output.get('type') == 'file' and not output.get('file_path'):
            errors.append("output.file_path is required for file output")

        if int(self.runner.get('workers', 1)) < 1:
            errors.append("runner.workers must be >= 1")

        if errors:
            for error in errors:
                self.logger.error(f"Config validation error: {error}")
            return False

        return True

    def copy(self) -> 'Config':
        """复制配置对象"""
        return Config(copy_module.deepcopy(self.data))

    def __getitem__(self, key: str) -> Any:
        """支持字典式访问"""
        return self.data[key]

    def __setitem__(self, key: str, value: Any) -> None:
        """支持字典式设置"""
        self.data[key] = value

    def __contains__(self, key: str) -> bool:
        """支持 in 操作符"""
        return key in self.data

    def get(self, key: str, default: Any = None) -> Any:
        """类似字典的get方法"""
        return self.data.get(key, default)

"""
报告发布器

把 JSON 报告写到 stdout 或文件；文件输出走临时文件 + fsync + rename 的原子写
"""

import json
import os
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional

from artinian import HilbertSeries, LinearForm
from config import TOOL_NAME, TOOL_VERSION
from exact_linalg import format_scalar
from logger import get_logger
from polyring import Polynomial

try:
    import psutil
except ImportError:  # 计时探针可选
    psutil = None


def _json_default(obj):
    if isinstance(obj, Fraction):
        return format_scalar(obj)
    if isinstance(obj, (Polynomial, HilbertSeries)):
        return str(obj)
    if isinstance(obj, LinearForm):
        return [format_scalar(c) for c in obj.coefficients]
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def to_json(data: Dict[str, Any], indent: Optional[int] = 2) -> str:
    return json.dumps(data, indent=indent, ensure_ascii=False, default=_json_default)


class TimingProbe:
    """墙钟时间与常驻内存峰值（psutil 可用时）"""

    def __init__(self):
        self.started = time.perf_counter()
        self._process = psutil.Process() if psutil is not None else None
        self.peak_rss = self._rss()

    def _rss(self) -> Optional[int]:
        if self._process is None:
            return None
        return self._process.memory_info().rss

    def sample(self):
        rss = self._rss()
        if rss is not None and (self.peak_rss is None or rss > self.peak_rss):
            self.peak_rss = rss

    def to_dict(self) -> Dict[str, Any]:
        self.sample()
        data: Dict[str, Any] = {'wall_seconds': round(time.perf_counter() - self.started, 3)}
        if self.peak_rss is not None:
            data['rss_mb'] = round(self.peak_rss / (1024 * 1024), 1)
        return data


def build_report(manifest: Dict[str, Any], results: List[Dict[str, Any]], passed: bool,
                 timing: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    report: Dict[str, Any] = {
        'tool': TOOL_NAME,
        'version': TOOL_VERSION,
        'manifest': manifest,
        'results': results,
        'passed': passed,
    }
    if timing is not None:
        report['timing'] = timing
    return report


class ReportPublisher:
    """按 output 配置节发布报告"""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self.logger = get_logger(__name__)
        self.output_type = config.get('type', 'stdout')
        self.indent = config.get('indent', 2)

    def publish(self, report: Dict[str, Any]) -> bool:
        text = to_json(report, self.indent)
        if self.output_type == 'stdout':
            sys.stdout.write(text + '\n')
            sys.stdout.flush()
            return True
        if self.output_type == 'file':
            file_path = self.config.get('file_path', './lefschetz_report.json')
            self.logger.info(f"📄 写出报告 {file_path}")
            if self.config.get('atomic_write', True):
                return self._atomic_write(file_path, text)
            return self._direct_write(file_path, text)
        self.logger.warning(f"Unknown output type: {self.output_type}")
        return False

    def _atomic_write(self, file_path: str, data: str) -> bool:
        """原子写入文件"""
        temp_path = f"{file_path}.tmp"
        try:
            with open(temp_path, 'w', encoding='utf-8') as f:
                f.write(data)
                f.flush()
                os.fsync(f.fileno())
            os.replace(temp_path, file_path)
            return True
        except OSError:
            try:
                os.unlink(temp_path)
            except OSError:
                pass
            raise

    def _direct_write(self, file_path: str, data: str) -> bool:
        try:
            with open(file_path, 'w', encoding='utf-8') as f:
                f.write(data)
            return True
        except OSError as e:
            self.logger.error(f"Direct write failed: {e}")
            return False

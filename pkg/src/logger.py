#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
统一的日志管理器
Lefschetz Toolkit 项目的日志系统
"""

import logging
import os
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Dict


ROOT_LOGGER_NAME = 'lefschetz_toolkit'

_LEVEL_MAP = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL
}


class ToolkitLogger:
    """Lefschetz Toolkit 统一日志管理器"""

    _instance = None
    _initialized = False

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super(ToolkitLogger, cls).__new__(cls)
        return cls._instance

    def __init__(self, log_dir: Optional[str] = None, console_level: str = 'INFO'):
        if not self._initialized:
            self._setup_logging(log_dir, console_level)
            ToolkitLogger._initialized = True

    def _setup_logging(self, log_dir: Optional[str], console_level: str):
        """设置日志系统"""
        self.log_format = logging.Formatter(
            fmt='%(asctime)s [%(levelname)s] [%(name)s] [%(filename)s:%(lineno)d] %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        # 控制台输出格式（带图标）
        self.console_format = logging.Formatter(
            fmt='%(asctime)s [%(levelname_icon)s] [%(name)s] [%(funcName)s:%(lineno)d] %(message)s',
            datefmt='%H:%M:%S'
        )

        self.root_logger = logging.getLogger(ROOT_LOGGER_NAME)
        self.root_logger.setLevel(logging.DEBUG)
        self.root_logger.propagate = False
        self.root_logger.handlers.clear()

        # 控制台handler 写 stderr，stdout 留给 JSON 报告
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(_LEVEL_MAP.get(console_level.upper(), logging.INFO))
        console_handler.addFilter(self._add_level_icons)
        console_handler.setFormatter(self.console_format)
        self.console_handler = console_handler
        self.root_logger.addHandler(console_handler)

        if log_dir:
            self._add_file_handlers(Path(log_dir))

    def _add_file_handlers(self, log_dir: Path):
        """添加按天滚动命名的文件handler"""
        try:
            if log_dir.exists() and log_dir.is_file():
                print(f"警告: 发现文件 {log_dir}，将重命名为 {log_dir}.bak", file=sys.stderr)
                log_dir.rename(log_dir.with_suffix('.bak'))
            log_dir.mkdir(parents=True, exist_ok=True)
        except Exception as e:
            print(f"警告: 无法创建日志目录 ({e})，使用当前目录保存日志", file=sys.stderr)
            log_dir = Path(".")

        today = datetime.now().strftime("%Y%m%d")
        file_handler = logging.FileHandler(log_dir / f"lefschetz_{today}.log", encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(self.log_format)
        self.root_logger.addHandler(file_handler)

        error_handler = logging.FileHandler(log_dir / f"lefschetz_errors_{today}.log", encoding='utf-8')
        error_handler.setLevel(logging.WARNING)
        error_handler.setFormatter(self.log_format)
        self.root_logger.addHandler(error_handler)

    def _add_level_icons(self, record):
        """为日志级别添加图标"""
        icons = {
            'DEBUG': '🔍',
            'INFO': '🧮',
            'WARNING': '⚠️',
            'ERROR': '❌',
            'CRITICAL': '💥'
        }
        record.levelname_icon = f"{icons.get(record.levelname, '📝')} {record.levelname}"
        return True

    def get_logger(self, name: str) -> logging.Logger:
        """获取指定模块的logger"""
        if not name.startswith(ROOT_LOGGER_NAME):
            if name.startswith('src.'):
                name = name[4:]
            name = f'{ROOT_LOGGER_NAME}.{name}'
        return logging.getLogger(name)

    def set_level(self, level: str):
        """设置日志级别"""
        if level.upper() in _LEVEL_MAP:
            self.root_logger.setLevel(_LEVEL_MAP[level.upper()])
            self.console_handler.setLevel(_LEVEL_MAP[level.upper()])

    def set_console_level(self, level: str):
        """单独设置控制台日志级别"""
        if level.upper() in _LEVEL_MAP:
            self.console_handler.setLevel(_LEVEL_MAP[level.upper()])


# 全局实例
_toolkit_logger_instance = None


def get_logger(name: Optional[str] = None, log_dir: Optional[str] = None) -> logging.Logger:
    """
    获取 Lefschetz Toolkit 项目的logger

    Args:
        name: 模块名称，如果为None则使用调用者的模块名
        log_dir: 日志目录路径，仅在首次调用时有效

    Example:
        from logger import get_logger
        logger = get_logger(__name__)
        logger.info("Groebner basis finished")
    """
    global _toolkit_logger_instance

    if _toolkit_logger_instance is None:
        _toolkit_logger_instance = ToolkitLogger(log_dir)

    if name is None:
        import inspect
        frame = inspect.currentframe().f_back
        name = frame.f_globals.get('__name__', 'unknown')

    return _toolkit_logger_instance.get_logger(name)


def set_log_level(level: str):
    """设置全局日志级别"""
    global _toolkit_logger_instance
    if _toolkit_logger_instance is None:
        _toolkit_logger_instance = ToolkitLogger()
    _toolkit_logger_instance.set_level(level)


def set_console_log_level(level: str):
    """设置控制台日志级别"""
    global _toolkit_logger_instance
    if _toolkit_logger_instance is None:
        _toolkit_logger_instance = ToolkitLogger()
    _toolkit_logger_instance.set_console_level(level)


def setup_logging_from_config(config_dict: Optional[Dict] = None) -> ToolkitLogger:
    """
    从配置字典重新初始化日志系统

    Args:
        config_dict: 配置字典，包含logging节
    """
    global _toolkit_logger_instance

    log_dir = None
    level = 'INFO'
    if config_dict and 'logging' in config_dict:
        logging_config = config_dict['logging'] or {}
        level = logging_config.get('level', 'INFO')
        log_file = logging_config.get('file')
        if log_file:
            log_dir = os.path.dirname(log_file) or 'logs'

    # 重新初始化日志系统
    ToolkitLogger._instance = None
    ToolkitLogger._initialized = False
    _toolkit_logger_instance = ToolkitLogger(log_dir, console_level=level)
    return _toolkit_logger_instance

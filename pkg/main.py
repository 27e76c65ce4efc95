#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Lefschetz Toolkit 主程序入口
"""

import sys
from pathlib import Path

# 添加src目录到Python路径
current_dir = Path(__file__).parent
src_dir = current_dir / "src"
sys.path.insert(0, str(src_dir))

try:
    from cli import run
except ImportError as e:
    print(f"❌ 导入错误: {e}", file=sys.stderr)
    print("请确保在正确的目录下运行，或检查src目录是否存在", file=sys.stderr)
    sys.exit(1)


if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))

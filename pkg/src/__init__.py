"""
Lefschetz Toolkit 包初始化
"""

__version__ = "1.0.0"
__author__ = "Lefschetz Toolkit Team"
__description__ = "Exact Lefschetz-property computations for graded Artinian algebras"

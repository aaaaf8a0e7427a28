"""Exact Schur-function arithmetic and machine checks for two-column Schur positivity and Narayana log-behaviour."""

from .partitions import Partition, SkewShape, parse_partition
from .qpoly import LaurentPoly, q
from .schur import SchurSum, lr_coefficient, lr_product, s

__version__ = "0.1.0"

__all__ = ["Partition", "SkewShape", "parse_partition", "LaurentPoly", "q", "SchurSum", "lr_coefficient", "lr_product", "s"]

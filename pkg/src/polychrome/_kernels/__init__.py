"""Kernel selection: compiled extension when available, pure Python otherwise.

Set POLYCHROME_PURE=1 to force the pure implementation (the benchmark and
the cross-checking tests import both modules explicitly).
"""
import os

from polychrome._kernels import pure as _pure

if os.environ.get("POLYCHROME_PURE") == "1":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from polychrome._kernels import _speedups as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

polymatroid_violation = _impl.polymatroid_violation
is_unit_increase = _impl.is_unit_increase
enumerate_matroid_tables = _impl.enumerate_matroid_tables
enumerate_polymatroid_tables = _impl.enumerate_polymatroid_tables
subtract_if_valid = _impl.subtract_if_valid
pointwise_le = _impl.pointwise_le
filter_pointwise_le = _impl.filter_pointwise_le

__all__ = [
    "BACKEND",
    "polymatroid_violation",
    "is_unit_increase",
    "enumerate_matroid_tables",
    "enumerate_polymatroid_tables",
    "subtract_if_valid",
    "pointwise_le",
    "filter_pointwise_le",
]

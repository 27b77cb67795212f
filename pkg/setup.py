"""Build script: compiles the optional kernel extension.

The package works without the extension (a pure-Python mirror is selected
at import time); set POLYCHROME_PURE=1 to skip compilation entirely.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("POLYCHROME_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "polychrome._kernels._speedups",
                    ["src/polychrome/_kernels/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

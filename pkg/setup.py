"""Build script: compiles the optional Cython pivot kernel.

The package works without the extension (a pure-Python kernel is selected at
import time); set UEQC_NO_EXT=1 to skip the build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("UEQC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext = Extension("ueqc._simplex_c", ["src/ueqc/_simplex_c.pyx"])
        ext.optional = True
        ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
        for e in ext_modules:
            e.optional = True
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

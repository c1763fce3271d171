"""Build script for the optional compiled kernels.

The package is fully functional without the extension (a pure-Python
backend is selected at import time), so the build degrades gracefully
when Cython or a C compiler is unavailable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("oddcross._speedups", ["src/oddcross/_speedups.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

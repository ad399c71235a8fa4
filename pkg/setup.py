"""Build script. The compiled kernel is optional: without Cython or a C
compiler the package installs anyway and falls back to the pure-Python
kernels at import time."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("switchiso._speedups", ["src/switchiso/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

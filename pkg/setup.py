import os

from setuptools import setup

# The compiled kernels are an optional speedup: if Cython (or a C compiler)
# is unavailable the build proceeds and the package falls back to the pure
# Python kernels at import time.  Set SEXTICLAB_NO_EXT=1 to skip the build.
ext_modules = []
if os.environ.get("SEXTICLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/sexticlab/_modp_cy.pyx"],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

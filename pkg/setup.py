"""Build script: compiles the optional C arithmetic kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed or unavailable Cython toolchain only costs
speed, not functionality.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/drinfeld/_kernel/ckernel.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

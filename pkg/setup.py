"""Build script: compiles the optional Cython speedup module when possible.

The package is fully functional without the extension; a missing compiler or
Cython just means the pure-Python kernels are used at runtime.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bcf._speedups",
                sources=["src/bcf/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

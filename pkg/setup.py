"""Build script for the optional compiled RK4 kernel.

The extension is marked optional: if no C compiler (or Cython) is
available the install still succeeds and the package falls back to the
pure Python integrator selected in ``ptjc.kernels`` at import time.
"""
from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "ptjc._rk4",
        sources=["src/ptjc/_rk4.pyx"],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)

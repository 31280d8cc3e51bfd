"""Build the compiled Jacobi sweep kernel when Cython and a C compiler
are available; the package falls back to the pure-Python kernel otherwise."""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/chromabound/_jacobi.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

"""Build hook for the optional compiled Levenshtein kernel.

The package is fully functional without the extension (a pure-Python
implementation is used as fallback), so a missing Cython or compiler is
tolerated instead of failing the install.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/fasa/_lev.pyx"], language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

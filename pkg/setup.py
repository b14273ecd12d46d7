"""Build script.

The package is pure Python; the parity-game kernel additionally compiles to a
C extension when Cython is available.  The extension is optional: if the
build fails or Cython is missing, installation proceeds and the pure-Python
kernel is used at import time.  Set DELAYGAMES_NO_EXT=1 to skip the
extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("DELAYGAMES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "delaygames._zielonka",
                    ["src/delaygames/_zielonka.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)

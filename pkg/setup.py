import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("POTALG_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "potalg._linalg._modkernel",
                    ["src/potalg/_linalg/_modkernel.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython: the pure-Python echelon fallback is used at import time.
        ext_modules = []

setup(ext_modules=ext_modules)

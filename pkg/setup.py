import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("RIGHTLCM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("rightlcm._kernels", ["src/rightlcm/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: the pure-Python kernels are used at runtime
        ext_modules = []

setup(ext_modules=ext_modules)

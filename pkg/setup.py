import os

from setuptools import Extension, setup

# The compiled kernel is optional: when Cython (or a C compiler) is missing
# the package falls back to the pure-Python kernels at import time.
_PYX = "src/trigraph/kernels/_ckernels.pyx"
ext_modules = []
if os.path.exists(_PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("trigraph.kernels._ckernels", [_PYX])], language_level=3
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)

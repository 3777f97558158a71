"""Builds the optional compiled kernels; the package works without them."""
from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("stsp._ckernels", ["src/stsp/_ckernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)

"""Builds the optional compiled kernel extension.

The package is fully functional without it: su11optics._kernels falls back
to the numpy/python implementation when the extension is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "su11optics._kernels._fast",
                ["src/su11optics/_kernels/_fast.pyx"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)

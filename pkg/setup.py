"""Build glue for the optional compiled kernel extension.

The package is fully functional without the extension; kernels/__init__.py
falls back to the pure-Python implementations when the import fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "twistcover.kernels._compiled",
                ["src/twistcover/kernels/_compiled.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)

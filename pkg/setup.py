"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python/numpy fallback is
selected at import time), so a failed compile only costs speed.
"""
import sys

from setuptools import Extension, setup


def extension_modules():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        print("hyperzeta: Cython or numpy unavailable, building without "
              "the compiled kernels", file=sys.stderr)
        return []
    ext = Extension(
        "hyperzeta._kernels",
        sources=["src/hyperzeta/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extension_modules())

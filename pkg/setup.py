"""Build script for the optional compiled kernels.

The package is pure Python plus one accelerator extension,
dickson._kernels._ckernels.  If Cython (or a C compiler) is missing the
build silently skips the extension and the package falls back to
dickson._kernels._pykernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "dickson._kernels._ckernels",
                ["src/dickson/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

"""Build the optional compiled kernels.

The package works without them: ``sturmian_apr.kernels`` falls back to the
pure Python implementations when ``_speedups`` cannot be imported.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("STURMIAN_APR_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("sturmian_apr._speedups", ["src/sturmian_apr/_speedups.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)

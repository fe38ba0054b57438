"""Build script for the optional compiled kernel extension.

The package works without the extension (a vectorized numpy fallback is
selected at import time), so a failed Cython build is not fatal for
development installs built with ``pip install -e . --no-build-isolation``.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ecctensor._kernels",
                ["src/ecctensor/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)

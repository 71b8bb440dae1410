"""Build glue for the optional compiled search kernels.

The package is fully functional without the extension; _kernels falls back
to the pure-Python implementations at import time if the build was skipped
or failed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "uncertain_centers._kernels._native",
                ["src/uncertain_centers/_kernels/_native.pyx"],
                language="c++",
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

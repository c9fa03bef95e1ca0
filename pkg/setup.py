import os

from setuptools import Extension, setup

# HOMKIT_SKIP_EXT=1 installs the pure-Python package only; the kernel
# backend then falls back to homkit._kernel._pykernel at import time.
ext_modules = []
if os.environ.get("HOMKIT_SKIP_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "homkit._kernel._cykernel",
                ["src/homkit/_kernel/_cykernel.pyx"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)

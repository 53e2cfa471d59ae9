"""Build script: compiles the optional gate-application kernel.

The package works without the compiled extension (a numpy fallback is
selected at import time), so a failed compile only degrades speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "xxzsov._gatekernel",
        ["src/xxzsov/_gatekernel.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)

from setuptools import Extension, setup

# The simulator's trial-accumulation loop is the one hot path in the
# package. It ships as a small Cython extension with a pure-Python
# fallback selected at import time, so a missing compiler (or Cython)
# only costs speed, never functionality.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "vrmenu._kernels._native",
                ["src/vrmenu/_kernels/_native.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)

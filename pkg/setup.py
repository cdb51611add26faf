import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation when the extension is absent (set CANONLAB_NO_EXT=1 to skip).
ext_modules = []
if not os.environ.get("CANONLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("canonlab._ckernel", ["src/canonlab/_ckernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
